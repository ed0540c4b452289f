/*
 * Copyright 2026 The jetcert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "jetcert/error.hpp"

namespace jetcert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::domain: return "domain";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::unsupported_degree: return "unsupported_degree";
    case ErrorKind::resource: return "resource";
    case ErrorKind::degenerate_candidate: return "degenerate_candidate";
    case ErrorKind::out_of_scope: return "out_of_scope";
    case ErrorKind::inadmissible_mode: return "inadmissible_mode";
    case ErrorKind::invalid_profile: return "invalid_profile";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace jetcert
