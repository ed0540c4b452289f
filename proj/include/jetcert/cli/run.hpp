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

#ifndef JETCERT_CLI_RUN_HPP
#define JETCERT_CLI_RUN_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "jetcert/cli/config.hpp"

namespace jetcert::cli {

std::string_view tool_version();

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitStructuredError = 3;

struct Execution {
  int exit_code = kExitOk;
  /// Rendered output in the requested format.
  std::string output;
  /// Present unless the configuration itself was invalid.
  std::optional<CertificateDocument> document;
  /// Suggested file name when writing into a directory.
  std::string file_name;
};

/// Computes the document for `config` without touching the filesystem.
/// Invalid configurations give kExitUsage and a message in `output`.
Execution execute(const RunConfig& config);

/// execute() and then write the output to config.output_path, the directory
/// named by $JETCERT_OUTPUT_DIR, or `out`, in that order of preference.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// CSV with header t,density,piece_provenance,t_exact,density_exact: every
/// breakpoint plus `samples` evenly spaced points per piece.
std::string emit_profile_csv(const Candidate& c, CountingMode mode, std::int64_t samples,
                             const ProfileOptions& options = {});

}  // namespace jetcert::cli

#endif  // JETCERT_CLI_RUN_HPP
