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

#ifndef JETCERT_CLI_SERIALIZE_HPP
#define JETCERT_CLI_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "jetcert/cli/config.hpp"

// JSON encoding of certificates. Rationals are always {"num": "...", "den":
// "..."} with decimal strings; see docs/certificate-schema.md.
namespace jetcert::cli {

using json = nlohmann::ordered_json;

json encode(const Rat& r);
json encode(const Candidate& c);
json encode(const ProfileOptions& o);
json encode(const CriticalNumbers& c);
json encode(const PiecewiseDensity& g);
json encode(const ThreefoldCertificate& c);
json encode(const SweepReport& r);
json encode(const DiscreteSumReport& r);
json encode(const ExpBound& b);
json encode(const DimCertificate& c);
json encode(const LemmaCheckReport& r);
json encode(const ProfileReport& r);
json encode(const DimRangeReport& r);
json encode(const OracleCheckReport& r);
json encode(const ConvergenceReport& r);
json encode(const ErrorReport& r);
json encode(const RunConfig& c);
json encode(const CertificateDocument& doc);

/// Inverse of encode. Throws Error(parse) on malformed input.
template <class T>
T decode(const json& j);

/// Pretty-printed document text with a trailing newline.
std::string dump_document(const CertificateDocument& doc);
CertificateDocument parse_document(const std::string& text);

}  // namespace jetcert::cli

#endif  // JETCERT_CLI_SERIALIZE_HPP
