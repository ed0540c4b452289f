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

#ifndef JETCERT_CLI_CONFIG_HPP
#define JETCERT_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jetcert/discrete_budget.hpp"
#include "jetcert/general.hpp"
#include "jetcert/threefold.hpp"

namespace jetcert::cli {

inline constexpr std::string_view kSchemaVersion = "1";
/// Environment variable naming the directory documents go to when no
/// explicit output path is given.
inline constexpr const char* kOutputDirEnv = "JETCERT_OUTPUT_DIR";

enum class Command { certify3, sweep3, profile, certify_dim, oracle_check, convergence };
enum class OutputFormat { json, csv, text };

std::string_view to_string(Command c);
std::optional<Command> command_from_string(std::string_view s);
std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> format_from_string(std::string_view s);

struct RunConfig {
  Command command = Command::certify3;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> d;
  std::int64_t q_max = 9;
  std::int64_t d_max = 64;
  std::int64_t k_max = 30;
  Rat degree_bound{1};
  std::int64_t mu = 3;
  std::optional<Rat> alpha2_override;
  CountingMode mode = CountingMode::small_q;
  std::int64_t samples = 4;
  std::vector<std::int64_t> ns{70, 140, 280, 560};
  /// Unset means the command's natural format (csv for profile, json otherwise).
  std::optional<OutputFormat> format;
  std::optional<std::string> output_path;

  OutputFormat resolved_format() const;
  ProfileOptions profile_options() const;
  /// Throws Error(precondition) when a command-specific field is missing.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ProfileReport {
  Candidate candidate;
  CountingMode mode;
  ProfileOptions options;
  PiecewiseDensity profile;
  Rat total_budget;

  friend bool operator==(const ProfileReport&, const ProfileReport&) = default;
};

struct DimRangeReport {
  LemmaCheckReport lemma_check;
  std::vector<DimCertificate> certificates;
  bool all_established = false;

  friend bool operator==(const DimRangeReport&, const DimRangeReport&) = default;
};

struct OracleMismatch {
  std::int64_t d, k, m;
  BigInt closed_form;
  std::int64_t oracle;

  friend bool operator==(const OracleMismatch&, const OracleMismatch&) = default;
};

struct OracleCheckReport {
  std::int64_t d_min = 2;
  std::int64_t d_max = 4;
  std::int64_t k_max = 30;
  std::int64_t checked = 0;
  std::vector<OracleMismatch> mismatches;

  friend bool operator==(const OracleCheckReport&, const OracleCheckReport&) = default;
};

struct ConvergenceReport {
  Candidate candidate;
  CountingMode mode;
  Rat threshold;
  std::vector<DiscreteSumReport> sums;
  /// n * gap for each entry of `sums`.
  std::vector<Rat> scaled_gaps;
  Verdict integral_verdict;
  Verdict discrete_verdict;  // at the largest n
  bool verdicts_agree = false;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

struct ErrorReport {
  std::string kind;
  std::string message;

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

using Payload = std::variant<ThreefoldCertificate, SweepReport, ProfileReport, DimCertificate,
                             DimRangeReport, OracleCheckReport, ConvergenceReport, ErrorReport>;

/// Name written to the document's "result_kind" field.
std::string_view payload_kind(const Payload& payload);

struct CertificateDocument {
  std::string schema_version{kSchemaVersion};
  std::string tool_version;
  RunConfig input;
  Payload result{ErrorReport{}};

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

OracleCheckReport run_oracle_check(std::int64_t d_min, std::int64_t d_max, std::int64_t k_max);

ConvergenceReport run_convergence(const Candidate& c, CountingMode mode,
                                  const std::vector<std::int64_t>& ns,
                                  const ProfileOptions& options = {});

}  // namespace jetcert::cli

#endif  // JETCERT_CLI_CONFIG_HPP
