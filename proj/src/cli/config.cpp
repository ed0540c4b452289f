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

#include "jetcert/cli/config.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "jetcert/error.hpp"
#include "jetcert/jet_counts.hpp"

namespace jetcert::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 6> kCommands{{
    {Command::certify3, "certify3"},
    {Command::sweep3, "sweep3"},
    {Command::profile, "profile"},
    {Command::certify_dim, "certify-dim"},
    {Command::oracle_check, "oracle-check"},
    {Command::convergence, "convergence"},
}};

constexpr std::array<std::pair<OutputFormat, std::string_view>, 3> kFormats{{
    {OutputFormat::json, "json"},
    {OutputFormat::csv, "csv"},
    {OutputFormat::text, "text"},
}};

void need(bool present, const char* flag, Command c) {
  require(present, ErrorKind::precondition,
          std::string(to_string(c)) + " requires " + flag);
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [value, name] : kCommands) {
    if (value == c) return name;
  }
  return "certify3";
}

std::optional<Command> command_from_string(std::string_view s) {
  for (const auto& [value, name] : kCommands) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
  for (const auto& [value, name] : kFormats) {
    if (value == f) return name;
  }
  return "json";
}

std::optional<OutputFormat> format_from_string(std::string_view s) {
  for (const auto& [value, name] : kFormats) {
    if (name == s) return value;
  }
  return std::nullopt;
}

OutputFormat RunConfig::resolved_format() const {
  if (format) return *format;
  return command == Command::profile ? OutputFormat::csv : OutputFormat::json;
}

ProfileOptions RunConfig::profile_options() const {
  ProfileOptions o;
  o.mu = mu;
  o.alpha2_override = alpha2_override;
  return o;
}

void RunConfig::validate() const {
  require(mu >= 2, ErrorKind::precondition, "--mu must be >= 2");
  require(degree_bound >= Rat(1), ErrorKind::precondition, "--degree-bound must be >= 1");
  switch (command) {
    case Command::certify3:
    case Command::profile:
    case Command::convergence:
      need(p.has_value(), "--p", command);
      need(q.has_value(), "--q", command);
      require(*p >= 1 && *q >= 1, ErrorKind::precondition, "--p and --q must be positive");
      break;
    case Command::sweep3:
      require(q_max >= 9, ErrorKind::precondition, "--q-max must be >= 9");
      break;
    case Command::certify_dim:
      require(d_max >= 4, ErrorKind::precondition, "--d-max must be >= 4");
      break;
    case Command::oracle_check:
      require(!d || *d >= 2, ErrorKind::precondition, "--d must be >= 2");
      require(k_max >= 0, ErrorKind::precondition, "--k-max must be >= 0");
      break;
  }
  if (command == Command::profile) {
    require(samples >= 2, ErrorKind::precondition, "--samples must be >= 2");
  }
  if (command == Command::convergence) {
    require(!ns.empty(), ErrorKind::precondition, "--n needs at least one value");
    require(std::all_of(ns.begin(), ns.end(), [](std::int64_t n) { return n >= 1; }),
            ErrorKind::precondition, "--n values must be >= 1");
  }
}

std::string_view payload_kind(const Payload& payload) {
  struct Namer {
    std::string_view operator()(const ThreefoldCertificate&) const { return "threefold_certificate"; }
    std::string_view operator()(const SweepReport&) const { return "sweep_report"; }
    std::string_view operator()(const ProfileReport&) const { return "profile"; }
    std::string_view operator()(const DimCertificate&) const { return "dim_certificate"; }
    std::string_view operator()(const DimRangeReport&) const { return "dim_range"; }
    std::string_view operator()(const OracleCheckReport&) const { return "oracle_check"; }
    std::string_view operator()(const ConvergenceReport&) const { return "convergence"; }
    std::string_view operator()(const ErrorReport&) const { return "error"; }
  };
  return std::visit(Namer{}, payload);
}

OracleCheckReport run_oracle_check(std::int64_t d_min, std::int64_t d_max, std::int64_t k_max) {
  OracleCheckReport report;
  report.d_min = d_min;
  report.d_max = d_max;
  report.k_max = k_max;
  for (std::int64_t d = d_min; d <= d_max; ++d) {
    for (std::int64_t k = 0; k <= k_max; ++k) {
      for (std::int64_t m = 0; m <= k + 2; ++m) {
        const BigInt closed = point_jet_dim(d, k, m);
        const std::int64_t brute = monomial_vanishing_oracle(d, k, m);
        ++report.checked;
        if (closed != brute) report.mismatches.push_back({d, k, m, closed, brute});
      }
    }
  }
  return report;
}

ConvergenceReport run_convergence(const Candidate& c, CountingMode mode,
                                  const std::vector<std::int64_t>& ns,
                                  const ProfileOptions& options) {
  require(!ns.empty(), ErrorKind::precondition, "convergence needs at least one n");
  const Rat threshold = c.degree_bound() / Rat(6);
  const auto judge = [&](const Rat& v) {
    return v < threshold ? Verdict::eliminated : Verdict::not_eliminated;
  };

  std::vector<std::int64_t> sorted = ns;
  std::sort(sorted.begin(), sorted.end());

  ConvergenceReport report{c, mode, threshold, {}, {}, Verdict::not_eliminated,
                           Verdict::not_eliminated, false};
  for (std::int64_t n : sorted) {
    DiscreteSumReport sum = discrete_budget_sum(c, mode, n, options);
    report.scaled_gaps.push_back(Rat(n) * sum.gap);
    report.sums.push_back(std::move(sum));
  }
  report.integral_verdict = judge(report.sums.back().integral);
  report.discrete_verdict = judge(report.sums.back().exact_sum);
  report.verdicts_agree = report.integral_verdict == report.discrete_verdict;
  return report;
}

}  // namespace jetcert::cli
