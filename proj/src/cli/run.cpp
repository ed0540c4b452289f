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

#include "jetcert/cli/run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "jetcert/cli/serialize.hpp"
#include "jetcert/error.hpp"

#ifndef JETCERT_VERSION
#define JETCERT_VERSION "0.0.0"
#endif

namespace jetcert::cli {

std::string_view tool_version() { return JETCERT_VERSION; }

namespace {

constexpr int kDecimalDigits = 12;

Candidate threefold_candidate(const RunConfig& config) {
  return Candidate(*config.p, *config.q, 3, config.degree_bound);
}

Payload compute(const RunConfig& config) {
  switch (config.command) {
    case Command::certify3:
      return certify_threefold(threefold_candidate(config), config.profile_options());
    case Command::sweep3:
      return sweep(config.q_max, config.degree_bound, config.profile_options());
    case Command::profile: {
      const Candidate c = threefold_candidate(config);
      PiecewiseDensity g = build_profile(c, config.mode, config.profile_options());
      const Rat budget = total_budget(g);
      return ProfileReport{c, config.mode, config.profile_options(), std::move(g), budget};
    }
    case Command::certify_dim: {
      if (config.d) return theorem_main_certificate(*config.d, config.degree_bound);
      DimRangeReport range{lemma_l2_check(4, config.d_max, config.degree_bound), {}, true};
      for (std::int64_t d = 4; d <= config.d_max; ++d) {
        range.certificates.push_back(theorem_main_certificate(d, config.degree_bound));
        range.all_established =
            range.all_established && range.certificates.back().contradiction_established();
      }
      range.all_established = range.all_established && range.lemma_check.all_pass;
      return range;
    }
    case Command::oracle_check:
      return run_oracle_check(2, config.d.value_or(4), config.k_max);
    case Command::convergence:
      return run_convergence(threefold_candidate(config), config.mode, config.ns,
                             config.profile_options());
  }
  fail(ErrorKind::precondition, "unknown command");
}

int exit_code_for(const Payload& payload) {
  struct Judge {
    int operator()(const ThreefoldCertificate& c) const {
      return c.verdict == Verdict::eliminated ? kExitOk : kExitVerdictFailed;
    }
    int operator()(const SweepReport& r) const {
      return r.all_eliminated ? kExitOk : kExitVerdictFailed;
    }
    int operator()(const ProfileReport&) const { return kExitOk; }
    int operator()(const DimCertificate& c) const {
      return c.contradiction_established() ? kExitOk : kExitVerdictFailed;
    }
    int operator()(const DimRangeReport& r) const {
      return r.all_established ? kExitOk : kExitVerdictFailed;
    }
    int operator()(const OracleCheckReport& r) const {
      return r.mismatches.empty() ? kExitOk : kExitVerdictFailed;
    }
    int operator()(const ConvergenceReport& r) const {
      return r.verdicts_agree ? kExitOk : kExitVerdictFailed;
    }
    int operator()(const ErrorReport&) const { return kExitStructuredError; }
  };
  return std::visit(Judge{}, payload);
}

std::string csv_rat(const Rat& r) { return r.decimal(kDecimalDigits); }

std::string sweep_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "p,q,ratio,mode,total_budget,threshold,verdict,large_q_bracket\n";
  const Rat threshold = r.degree_bound / Rat(6);
  for (const auto& e : r.entries) {
    os << e.candidate.p() << ',' << e.candidate.q() << ',' << e.candidate.ratio().str() << ','
       << to_string(e.mode) << ',' << e.total_budget.str() << ',' << threshold.str() << ','
       << to_string(e.verdict) << ',' << (e.large_q_bracket ? e.large_q_bracket->str() : "")
       << '\n';
  }
  return os.str();
}

std::string convergence_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "n,exact_sum,integral,gap,n_times_gap\n";
  for (std::size_t i = 0; i < r.sums.size(); ++i) {
    const auto& s = r.sums[i];
    os << s.n << ',' << s.exact_sum.str() << ',' << s.integral.str() << ',' << s.gap.str() << ','
       << r.scaled_gaps[i].str() << '\n';
  }
  return os.str();
}

struct TextRenderer {
  std::ostringstream& os;

  void operator()(const ThreefoldCertificate& c) const {
    os << "candidate " << c.candidate.str() << " (A^3 >= " << c.candidate.degree_bound() << ")\n"
       << "critical numbers: alpha1 = " << c.criticals.alpha1 << ", alpha2 = " << c.criticals.alpha2
       << (c.criticals.collapsed ? " (collapsed)" : "") << ", alpha3 = " << c.criticals.alpha3
       << "\n";
    for (const auto& m : c.mode_results) {
      os << "  " << to_string(m.mode) << ": budget " << m.total_budget << " ~ "
         << m.total_budget.decimal(6) << " -> " << to_string(m.verdict) << "\n";
    }
    os << "profile (" << to_string(c.mode) << "):\n";
    const auto& bp = c.profile.breakpoints();
    for (std::size_t i = 0; i < c.profile.size(); ++i) {
      os << "  (" << bp[i] << ", " << bp[i + 1] << "] " << to_string(c.profile.provenance()[i])
         << ": " << c.profile.pieces()[i].str() << "\n";
    }
    os << "total budget " << c.total_budget << " vs threshold " << c.threshold << ": "
       << to_string(c.verdict) << "\n";
    for (const auto& n : c.notes) {
      os << "note " << n.code << ": " << n.text;
      if (n.value) os << " [" << *n.value << "]";
      os << "\n";
    }
  }
  void operator()(const SweepReport& r) const {
    os << "sweep q <= " << r.q_max << ": " << r.entries.size() << " candidates, "
       << (r.all_eliminated ? "all eliminated" : "NOT all eliminated") << "\n";
    if (r.tightest_bracket) {
      os << "tightest large-q bracket " << *r.tightest_bracket << " ~ "
         << r.tightest_bracket->decimal(6) << " at " << r.tightest_bracket_at->str() << "\n";
    }
    if (r.tightest_budget_ratio) {
      os << "tightest budget/threshold " << *r.tightest_budget_ratio << " ~ "
         << r.tightest_budget_ratio->decimal(6) << " at " << r.tightest_budget_at->str() << "\n";
    }
  }
  void operator()(const ProfileReport& r) const {
    os << "profile " << r.candidate.str() << " " << to_string(r.mode) << ", total "
       << r.total_budget << "\n";
  }
  void operator()(const DimCertificate& c) const {
    os << "d = " << c.d << ": eps = " << c.epsilon << ", alpha = " << c.alpha << ", f4 = " << c.f4
       << " ~ " << c.f4.decimal(6) << "\n";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const auto& s = c.steps[i];
      os << "  (" << i + 1 << ") " << s.label << ": " << s.lhs << ' ' << s.relation << ' ' << s.rhs
         << (s.holds ? "  ok" : "  FAILS") << "\n";
    }
    os << c.verdict() << "; certified bound eps > " << c.epsilon << "\n";
  }
  void operator()(const DimRangeReport& r) const {
    for (const auto& c : r.certificates) {
      os << "d = " << c.d << ": f4 ~ " << c.f4.decimal(6) << ", " << c.verdict() << "\n";
    }
    const LimitRow& l = r.lemma_check.limit;
    os << "limit: e^(1/3) - e^(-2/3) <= " << l.difference_upper.decimal(9) << " < "
       << l.bound << (l.pass ? "  ok" : "  FAILS") << "\n";
    os << (r.all_established ? "all established" : "NOT all established") << "\n";
  }
  void operator()(const OracleCheckReport& r) const {
    os << "checked " << r.checked << " (d, k, m) triples, " << r.mismatches.size()
       << " mismatches\n";
  }
  void operator()(const ConvergenceReport& r) const {
    for (std::size_t i = 0; i < r.sums.size(); ++i) {
      os << "n = " << r.sums[i].n << ": sum ~ " << r.sums[i].exact_sum.decimal(8) << ", gap ~ "
         << r.sums[i].gap.decimal(8) << ", n*gap ~ " << r.scaled_gaps[i].decimal(6) << "\n";
    }
    os << "integral " << r.sums.back().integral << ": " << to_string(r.integral_verdict)
       << "; discrete: " << to_string(r.discrete_verdict) << "\n";
  }
  void operator()(const ErrorReport& e) const { os << "error (" << e.kind << "): " << e.message << "\n"; }
};

std::string default_file_name(const RunConfig& config) {
  std::string name(to_string(config.command));
  if (config.p && config.q) name += "_" + std::to_string(*config.p) + "_" + std::to_string(*config.q);
  if (config.command == Command::sweep3) name += "_q" + std::to_string(config.q_max);
  if (config.command == Command::certify_dim) {
    name += config.d ? "_d" + std::to_string(*config.d) : "_dmax" + std::to_string(config.d_max);
  }
  switch (config.resolved_format()) {
    case OutputFormat::json: return name + ".json";
    case OutputFormat::csv: return name + ".csv";
    case OutputFormat::text: return name + ".txt";
  }
  return name;
}

}  // namespace

std::string emit_profile_csv(const Candidate& c, CountingMode mode, std::int64_t samples,
                             const ProfileOptions& options) {
  require(samples >= 2, ErrorKind::precondition, "profile csv: samples must be >= 2");
  const PiecewiseDensity g = build_profile(c, mode, options);
  std::ostringstream os;
  os << "t,density,piece_provenance,t_exact,density_exact\n";
  const auto row = [&](const Rat& t) {
    const Rat v = g(t);
    os << csv_rat(t) << ',' << csv_rat(v) << ',' << to_string(g.provenance()[g.piece_index(t)])
       << ',' << t.str() << ',' << v.str() << '\n';
  };
  const auto& bp = g.breakpoints();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Rat step = (bp[i + 1] - bp[i]) / Rat(samples);
    for (std::int64_t j = 0; j < samples; ++j) row(bp[i] + step * Rat(j));
  }
  row(bp.back());
  return os.str();
}

Execution execute(const RunConfig& config) {
  Execution ex;
  ex.file_name = default_file_name(config);
  try {
    config.validate();
  } catch (const Error& e) {
    ex.exit_code = kExitUsage;
    ex.output = std::string("usage error: ") + e.what() + "\n";
    return ex;
  }

  const OutputFormat format = config.resolved_format();
  const bool csv_ok = config.command == Command::profile || config.command == Command::sweep3 ||
                      config.command == Command::convergence;
  if (format == OutputFormat::csv && !csv_ok) {
    ex.exit_code = kExitUsage;
    ex.output = "usage error: csv output is available for profile, sweep3 and convergence\n";
    return ex;
  }

  CertificateDocument doc;
  doc.tool_version = std::string(tool_version());
  doc.input = config;
  try {
    doc.result = compute(config);
  } catch (const Error& e) {
    doc.result = ErrorReport{std::string(to_string(e.kind())), e.what()};
  }
  ex.exit_code = exit_code_for(doc.result);

  if (format == OutputFormat::json) {
    ex.output = dump_document(doc);
  } else if (std::holds_alternative<ErrorReport>(doc.result) || format == OutputFormat::text) {
    std::ostringstream os;
    std::visit(TextRenderer{os}, doc.result);
    ex.output = os.str();
  } else if (config.command == Command::profile) {
    ex.output = emit_profile_csv(threefold_candidate(config), config.mode, config.samples,
                                 config.profile_options());
  } else if (config.command == Command::sweep3) {
    ex.output = sweep_csv(std::get<SweepReport>(doc.result));
  } else {
    ex.output = convergence_csv(std::get<ConvergenceReport>(doc.result));
  }
  ex.document = std::move(doc);
  return ex;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Execution ex = execute(config);
  if (ex.exit_code == kExitUsage) {
    err << ex.output;
    return ex.exit_code;
  }

  std::optional<std::filesystem::path> target;
  if (config.output_path) {
    target = *config.output_path;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    std::filesystem::create_directories(dir);
    target = std::filesystem::path(dir) / ex.file_name;
  }

  if (!target) {
    out << ex.output;
    return ex.exit_code;
  }
  std::ofstream file(*target, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << target->string() << "\n";
    return kExitStructuredError;
  }
  file << ex.output;
  return ex.exit_code;
}

}  // namespace jetcert::cli
