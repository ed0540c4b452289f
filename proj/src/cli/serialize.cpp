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

#include "jetcert/cli/serialize.hpp"

#include "jetcert/error.hpp"

namespace jetcert::cli {

template <> Rat decode<Rat>(const json& j);
template <> std::int64_t decode<std::int64_t>(const json& j);
template <> Candidate decode<Candidate>(const json& j);
template <> ProfileOptions decode<ProfileOptions>(const json& j);
template <> CriticalNumbers decode<CriticalNumbers>(const json& j);
template <> PiecewiseDensity decode<PiecewiseDensity>(const json& j);
template <> ModeResult decode<ModeResult>(const json& j);
template <> Note decode<Note>(const json& j);
template <> ThreefoldCertificate decode<ThreefoldCertificate>(const json& j);
template <> SweepEntry decode<SweepEntry>(const json& j);
template <> SweepReport decode<SweepReport>(const json& j);
template <> DiscreteSumReport decode<DiscreteSumReport>(const json& j);
template <> ExpBound decode<ExpBound>(const json& j);
template <> InequalityStep decode<InequalityStep>(const json& j);
template <> DimCertificate decode<DimCertificate>(const json& j);
template <> LemmaRow decode<LemmaRow>(const json& j);
template <> LemmaCheckReport decode<LemmaCheckReport>(const json& j);
template <> ProfileReport decode<ProfileReport>(const json& j);
template <> DimRangeReport decode<DimRangeReport>(const json& j);
template <> OracleMismatch decode<OracleMismatch>(const json& j);
template <> OracleCheckReport decode<OracleCheckReport>(const json& j);
template <> ConvergenceReport decode<ConvergenceReport>(const json& j);
template <> ErrorReport decode<ErrorReport>(const json& j);
template <> RunConfig decode<RunConfig>(const json& j);
template <> CertificateDocument decode<CertificateDocument>(const json& j);

static json encode(const ModeResult& r);
static json encode(const Note& n);
static json encode(const SweepEntry& e);
static json encode(const InequalityStep& s);
static json encode(const LemmaRow& r);
static json encode(const OracleMismatch& m);
static json encode(std::int64_t v) { return v; }

namespace {

const json& field(const json& j, const char* key) {
  require(j.is_object(), ErrorKind::parse, std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  require(it != j.end(), ErrorKind::parse, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  require(v.is_number_integer(), ErrorKind::parse, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = field(j, key);
  require(v.is_string(), ErrorKind::parse, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool get_bool(const json& j, const char* key) {
  const json& v = field(j, key);
  require(v.is_boolean(), ErrorKind::parse, std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

Rat get_rat(const json& j, const char* key) { return decode<Rat>(field(j, key)); }

json encode_opt(const std::optional<Rat>& r) { return r ? encode(*r) : json(nullptr); }

std::optional<Rat> get_opt_rat(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return decode<Rat>(v);
}

template <class T>
json encode_list(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& item : items) out.push_back(encode(item));
  return out;
}

template <class T>
std::vector<T> decode_list(const json& j, const char* key) {
  const json& v = field(j, key);
  require(v.is_array(), ErrorKind::parse, std::string("field '") + key + "' must be an array");
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(decode<T>(item));
  return out;
}

CountingMode get_mode(const json& j, const char* key) {
  const auto m = counting_mode_from_string(get_string(j, key));
  require(m.has_value(), ErrorKind::parse, "unknown counting mode");
  return *m;
}

Verdict get_verdict(const json& j, const char* key) {
  const auto v = verdict_from_string(get_string(j, key));
  require(v.has_value(), ErrorKind::parse, "unknown verdict");
  return *v;
}

}  // namespace

static json encode(const ModeResult& r) {
  return {{"mode", to_string(r.mode)},
          {"total_budget", encode(r.total_budget)},
          {"verdict", to_string(r.verdict)}};
}

static json encode(const Note& n) {
  return {{"code", n.code}, {"text", n.text}, {"value", encode_opt(n.value)}};
}

static json encode(const SweepEntry& e) {
  return {{"candidate", encode(e.candidate)},
          {"mode", to_string(e.mode)},
          {"total_budget", encode(e.total_budget)},
          {"verdict", to_string(e.verdict)},
          {"large_q_bracket", encode_opt(e.large_q_bracket)}};
}

static json encode(const InequalityStep& s) {
  return {{"label", s.label},
          {"relation", s.relation},
          {"lhs", encode(s.lhs)},
          {"rhs", encode(s.rhs)},
          {"holds", s.holds},
          {"reduced_lhs", encode_opt(s.reduced_lhs)},
          {"reduced_rhs", encode_opt(s.reduced_rhs)},
          {"detail", s.detail}};
}

static json encode(const LemmaRow& r) {
  return {{"d", r.d}, {"f4", encode(r.f4)}, {"pass", r.pass}};
}

static json encode(const OracleMismatch& m) {
  return {{"d", m.d}, {"k", m.k}, {"m", m.m}, {"closed_form", jetcert::to_string(m.closed_form)},
          {"oracle", m.oracle}};
}

// ---------------------------------------------------------------- encoders

json encode(const Rat& r) { return {{"num", jetcert::to_string(r.num())}, {"den", jetcert::to_string(r.den())}}; }

json encode(const Candidate& c) {
  return {{"p", c.p()}, {"q", c.q()}, {"dim", c.dim()}, {"degree_bound", encode(c.degree_bound())}};
}

json encode(const ProfileOptions& o) {
  return {{"mu", o.mu},
          {"halving", o.halving},
          {"alpha2_override", encode_opt(o.alpha2_override)},
          {"drop_defects", o.drop_defects}};
}

json encode(const CriticalNumbers& c) {
  return {{"alpha1", encode(c.alpha1)},
          {"alpha2", encode(c.alpha2)},
          {"alpha3", encode(c.alpha3)},
          {"alpha2_raw", encode(c.alpha2_raw)},
          {"collapsed", c.collapsed}};
}

json encode(const PiecewiseDensity& g) {
  json pieces = json::array();
  const auto& bp = g.breakpoints();
  for (std::size_t i = 0; i < g.size(); ++i) {
    pieces.push_back({{"lower", encode(bp[i])},
                      {"upper", encode(bp[i + 1])},
                      {"provenance", to_string(g.provenance()[i])},
                      {"coefficients", encode_list(g.pieces()[i].coefficients())},
                      {"integral", encode(poly_integrate(g.pieces()[i], bp[i], bp[i + 1]))}});
  }
  return {{"breakpoints", encode_list(bp)}, {"pieces", pieces}};
}

json encode(const ThreefoldCertificate& c) {
  return {{"candidate", encode(c.candidate)},
          {"options", encode(c.options)},
          {"mode", to_string(c.mode)},
          {"criticals", encode(c.criticals)},
          {"profile", encode(c.profile)},
          {"total_budget", encode(c.total_budget)},
          {"threshold", encode(c.threshold)},
          {"verdict", to_string(c.verdict)},
          {"mode_results", encode_list(c.mode_results)},
          {"large_q_bracket", encode_opt(c.large_q_bracket)},
          {"notes", encode_list(c.notes)}};
}

json encode(const SweepReport& r) {
  return {{"q_max", r.q_max},
          {"degree_bound", encode(r.degree_bound)},
          {"candidate_count", r.entries.size()},
          {"all_eliminated", r.all_eliminated},
          {"tightest_bracket", encode_opt(r.tightest_bracket)},
          {"tightest_bracket_at", r.tightest_bracket_at ? encode(*r.tightest_bracket_at) : json(nullptr)},
          {"tightest_budget_ratio", encode_opt(r.tightest_budget_ratio)},
          {"tightest_budget_at", r.tightest_budget_at ? encode(*r.tightest_budget_at) : json(nullptr)},
          {"entries", encode_list(r.entries)}};
}

json encode(const DiscreteSumReport& r) {
  json notes = json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return {{"candidate", encode(r.candidate)},
          {"mode", to_string(r.mode)},
          {"n", r.n},
          {"exact_sum", encode(r.exact_sum)},
          {"integral", encode(r.integral)},
          {"gap", encode(r.gap)},
          {"notes", notes}};
}

json encode(const ExpBound& b) {
  return {{"x", encode(b.x)}, {"lower", encode(b.lower)}, {"upper", encode(b.upper)},
          {"terms", b.terms}};
}

json encode(const DimCertificate& c) {
  return {{"d", c.d},
          {"degree_bound", encode(c.degree_bound)},
          {"epsilon", encode(c.epsilon)},
          {"alpha", encode(c.alpha)},
          {"f4", encode(c.f4)},
          {"steps", encode_list(c.steps)},
          {"verdict", c.verdict()},
          {"certified_bound", encode(c.epsilon)}};
}

json encode(const LemmaCheckReport& r) {
  const LimitRow& l = r.limit;
  return {{"d_min", r.d_min},
          {"d_max", r.d_max},
          {"degree_bound", encode(r.degree_bound)},
          {"rows", encode_list(r.rows)},
          {"limit",
           {{"e_one_third", encode(l.e_one_third)},
            {"e_minus_two_thirds", encode(l.e_minus_two_thirds)},
            {"difference_upper", encode(l.difference_upper)},
            {"difference_lower", encode(l.difference_lower)},
            {"bound", encode(l.bound)},
            {"pass", l.pass}}},
          {"all_pass", r.all_pass}};
}

json encode(const ProfileReport& r) {
  return {{"candidate", encode(r.candidate)},
          {"mode", to_string(r.mode)},
          {"options", encode(r.options)},
          {"profile", encode(r.profile)},
          {"total_budget", encode(r.total_budget)}};
}

json encode(const DimRangeReport& r) {
  return {{"lemma_check", encode(r.lemma_check)},
          {"certificates", encode_list(r.certificates)},
          {"all_established", r.all_established}};
}

json encode(const OracleCheckReport& r) {
  return {{"d_min", r.d_min}, {"d_max", r.d_max},   {"k_max", r.k_max},
          {"checked", r.checked}, {"mismatches", encode_list(r.mismatches)}};
}

json encode(const ConvergenceReport& r) {
  return {{"candidate", encode(r.candidate)},
          {"mode", to_string(r.mode)},
          {"threshold", encode(r.threshold)},
          {"sums", encode_list(r.sums)},
          {"scaled_gaps", encode_list(r.scaled_gaps)},
          {"integral_verdict", to_string(r.integral_verdict)},
          {"discrete_verdict", to_string(r.discrete_verdict)},
          {"verdicts_agree", r.verdicts_agree}};
}

json encode(const ErrorReport& r) { return {{"kind", r.kind}, {"message", r.message}}; }

json encode(const RunConfig& c) {
  const auto opt_int = [](const std::optional<std::int64_t>& v) {
    return v ? json(*v) : json(nullptr);
  };
  return {{"command", to_string(c.command)},
          {"p", opt_int(c.p)},
          {"q", opt_int(c.q)},
          {"d", opt_int(c.d)},
          {"q_max", c.q_max},
          {"d_max", c.d_max},
          {"k_max", c.k_max},
          {"degree_bound", encode(c.degree_bound)},
          {"mu", c.mu},
          {"alpha2_override", encode_opt(c.alpha2_override)},
          {"mode", to_string(c.mode)},
          {"samples", c.samples},
          {"ns", encode_list(c.ns)},
          {"format", c.format ? json(to_string(*c.format)) : json(nullptr)},
          {"output_path", c.output_path ? json(*c.output_path) : json(nullptr)}};
}

json encode(const CertificateDocument& doc) {
  json result = std::visit([](const auto& payload) { return encode(payload); }, doc.result);
  json out = {{"schema_version", doc.schema_version},
              {"tool_version", doc.tool_version},
              {"input", encode(doc.input)},
              {"result_kind", payload_kind(doc.result)}};
  out[std::holds_alternative<ErrorReport>(doc.result) ? "error" : "result"] = std::move(result);
  return out;
}

// ---------------------------------------------------------------- decoders

template <>
Rat decode<Rat>(const json& j) {
  const json& num = field(j, "num");
  const json& den = field(j, "den");
  require(num.is_string() && den.is_string(), ErrorKind::parse,
          "rational parts must be decimal strings");
  const Rat n = Rat::parse(num.get<std::string>());
  const Rat d = Rat::parse(den.get<std::string>());
  require(d.sign() > 0, ErrorKind::parse, "rational denominator must be positive");
  return n / d;
}

template <>
std::int64_t decode<std::int64_t>(const json& j) {
  require(j.is_number_integer(), ErrorKind::parse, "expected an integer");
  return j.get<std::int64_t>();
}

template <>
Candidate decode<Candidate>(const json& j) {
  return Candidate(get_int(j, "p"), get_int(j, "q"), get_int(j, "dim"), get_rat(j, "degree_bound"));
}

template <>
ProfileOptions decode<ProfileOptions>(const json& j) {
  ProfileOptions o;
  o.mu = get_int(j, "mu");
  o.halving = get_int(j, "halving");
  o.alpha2_override = get_opt_rat(j, "alpha2_override");
  o.drop_defects = get_bool(j, "drop_defects");
  return o;
}

template <>
CriticalNumbers decode<CriticalNumbers>(const json& j) {
  return {get_rat(j, "alpha1"), get_rat(j, "alpha2"), get_rat(j, "alpha3"),
          get_rat(j, "alpha2_raw"), get_bool(j, "collapsed")};
}

template <>
PiecewiseDensity decode<PiecewiseDensity>(const json& j) {
  std::vector<Rat> breakpoints = decode_list<Rat>(j, "breakpoints");
  std::vector<Poly> pieces;
  std::vector<Provenance> provenance;
  const json& items = field(j, "pieces");
  require(items.is_array(), ErrorKind::parse, "'pieces' must be an array");
  for (const auto& item : items) {
    pieces.emplace_back(decode_list<Rat>(item, "coefficients"));
    const auto p = provenance_from_string(get_string(item, "provenance"));
    require(p.has_value(), ErrorKind::parse, "unknown provenance label");
    provenance.push_back(*p);
  }
  return PiecewiseDensity(std::move(breakpoints), std::move(pieces), std::move(provenance));
}

template <>
ModeResult decode<ModeResult>(const json& j) {
  return {get_mode(j, "mode"), get_rat(j, "total_budget"), get_verdict(j, "verdict")};
}

template <>
Note decode<Note>(const json& j) {
  return {get_string(j, "code"), get_string(j, "text"), get_opt_rat(j, "value")};
}

template <>
ThreefoldCertificate decode<ThreefoldCertificate>(const json& j) {
  return {decode<Candidate>(field(j, "candidate")),
          decode<ProfileOptions>(field(j, "options")),
          get_mode(j, "mode"),
          decode<CriticalNumbers>(field(j, "criticals")),
          decode<PiecewiseDensity>(field(j, "profile")),
          get_rat(j, "total_budget"),
          get_rat(j, "threshold"),
          get_verdict(j, "verdict"),
          decode_list<ModeResult>(j, "mode_results"),
          get_opt_rat(j, "large_q_bracket"),
          decode_list<Note>(j, "notes")};
}

template <>
SweepEntry decode<SweepEntry>(const json& j) {
  return {decode<Candidate>(field(j, "candidate")), get_mode(j, "mode"),
          get_rat(j, "total_budget"), get_verdict(j, "verdict"),
          get_opt_rat(j, "large_q_bracket")};
}

template <>
SweepReport decode<SweepReport>(const json& j) {
  const auto opt_candidate = [&](const char* key) -> std::optional<Candidate> {
    const json& v = field(j, key);
    if (v.is_null()) return std::nullopt;
    return decode<Candidate>(v);
  };
  SweepReport r;
  r.q_max = get_int(j, "q_max");
  r.degree_bound = get_rat(j, "degree_bound");
  r.entries = decode_list<SweepEntry>(j, "entries");
  r.all_eliminated = get_bool(j, "all_eliminated");
  r.tightest_bracket = get_opt_rat(j, "tightest_bracket");
  r.tightest_bracket_at = opt_candidate("tightest_bracket_at");
  r.tightest_budget_ratio = get_opt_rat(j, "tightest_budget_ratio");
  r.tightest_budget_at = opt_candidate("tightest_budget_at");
  return r;
}

template <>
DiscreteSumReport decode<DiscreteSumReport>(const json& j) {
  DiscreteSumReport r{decode<Candidate>(field(j, "candidate")),
                      get_mode(j, "mode"),
                      get_int(j, "n"),
                      get_rat(j, "exact_sum"),
                      get_rat(j, "integral"),
                      get_rat(j, "gap"),
                      {}};
  for (const auto& n : field(j, "notes")) {
    require(n.is_string(), ErrorKind::parse, "notes must be strings");
    r.notes.push_back(n.get<std::string>());
  }
  return r;
}

template <>
ExpBound decode<ExpBound>(const json& j) {
  return {get_rat(j, "x"), get_rat(j, "lower"), get_rat(j, "upper"),
          static_cast<unsigned>(get_int(j, "terms"))};
}

template <>
InequalityStep decode<InequalityStep>(const json& j) {
  return {get_string(j, "label"),         get_string(j, "relation"),
          get_rat(j, "lhs"),              get_rat(j, "rhs"),
          get_bool(j, "holds"),           get_opt_rat(j, "reduced_lhs"),
          get_opt_rat(j, "reduced_rhs"),  get_string(j, "detail")};
}

template <>
DimCertificate decode<DimCertificate>(const json& j) {
  DimCertificate c;
  c.d = get_int(j, "d");
  c.degree_bound = get_rat(j, "degree_bound");
  c.epsilon = get_rat(j, "epsilon");
  c.alpha = get_rat(j, "alpha");
  c.f4 = get_rat(j, "f4");
  c.steps = decode_list<InequalityStep>(j, "steps");
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (!c.steps[i].holds) {
      c.failed_at = i + 1;
      break;
    }
  }
  require(get_string(j, "verdict") == c.verdict(), ErrorKind::parse,
          "verdict does not match the recorded steps");
  return c;
}

template <>
LemmaRow decode<LemmaRow>(const json& j) {
  return {get_int(j, "d"), get_rat(j, "f4"), get_bool(j, "pass")};
}

template <>
LemmaCheckReport decode<LemmaCheckReport>(const json& j) {
  LemmaCheckReport r;
  r.d_min = get_int(j, "d_min");
  r.d_max = get_int(j, "d_max");
  r.degree_bound = get_rat(j, "degree_bound");
  r.rows = decode_list<LemmaRow>(j, "rows");
  const json& l = field(j, "limit");
  r.limit.e_one_third = decode<ExpBound>(field(l, "e_one_third"));
  r.limit.e_minus_two_thirds = decode<ExpBound>(field(l, "e_minus_two_thirds"));
  r.limit.difference_upper = get_rat(l, "difference_upper");
  r.limit.difference_lower = get_rat(l, "difference_lower");
  r.limit.bound = get_rat(l, "bound");
  r.limit.pass = get_bool(l, "pass");
  r.all_pass = get_bool(j, "all_pass");
  return r;
}

template <>
ProfileReport decode<ProfileReport>(const json& j) {
  return {decode<Candidate>(field(j, "candidate")), get_mode(j, "mode"),
          decode<ProfileOptions>(field(j, "options")),
          decode<PiecewiseDensity>(field(j, "profile")), get_rat(j, "total_budget")};
}

template <>
DimRangeReport decode<DimRangeReport>(const json& j) {
  return {decode<LemmaCheckReport>(field(j, "lemma_check")),
          decode_list<DimCertificate>(j, "certificates"), get_bool(j, "all_established")};
}

template <>
OracleMismatch decode<OracleMismatch>(const json& j) {
  return {get_int(j, "d"), get_int(j, "k"), get_int(j, "m"),
          Rat::parse(get_string(j, "closed_form")).num(), get_int(j, "oracle")};
}

template <>
OracleCheckReport decode<OracleCheckReport>(const json& j) {
  OracleCheckReport r;
  r.d_min = get_int(j, "d_min");
  r.d_max = get_int(j, "d_max");
  r.k_max = get_int(j, "k_max");
  r.checked = get_int(j, "checked");
  r.mismatches = decode_list<OracleMismatch>(j, "mismatches");
  return r;
}

template <>
ConvergenceReport decode<ConvergenceReport>(const json& j) {
  return {decode<Candidate>(field(j, "candidate")),
          get_mode(j, "mode"),
          get_rat(j, "threshold"),
          decode_list<DiscreteSumReport>(j, "sums"),
          decode_list<Rat>(j, "scaled_gaps"),
          get_verdict(j, "integral_verdict"),
          get_verdict(j, "discrete_verdict"),
          get_bool(j, "verdicts_agree")};
}

template <>
ErrorReport decode<ErrorReport>(const json& j) {
  return {get_string(j, "kind"), get_string(j, "message")};
}

template <>
RunConfig decode<RunConfig>(const json& j) {
  const auto opt_int = [&](const char* key) -> std::optional<std::int64_t> {
    const json& v = field(j, key);
    if (v.is_null()) return std::nullopt;
    return decode<std::int64_t>(v);
  };
  RunConfig c;
  const auto command = command_from_string(get_string(j, "command"));
  require(command.has_value(), ErrorKind::parse, "unknown command");
  c.command = *command;
  c.p = opt_int("p");
  c.q = opt_int("q");
  c.d = opt_int("d");
  c.q_max = get_int(j, "q_max");
  c.d_max = get_int(j, "d_max");
  c.k_max = get_int(j, "k_max");
  c.degree_bound = get_rat(j, "degree_bound");
  c.mu = get_int(j, "mu");
  c.alpha2_override = get_opt_rat(j, "alpha2_override");
  c.mode = get_mode(j, "mode");
  c.samples = get_int(j, "samples");
  c.ns = decode_list<std::int64_t>(j, "ns");
  const json& format = field(j, "format");
  if (!format.is_null()) {
    require(format.is_string(), ErrorKind::parse, "format must be a string");
    const auto f = format_from_string(format.get<std::string>());
    require(f.has_value(), ErrorKind::parse, "unknown output format");
    c.format = *f;
  }
  const json& path = field(j, "output_path");
  if (!path.is_null()) {
    require(path.is_string(), ErrorKind::parse, "output_path must be a string");
    c.output_path = path.get<std::string>();
  }
  return c;
}

template <>
CertificateDocument decode<CertificateDocument>(const json& j) {
  CertificateDocument doc;
  doc.schema_version = get_string(j, "schema_version");
  require(doc.schema_version == kSchemaVersion, ErrorKind::parse,
          "unsupported schema_version " + doc.schema_version);
  doc.tool_version = get_string(j, "tool_version");
  doc.input = decode<RunConfig>(field(j, "input"));
  const std::string kind = get_string(j, "result_kind");
  if (kind == "error") {
    doc.result = decode<ErrorReport>(field(j, "error"));
    return doc;
  }
  const json& r = field(j, "result");
  if (kind == "threefold_certificate") {
    doc.result = decode<ThreefoldCertificate>(r);
  } else if (kind == "sweep_report") {
    doc.result = decode<SweepReport>(r);
  } else if (kind == "profile") {
    doc.result = decode<ProfileReport>(r);
  } else if (kind == "dim_certificate") {
    doc.result = decode<DimCertificate>(r);
  } else if (kind == "dim_range") {
    doc.result = decode<DimRangeReport>(r);
  } else if (kind == "oracle_check") {
    doc.result = decode<OracleCheckReport>(r);
  } else if (kind == "convergence") {
    doc.result = decode<ConvergenceReport>(r);
  } else {
    fail(ErrorKind::parse, "unknown result_kind '" + kind + "'");
  }
  return doc;
}

std::string dump_document(const CertificateDocument& doc) { return encode(doc).dump(2) + "\n"; }

CertificateDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
  return decode<CertificateDocument>(j);
}

}  // namespace jetcert::cli
