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

#include "jetcert/general.hpp"

#include "jetcert/error.hpp"

namespace jetcert {

Rat f4_value(std::int64_t d, const Rat& alpha, const Rat& eps) {
  require(d >= 1, ErrorKind::precondition, "f4: dimension must be >= 1");
  require(eps.sign() >= 0, ErrorKind::precondition, "f4: eps must be >= 0");
  require(eps <= alpha, ErrorKind::precondition,
          "f4: eps = " + eps.str() + " exceeds alpha = " + alpha.str());
  const auto e = static_cast<unsigned>(d);
  return alpha.pow(e) - (alpha - eps).pow(e);
}

bool multiplicity_criterion(std::int64_t d, const Rat& alpha, const Rat& eps,
                            const Rat& degree_bound) {
  require(degree_bound >= Rat(1), ErrorKind::precondition, "degree bound must be >= 1");
  return f4_value(d, alpha, eps) < degree_bound;
}

Rat critical_epsilon(std::int64_t d) { return Rat(3 * d + 1, 3 * d * d); }

Rat critical_alpha(std::int64_t d) { return Rat(3 * d + 1, 3 * d); }

std::string DimCertificate::verdict() const {
  if (!failed_at) return "CONTRADICTION_ESTABLISHED";
  return "FAILED_AT(" + std::to_string(*failed_at) + ")";
}

DimCertificate theorem_main_certificate(std::int64_t d, const Rat& degree_bound) {
  require(d >= 4, ErrorKind::out_of_scope,
          "general-dimension certificate needs d >= 4, got " + std::to_string(d));
  require(degree_bound >= Rat(1), ErrorKind::precondition, "degree bound must be >= 1");

  DimCertificate cert;
  cert.d = d;
  cert.degree_bound = degree_bound;
  cert.epsilon = critical_epsilon(d);
  cert.alpha = critical_alpha(d);
  cert.f4 = f4_value(d, cert.alpha, cert.epsilon);

  // (1) Assuming eps(eta, A) <= eps, the jet count leaves sections of
  // multiplicity alpha*n, so m(A) > alpha.
  cert.steps.push_back({"f4_below_degree_bound", "<", cert.f4, degree_bound,
                        cert.f4 < degree_bound, std::nullopt, std::nullopt,
                        "alpha^d - (alpha - eps)^d < A^d gives m(A) > alpha"});

  // (2) eps = alpha/d, and m(A) > alpha makes eps < m(A)/d strict, so a proper
  // subvariety Y with eps(xi, A|Y) <= eps + delta exists.
  const Rat alpha_over_d = cert.alpha / Rat(d);
  cert.steps.push_back({"epsilon_equals_alpha_over_d", "=", cert.epsilon, alpha_over_d,
                        cert.epsilon == alpha_over_d, std::nullopt, std::nullopt,
                        "strictness of m(A) > alpha yields eps < m(A)/d"});

  // (3) eps < 1/(d-1) <= 1/dim(Y) contradicts the 1/dim bound on Y once delta
  // is small. Cross-multiplied: (3d+1)(d-1) < 3d^2.
  const Rat inverse_codim(1, d - 1);
  const Rat reduced_lhs = Rat(3 * d + 1) * Rat(d - 1);
  const Rat reduced_rhs = Rat(3 * d * d);
  cert.steps.push_back({"epsilon_below_inverse_dim_minus_one", "<", cert.epsilon, inverse_codim,
                        cert.epsilon < inverse_codim && reduced_lhs < reduced_rhs, reduced_lhs,
                        reduced_rhs, "3d^2 - 2d - 1 < 3d^2"});

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    if (!cert.steps[i].holds) {
      cert.failed_at = i + 1;
      break;
    }
  }
  return cert;
}

LemmaCheckReport lemma_l2_check(std::int64_t d_min, std::int64_t d_max, const Rat& degree_bound,
                                unsigned terms) {
  require(d_min >= 4, ErrorKind::out_of_scope, "lemma check needs d_min >= 4");
  require(d_min <= d_max, ErrorKind::precondition, "lemma check: d_min > d_max");

  LemmaCheckReport report;
  report.d_min = d_min;
  report.d_max = d_max;
  report.degree_bound = degree_bound;
  report.all_pass = true;
  for (std::int64_t d = d_min; d <= d_max; ++d) {
    const Rat f4 = f4_value(d, critical_alpha(d), critical_epsilon(d));
    const bool pass = f4 < degree_bound;
    report.rows.push_back({d, f4, pass});
    report.all_pass = report.all_pass && pass;
  }

  LimitRow& limit = report.limit;
  limit.e_one_third = exp_bounds(Rat(1, 3), terms);
  limit.e_minus_two_thirds = exp_bounds(Rat(-2, 3), terms);
  limit.difference_upper = limit.e_one_third.upper - limit.e_minus_two_thirds.lower;
  limit.difference_lower = limit.e_one_third.lower - limit.e_minus_two_thirds.upper;
  limit.pass = limit.difference_upper < limit.bound;
  report.all_pass = report.all_pass && limit.pass;
  return report;
}

}  // namespace jetcert
