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

// jetcert: certify candidate Seshadri ratios by exact jet counting.

#include <CLI11.hpp>
#include <iostream>

#include "jetcert/cli/run.hpp"
#include "jetcert/error.hpp"

namespace {

using jetcert::cli::Command;
using jetcert::cli::RunConfig;

struct Flags {
  std::int64_t p = 0, q = 0, d = 0;
  std::string degree_bound = "1";
  std::string alpha2;
  std::string mode = "SMALL_Q";
  std::string format;
};

void add_common(CLI::App* sub, RunConfig& config, Flags& flags) {
  sub->add_option("--degree-bound", flags.degree_bound, "lower bound for A^d, as a rational");
  sub->add_option("--format", flags.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output,-o", config.output_path, "write the document to this file");
}

void add_threefold(CLI::App* sub, RunConfig& config, Flags& flags) {
  sub->add_option("--p", flags.p, "A-degree of the candidate curve")->required();
  sub->add_option("--q", flags.q, "multiplicity of the candidate curve")->required();
  sub->add_option("--mu", config.mu, "multiplicity of the swept surface along the curve");
  sub->add_option("--alpha2", flags.alpha2, "override the worst-case alpha2 (rational)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jet-counting certificates for Seshadri constants at very general points"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jetcert::cli::tool_version()));

  RunConfig config;
  Flags flags;

  auto* certify3 = app.add_subcommand("certify3", "eliminate a threefold candidate p/q");
  add_threefold(certify3, config, flags);
  add_common(certify3, config, flags);

  auto* sweep3 = app.add_subcommand("sweep3", "certify every candidate 1/3 < p/q < 1/2, q <= q-max");
  sweep3->add_option("--q-max", config.q_max, "largest multiplicity to sweep");
  sweep3->add_option("--mu", config.mu, "multiplicity of the swept surface along the curve");
  add_common(sweep3, config, flags);

  auto* profile = app.add_subcommand("profile", "export a jet-density profile");
  add_threefold(profile, config, flags);
  profile->add_option("--mode", flags.mode, "LARGE_Q or SMALL_Q");
  profile->add_option("--samples", config.samples, "sample points per piece");
  add_common(profile, config, flags);

  auto* certify_dim = app.add_subcommand("certify-dim", "general-dimension contradiction chain");
  certify_dim->add_option("--d", flags.d, "dimension (omit to check 4..d-max)");
  certify_dim->add_option("--d-max", config.d_max, "largest dimension for the range check");
  add_common(certify_dim, config, flags);

  auto* oracle = app.add_subcommand("oracle-check", "closed-form jet counts vs monomial enumeration");
  oracle->add_option("--d", flags.d, "largest dimension (default 4)");
  oracle->add_option("--k-max", config.k_max, "largest level (<= 40)");
  add_common(oracle, config, flags);

  auto* convergence = app.add_subcommand("convergence", "discrete jet sums against the integral");
  add_threefold(convergence, config, flags);
  convergence->add_option("--mode", flags.mode, "LARGE_Q or SMALL_Q");
  convergence->add_option("--n", config.ns, "scaling values n")->expected(1, -1);
  add_common(convergence, config, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jetcert::cli::kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  config.command = *jetcert::cli::command_from_string(chosen->get_name());
  try {
    config.degree_bound = jetcert::Rat::parse(flags.degree_bound);
    if (!flags.alpha2.empty()) config.alpha2_override = jetcert::Rat::parse(flags.alpha2);
    if (!flags.format.empty()) config.format = jetcert::cli::format_from_string(flags.format);
    const auto mode = jetcert::counting_mode_from_string(flags.mode);
    if (!mode) throw jetcert::Error(jetcert::ErrorKind::parse, "unknown mode " + flags.mode);
    config.mode = *mode;
  } catch (const jetcert::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return jetcert::cli::kExitUsage;
  }
  const auto given = [chosen](const std::string& name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--p")) config.p = flags.p;
  if (given("--q")) config.q = flags.q;
  if (given("--d")) config.d = flags.d;

  return jetcert::cli::run(config, std::cout, std::cerr);
}
