/* Copyright 2026 The qorder Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line driver: field construction, order queries, and verification sweeps.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qorder/errors.hpp"
#include "qorder/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace qorder::cli;

  CommandConfig config;
  CLI::App app{"Exact F_q-orders of finite-field elements and additive characters", "qorder"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  app.add_option("--p", config.p, "characteristic (prime)");
  app.add_option("--s", config.s, "q = p^s")->check(CLI::PositiveNumber);
  app.add_option("--n", config.n, "extension degree");
  app.add_option("--seed", config.seed, "seed for the factorization randomness");
  app.add_option("--size-bound", config.size_bound, "largest field cardinality handled")
      ->check(CLI::PositiveNumber);
  std::string format = "text";
  std::string mode = "both";
  std::string check = "basis";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--mode", mode, "character-order route")
      ->check(CLI::IsMember({"oracle", "fast", "both"}));
  app.add_option("--check", check, "annihilation test")
      ->check(CLI::IsMember({"basis", "exhaustive"}));
  app.add_flag("--grid", config.grid, "sweep the built-in field grid");

  app.add_subcommand("factor", "factor x^n - 1 over F_q");
  app.add_subcommand("orders", "partition F_{q^n} by F_q-order and compare with Phi_q");
  app.add_subcommand("verify-theorem",
                     "compare brute-force character orders with reciprocal element orders");
  app.add_subcommand("corollary1", "check coincidence of orders against self-reciprocity");
  auto* cor2 = app.add_subcommand("corollary2", "modular criterion vs divisor scan, n = 1..n_max");
  std::uint64_t n_max = 0;
  cor2->add_option("--n-max", n_max, "largest n in the table")->check(CLI::PositiveNumber);
  auto* char_order = app.add_subcommand("char-order", "order of one character chi_a");
  char_order->add_option("label", config.label, "a as comma-separated coefficients")->required();
  app.add_subcommand("pnbt", "find a primitive normal element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "json"  ? OutputFormat::Json
                  : format == "csv" ? OutputFormat::Csv
                                    : OutputFormat::Text;
  config.mode = mode == "oracle" ? OrderMode::Oracle
                : mode == "fast" ? OrderMode::Fast
                                 : OrderMode::Both;
  config.check = check == "exhaustive" ? qorder::CheckMode::Exhaustive : qorder::CheckMode::Basis;
  if (cor2->count("--n-max") > 0) config.n_max = n_max;
  if (const char* env = std::getenv("QORDER_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      config.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "qorder: QORDER_SEED must be an unsigned integer, got '" << env << "'\n";
      return kExitUsage;
    }
  }

  try {
    const ReportDocument doc = run_command(config);
    std::cout << doc.render(config.format);
    return doc.pass() ? 0 : kExitFail;
  } catch (const qorder::Error& e) {
    std::cerr << "qorder: " << e.what() << '\n';
    return kExitUsage;
  }
}
