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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qorder/characters.hpp"
#include "qorder/integer.hpp"

namespace qorder::cli {

inline constexpr std::string_view kToolName = "qorder";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class OutputFormat { Text, Json, Csv };
enum class OrderMode { Oracle, Fast, Both };

std::string_view to_string(OutputFormat f) noexcept;
std::string_view to_string(OrderMode m) noexcept;
std::string_view to_string(CheckMode m) noexcept;

struct TowerParams {
  std::uint32_t p;
  unsigned s;
  unsigned n;
};

/// The (p, s, n) fields swept by `--grid`.
const std::vector<TowerParams>& acceptance_grid();
/// The q values swept by `corollary2 --grid`.
const std::vector<std::uint64_t>& corollary2_grid_q();

struct CommandConfig {
  std::string command;
  std::uint32_t p = 0;
  unsigned s = 1;
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::uint64_t size_bound = std::uint64_t{1} << 24;
  OutputFormat format = OutputFormat::Text;
  OrderMode mode = OrderMode::Both;
  CheckMode check = CheckMode::Basis;
  bool grid = false;
  std::optional<std::uint64_t> n_max;  // corollary2
  std::string label;                   // char-order

  Limits limits() const {
    Limits l;
    l.size_bound = size_bound;
    return l;
  }
};

/// Output of one command. The verdict is pass exactly when no counterexample
/// was recorded.
struct ReportDocument {
  nlohmann::ordered_json meta;
  std::vector<nlohmann::ordered_json> rows;
  std::vector<nlohmann::ordered_json> counterexamples;
  std::vector<std::string> notes;  // text-mode summary lines

  bool pass() const noexcept { return counterexamples.empty(); }
  std::string render(OutputFormat format) const;
};

ReportDocument cmd_factor(const CommandConfig& config);
ReportDocument cmd_orders(const CommandConfig& config);
ReportDocument cmd_verify_theorem(const CommandConfig& config);
ReportDocument cmd_corollary1(const CommandConfig& config);
ReportDocument cmd_corollary2(const CommandConfig& config);
ReportDocument cmd_char_order(const CommandConfig& config);
ReportDocument cmd_pnbt(const CommandConfig& config);

/// Dispatches on config.command; throws InvalidArgument for unknown names.
ReportDocument run_command(const CommandConfig& config);

}  // namespace qorder::cli
