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

#include <algorithm>
#include <sstream>

#include "qorder/report.hpp"

namespace qorder::cli {

using nlohmann::ordered_json;

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

std::string_view to_string(OrderMode m) noexcept {
  switch (m) {
    case OrderMode::Oracle: return "oracle";
    case OrderMode::Fast: return "fast";
    case OrderMode::Both: return "both";
  }
  return "both";
}

std::string_view to_string(CheckMode m) noexcept {
  return m == CheckMode::Basis ? "basis" : "exhaustive";
}

namespace {

std::string cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> columns_of(const std::vector<ordered_json>& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& item : row.items()) {
      if (std::find(cols.begin(), cols.end(), item.key()) == cols.end()) cols.push_back(item.key());
    }
  }
  return cols;
}

void write_table(std::ostream& os, const std::vector<ordered_json>& rows) {
  const auto cols = columns_of(rows);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : rows) {
      if (row.contains(cols[c])) width[c] = std::max(width[c], cell(row[cols[c]]).size());
    }
  }
  auto line = [&](auto&& value_of) {
    std::string out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string v = value_of(c);
      if (c + 1 < cols.size()) v.resize(width[c], ' ');
      out += v;
      if (c + 1 < cols.size()) out += "  ";
    }
    os << out << '\n';
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const auto& row : rows) {
    line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row[cols[c]]) : std::string(); });
  }
}

}  // namespace

std::string ReportDocument::render(OutputFormat format) const {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      ordered_json doc;
      doc["meta"] = meta;
      doc["rows"] = ordered_json::array();
      for (const auto& r : rows) doc["rows"].push_back(r);
      doc["counterexamples"] = ordered_json::array();
      for (const auto& c : counterexamples) doc["counterexamples"].push_back(c);
      doc["verdict"] = pass() ? "pass" : "fail";
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      const auto cols = columns_of(rows);
      for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_escape(cols[c]);
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          os << (c ? "," : "") << (row.contains(cols[c]) ? csv_escape(cell(row[cols[c]])) : "");
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      os << meta.value("tool", "") << ' ' << meta.value("version", "") << ' '
         << meta.value("command", "") << '\n';
      os << "config:";
      for (const auto& item : meta["config"].items()) os << ' ' << item.key() << '=' << cell(item.value());
      os << "\n\n";
      for (const auto& n : notes) os << n << '\n';
      if (!notes.empty()) os << '\n';
      if (!rows.empty()) {
        write_table(os, rows);
        os << '\n';
      }
      if (counterexamples.empty()) {
        os << "counterexamples: none\n";
      } else {
        os << "counterexamples: " << counterexamples.size() << '\n';
        for (const auto& c : counterexamples) os << "  " << c.dump() << '\n';
      }
      os << "verdict: " << (pass() ? "pass" : "fail") << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace qorder::cli
