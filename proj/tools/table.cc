// Copyright 2026 The erwmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "table.h"

#include <ostream>

#include "erw/io.h"
#include "json.hpp"

namespace erw::cli {

namespace {

std::string json_cell(const Cell& c) {
  if (!c.numeric) return nlohmann::json(c.text).dump();
  if (c.text == "nan" || c.text == "inf" || c.text == "-inf") return "null";
  return c.text;
}

}  // namespace

void write_table_csv(std::ostream& out, const Table& table) {
  write_csv_row(out, table.columns);
  std::vector<std::string> texts;
  for (const auto& row : table.rows) {
    texts.clear();
    for (const auto& c : row) texts.push_back(c.text);
    write_csv_row(out, texts);
  }
}

void write_table_json(std::ostream& out, const Table& table) {
  out << "{\n  \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump();
  }
  out << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n    {" : "\n    {");
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump() << ": "
          << json_cell(table.rows[r][i]);
    }
    out << "}";
  }
  out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace erw::cli
