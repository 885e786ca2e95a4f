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

// Column table written as CSV or as a JSON array of row objects. Numeric
// cells keep their preformatted text in both forms.

#ifndef ERW_TOOLS_TABLE_H_
#define ERW_TOOLS_TABLE_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace erw::cli {

struct Cell {
  std::string text;
  bool numeric = false;
};

inline Cell num(std::string text) { return {std::move(text), true}; }
inline Cell str(std::string text) { return {std::move(text), false}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_table_csv(std::ostream& out, const Table& table);
// {"columns": [...], "rows": [{...}, ...]}; nan and inf become null.
void write_table_json(std::ostream& out, const Table& table);

}  // namespace erw::cli

#endif  // ERW_TOOLS_TABLE_H_
