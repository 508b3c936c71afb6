// Copyright 2026 dloop developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dloop/table.hpp"

#include <cstdio>

#include <json.hpp>

namespace dloop::table {

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string to_csv(const DataTable& t) {
  std::string out;
  out.reserve(32 * (t.rows.size() + 1));
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_g9(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const DataTable& t) {
  nlohmann::ordered_json j;
  j["title"] = t.title;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j.dump(2) + "\n";
}

}  // namespace dloop::table
