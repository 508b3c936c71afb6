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

#pragma once

#include <string>
#include <vector>

namespace dloop::table {

struct DataTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// 9 significant digits, '.' decimal separator, fixed formatting so that
// emitted files are byte-stable across runs.
std::string format_g9(double v);

// Comma-delimited, header row first, one line per row, '\n' endings.
std::string to_csv(const DataTable& t);

// {"title": ..., "columns": [...], "rows": [[...], ...]}
std::string to_json(const DataTable& t);

}  // namespace dloop::table
