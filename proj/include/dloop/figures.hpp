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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dloop/table.hpp"

namespace dloop::figures {

// The canonical data sets of the toolkit. Each renders the corresponding
// curve family with pinned parameters:
//
//   fig2   K0, KG vs chi_f; empty device, eps = 0.01
//   fig3   same with alpha_f = -ln(28/169)/2, equal intensity levels
//   fig4   single/double-loop visibilities vs T_d
//   fig5   stochastic double-loop visibility vs T_d, matched chi_f family
//   fig6   same quantity vs chi_f for T_d in {1, 0.7, 0.4, 0.1}
//   fig7   deterministic variant of fig5
//   fig8a  K0, KG vs chi_d; T_d = 1,   chi_f = 0     (monochromatic)
//   fig8b  K0, KG vs chi_d; T_d = 0.1, chi_f = 0
//   fig8c  K0, KG vs chi_d; T_d = 0.1, chi_f = 2.824 (unit visibility)
enum class FigureId { fig2, fig3, fig4, fig5, fig6, fig7, fig8a, fig8b, fig8c };

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string figure_id_name(FigureId id);
const std::vector<std::string>& figure_id_names();

// Deterministic: byte-identical output for identical ids.
table::DataTable render_figure(FigureId id);

}  // namespace dloop::figures
