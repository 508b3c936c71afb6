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

#include "dloop/figures.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "dloop/intensity.hpp"
#include "dloop/visibility.hpp"

namespace dloop::figures {

using beamline::LoopSettings;
using intensity::Spectrum;
using table::DataTable;
using table::format_g9;
using visibility::AbsorptionMode;

namespace {

constexpr double kPi = std::numbers::pi;

// fig2/fig3 span the full spectral decay of the fringes (the 1/100
// bandwidth suppresses the oscillation by e^{-20} at chi_f = 400 pi), so
// the intensity levels can be read off the column means.
constexpr int kChiFRows = 8001;
constexpr double kChiFMax = 400.0 * kPi;

// Transmission family shared by fig5/6/7, with the matched phases
// chi_f = 2 arccos(sqrt(T)/2) for fig5/7.
constexpr std::array<double, 4> kTransmissionFamily{1.0, 0.7, 0.4, 0.1};

std::string col(const std::string& name, const std::string& params) {
  return name + "(" + params + ")";
}

DataTable intensity_vs_chi_f(const char* title, double alpha_f) {
  const Spectrum spec{0.01};
  const std::string params = "chi_d=0;alpha_d=0;alpha_f=" + format_g9(alpha_f) +
                             ";eps=" + format_g9(spec.epsilon);
  DataTable t;
  t.title = title;
  t.columns = {"chi_f", col("K0", params), col("KG", params)};
  t.rows.reserve(kChiFRows);
  for (int i = 0; i < kChiFRows; ++i) {
    const double chi = kChiFMax * i / (kChiFRows - 1);
    const LoopSettings s{0.0, chi, 0.0, alpha_f};
    t.rows.push_back({chi, intensity::k0_closed(s, spec), intensity::kg_closed(s, spec)});
  }
  return t;
}

DataTable intensity_vs_chi_d(const char* title, double t_d, double chi_f) {
  const Spectrum spec{0.0};  // monochromatic, as in the unit-visibility match
  const double alpha_d = -0.5 * std::log(t_d);
  const std::string params = "t_d=" + format_g9(t_d) + ";chi_f=" + format_g9(chi_f) +
                             ";alpha_f=0;eps=0";
  DataTable t;
  t.title = title;
  t.columns = {"chi_d", col("K0", params), col("KG", params)};
  constexpr int rows = 1024;
  t.rows.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    const double chi = 2.0 * kPi * i / rows;
    const LoopSettings s{chi, chi_f, alpha_d, 0.0};
    t.rows.push_back({chi, intensity::k0_closed(s, spec), intensity::kg_closed(s, spec)});
  }
  return t;
}

DataTable visibility_families(const char* title, bool vs_transmission,
                              AbsorptionMode mode) {
  const char* vname =
      mode == AbsorptionMode::stochastic ? "V_sto2df" : "V_det2df";
  DataTable t;
  t.title = title;
  constexpr int rows = 501;
  if (vs_transmission) {
    // x = T_d, one column per matched chi_f
    t.columns = {"t_d"};
    std::array<double, 4> chis{};
    for (std::size_t k = 0; k < kTransmissionFamily.size(); ++k) {
      chis[k] = visibility::solve_unit_visibility_phase(kTransmissionFamily[k]);
      t.columns.push_back(col(vname, "chi_f=" + format_g9(chis[k])));
    }
    for (int i = 0; i < rows; ++i) {
      const double td = 1.0 * i / (rows - 1);
      std::vector<double> row{td};
      for (double chi : chis)
        row.push_back(visibility::visibility_double_phase(td, chi, mode, 0.0));
      t.rows.push_back(std::move(row));
    }
  } else {
    // x = chi_f, one column per transmission
    t.columns = {"chi_f"};
    for (double td : kTransmissionFamily)
      t.columns.push_back(col(vname, "t_d=" + format_g9(td)));
    for (int i = 0; i < rows; ++i) {
      const double chi = kPi * i / (rows - 1);
      std::vector<double> row{chi};
      for (double td : kTransmissionFamily)
        row.push_back(visibility::visibility_double_phase(td, chi, mode, 0.0));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

DataTable loop_visibilities() {
  DataTable t;
  t.title = "fig4";
  t.columns = {"t_d", "V_sto1", "V_det1", "V_sto2", "V_det2"};
  constexpr int rows = 501;
  t.rows.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    const double td = 1.0 * i / (rows - 1);
    t.rows.push_back(
        {td, visibility::visibility_single(td, AbsorptionMode::stochastic),
         visibility::visibility_single(td, AbsorptionMode::deterministic),
         visibility::visibility_double(td, AbsorptionMode::stochastic),
         visibility::visibility_double(td, AbsorptionMode::deterministic)});
  }
  return t;
}

}  // namespace

std::optional<FigureId> parse_figure_id(std::string_view name) {
  const auto& names = figure_id_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (name == names[i]) return static_cast<FigureId>(i);
  return std::nullopt;
}

std::string figure_id_name(FigureId id) {
  return figure_id_names()[static_cast<std::size_t>(id)];
}

const std::vector<std::string>& figure_id_names() {
  static const std::vector<std::string> names{
      "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8a", "fig8b", "fig8c"};
  return names;
}

table::DataTable render_figure(FigureId id) {
  switch (id) {
    case FigureId::fig2:
      return intensity_vs_chi_f("fig2", 0.0);
    case FigureId::fig3:
      return intensity_vs_chi_f("fig3", -0.5 * std::log(28.0 / 169.0));
    case FigureId::fig4:
      return loop_visibilities();
    case FigureId::fig5:
      return visibility_families("fig5", true, AbsorptionMode::stochastic);
    case FigureId::fig6:
      return visibility_families("fig6", false, AbsorptionMode::stochastic);
    case FigureId::fig7:
      return visibility_families("fig7", true, AbsorptionMode::deterministic);
    case FigureId::fig8a:
      return intensity_vs_chi_d("fig8a", 1.0, 0.0);
    case FigureId::fig8b:
      return intensity_vs_chi_d("fig8b", 0.1, 0.0);
    case FigureId::fig8c:
      return intensity_vs_chi_d("fig8c", 0.1, 2.824);
  }
  throw std::invalid_argument("render_figure: unknown figure id");
}

}  // namespace dloop::figures
