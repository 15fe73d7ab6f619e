#pragma once

#include <optional>
#include <vector>

#include "mono/monogamy.hpp"

namespace mono {

struct Fig1Row {
  double alpha = 0.0;
  double f_alpha = 0.0;
};

/// Residual f(alpha) of the tabulated entanglement-cost triple for alpha on
/// [1.505, 3.0] in steps of 0.005.
std::vector<Fig1Row> figure1_rows();

/// (y, x(y) y, y) for the entanglement-cost triple, y on [0.1, 4.0] in steps of 0.01.
std::vector<BetaRow> figure2_rows();

/// y where z1 - z2 changes sign, linearly interpolated between grid rows.
std::optional<double> crossing(const std::vector<BetaRow>& rows);

}  // namespace mono
