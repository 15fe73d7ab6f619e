#include "mono/figures.hpp"

namespace mono {

std::vector<Fig1Row> figure1_rows() {
  const MeasureTriple t = entanglement_cost_lookup("afs");
  std::vector<Fig1Row> rows;
  // Integer grid index avoids accumulated drift in the step.
  for (int i = 0; i <= 299; ++i) {
    const double alpha = 1.505 + 0.005 * i;
    rows.push_back({alpha, residual(t, alpha)});
  }
  return rows;
}

std::vector<BetaRow> figure2_rows() {
  std::vector<double> grid;
  for (int i = 10; i <= 400; ++i) grid.push_back(i / 100.0);
  return beta_curves(entanglement_cost_lookup("afs"), grid);
}

std::optional<double> crossing(const std::vector<BetaRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d0 = rows[i - 1].z1 - rows[i - 1].z2;
    const double d1 = rows[i].z1 - rows[i].z2;
    if (d0 == 0.0) return rows[i - 1].y;
    if ((d0 > 0.0) != (d1 > 0.0)) {
      return rows[i - 1].y + (rows[i].y - rows[i - 1].y) * d0 / (d0 - d1);
    }
  }
  return std::nullopt;
}

}  // namespace mono
