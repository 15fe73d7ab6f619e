#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mono/qstate.hpp"

namespace mono {

enum class MeasureId : std::uint8_t {
  Concurrence,
  ConcurrenceOfAssistance,
  EoF,
  EntanglementCostLookup,
};

/// CLI spelling: "c", "ca", "eof", "ec-lookup".
std::string_view to_string(MeasureId id);
MeasureId parse_measure_id(std::string_view text);

/// (E_{A|BC}, E_{AB}, E_{AC}) for one state under one measure.
struct MeasureTriple {
  double e_abc = 0.0;
  double e_ab = 0.0;
  double e_ac = 0.0;
  MeasureId measure_id = MeasureId::Concurrence;

  [[nodiscard]] double max_pair() const { return e_ab > e_ac ? e_ab : e_ac; }
  [[nodiscard]] double min_pair() const { return e_ab > e_ac ? e_ac : e_ab; }
};

/// Concurrence of the A|BC cut, sqrt(2(1 - Tr rho_A^2)).
///
/// Evaluated as 2 sqrt(sum_{i<j} p_i p_j) over the squared Schmidt
/// coefficients, which avoids the cancellation in 1 - Tr rho_A^2.
double concurrence_pure_cut(const PureTripartiteState& state);

/// Square roots of the eigenvalues of rho * rho~ (rho~ the spin-flipped state),
/// descending, padded to four entries. They are the singular values of
/// W^T (Y (x) Y) W for any factor rho = W W^dagger.
Eigen::Vector4d spin_flip_spectrum(const DensityMatrix& rho);

/// Two-qubit convex-roof concurrence, max(0, s1 - s2 - s3 - s4).
double wootters_concurrence(const DensityMatrix& rho);

/// Concurrence of assistance.
///
/// For two qubits this is the spectral sum s1 + s2 + s3 + s4. For a qubit
/// paired with a qudit (local dims {2, n}, n > 2) no closed form is known and
/// the maximum over ensembles is found numerically, see
/// concurrence_of_assistance_numeric.
double concurrence_of_assistance(const DensityMatrix& rho);

struct EnsembleSearchOptions {
  int restarts = 8;
  int max_iterations = 3000;
  double gradient_tol = 1e-13;
  std::uint64_t seed = 0x5eed;
};

/// Maximum average pure-state concurrence over decompositions of a
/// qubit (x) qudit state, by Riemannian gradient ascent over the isometries
/// that parametrize its ensembles.
double concurrence_of_assistance_numeric(const DensityMatrix& rho,
                                         const EnsembleSearchOptions& options = {});

/// C_a of the A|BC cut of a pure state, defined here only for a qubit A.
double assistance_pure_cut(const PureTripartiteState& state);

/// Base-2 binary entropy with h(0) = h(1) = 0.
double binary_entropy(double p);

/// Two-qubit entanglement of formation h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);
double eof_two_qubit(const DensityMatrix& rho);

/// Base-2 von Neumann entropy of rho_A for the A|BC cut.
double cut_entropy(const PureTripartiteState& state);

/// Tabulated entanglement-cost triple. Only "afs" (alias
/// "antisymmetric_qutrit") is known; everything else throws DomainError.
MeasureTriple entanglement_cost_lookup(std::string_view name);

/// Name of the tabulated state matching `state` up to a global phase, or empty.
std::string identify_tabulated_state(const PureTripartiteState& state);

/// Assembles the three operands of the monogamy inequality.
MeasureTriple measure_triple(const PureTripartiteState& state, MeasureId id);

}  // namespace mono
