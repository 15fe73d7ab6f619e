#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mono {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Local dimensions (d_A, d_B, d_C).
using Dims = std::array<int, 3>;

/// Largest total Hilbert-space dimension handled with dense vectors.
inline constexpr int kMaxTotalDim = 4096;

enum class Party : std::uint8_t { A = 0, B = 1, C = 2 };

/// Ordered, duplicate-free subset of {A, B, C}.
class Subsystems {
 public:
  Subsystems(std::initializer_list<Party> parties);

  [[nodiscard]] bool contains(Party p) const { return (mask_ >> static_cast<int>(p)) & 1U; }
  [[nodiscard]] std::vector<Party> parties() const;
  [[nodiscard]] std::size_t size() const { return parties().size(); }

 private:
  unsigned mask_ = 0;
};

/// Normalized pure state on H_A (x) H_B (x) H_C.
///
/// Amplitudes are stored row-major over |abc>: index = a*d_B*d_C + b*d_C + c.
class PureTripartiteState {
 public:
  /// Validates dims and length, then renormalizes. Inputs whose norm is off by
  /// more than 1e-6 are rejected; an adjustment above 1e-9 sets renormalized().
  PureTripartiteState(Dims dims, CVector amplitudes);

  [[nodiscard]] const Dims& dims() const { return dims_; }
  [[nodiscard]] const CVector& amplitudes() const { return amps_; }
  [[nodiscard]] int total_dim() const { return static_cast<int>(amps_.size()); }
  [[nodiscard]] bool renormalized() const { return renormalized_; }

  [[nodiscard]] cplx amplitude(int a, int b, int c) const {
    return amps_[index(a, b, c)];
  }
  [[nodiscard]] int index(int a, int b, int c) const {
    return (a * dims_[1] + b) * dims_[2] + c;
  }

  /// Coefficient matrix of the A|BC cut: rows a, columns b*d_C + c.
  [[nodiscard]] CMatrix cut_matrix() const;

 private:
  Dims dims_;
  CVector amps_;
  bool renormalized_ = false;
};

/// Parameters of the five-term canonical form of a three-qubit pure state.
struct SchmidtParams {
  double lambda0 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double phi = 0.0;
};

/// Reduced state of one or two parties, carrying the local dimensions of the
/// kept parties (in A, B, C order).
///
/// Alongside the matrix it holds a factor W with rho = W W^dagger. When the
/// density matrix comes from a partial trace the factor is exact (columns are
/// the unnormalized branch vectors of the traced-out party); otherwise it is
/// obtained from the spectral decomposition.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-10 entrywise), unit trace (1e-10) and
  /// positivity (smallest eigenvalue >= -1e-10).
  DensityMatrix(CMatrix entries, std::vector<int> local_dims);
  /// Single-party convenience overload.
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix from_factor(CMatrix factor, std::vector<int> local_dims);

  [[nodiscard]] int dim() const { return static_cast<int>(rho_.rows()); }
  [[nodiscard]] const CMatrix& matrix() const { return rho_; }
  [[nodiscard]] const CMatrix& factor() const { return factor_; }
  [[nodiscard]] const std::vector<int>& local_dims() const { return local_dims_; }

  [[nodiscard]] Eigen::VectorXd eigenvalues() const;

 private:
  DensityMatrix() = default;

  CMatrix rho_;
  CMatrix factor_;
  std::vector<int> local_dims_;
};

PureTripartiteState pure_state_new(Dims dims, CVector amplitudes);
PureTripartiteState from_schmidt(const SchmidtParams& p);
PureTripartiteState w_class(cplx b0, cplx b1, cplx b2, cplx b3);

/// GHZ state (|000> + |111>)/sqrt(2).
PureTripartiteState ghz();
/// Symmetric W state (|100> + |010> + |001>)/sqrt(3).
PureTripartiteState w_state();
/// 2x2x3 state (|000> + |111> + |phi+>|2>)/sqrt(3).
PureTripartiteState example_223();
/// Totally antisymmetric three-qutrit state, the purification of the
/// antisymmetric two-qutrit Werner state.
PureTripartiteState antisymmetric_qutrit();

/// Independent standard complex Gaussians, normalized. Deterministic in seed.
PureTripartiteState haar_random(Dims dims, std::uint64_t seed);

DensityMatrix reduced_density(const PureTripartiteState& state, const Subsystems& keep);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Squared Schmidt coefficients of the A|BC cut, descending.
Eigen::VectorXd cut_spectrum(const PureTripartiteState& state);

/// |<a|b>|^2 for states of equal dims.
double fidelity(const PureTripartiteState& a, const PureTripartiteState& b);

}  // namespace mono
