#include "mono/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mono/error.hpp"

namespace mono {

namespace {

constexpr double kRejectTol = 1e-6;
constexpr double kWarnTol = 1e-9;
constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;

void check_dims(const Dims& dims) {
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidArgument("local dimensions must be >= 1");
    total *= d;
  }
  if (total > kMaxTotalDim) {
    throw InvalidArgument("total dimension " + std::to_string(total) + " exceeds limit " +
                          std::to_string(kMaxTotalDim));
  }
}

int product(const Dims& dims) { return dims[0] * dims[1] * dims[2]; }

}  // namespace

Subsystems::Subsystems(std::initializer_list<Party> parties) {
  if (parties.size() == 0) throw InvalidArgument("subsystem set must be nonempty");
  for (Party p : parties) {
    if (static_cast<unsigned>(p) > 2) throw InvalidArgument("invalid subsystem label");
    const auto bit = 1U << static_cast<unsigned>(p);
    if (mask_ & bit) throw InvalidArgument("subsystems must be distinct");
    mask_ |= bit;
  }
}

std::vector<Party> Subsystems::parties() const {
  std::vector<Party> out;
  for (Party p : {Party::A, Party::B, Party::C}) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

PureTripartiteState::PureTripartiteState(Dims dims, CVector amplitudes)
    : dims_(dims), amps_(std::move(amplitudes)) {
  check_dims(dims_);
  if (amps_.size() != product(dims_)) {
    throw InvalidArgument("amplitude vector has length " + std::to_string(amps_.size()) +
                          ", expected " + std::to_string(product(dims_)));
  }
  const double norm = amps_.norm();
  if (!std::isfinite(norm)) throw InvalidArgument("amplitudes must be finite");
  if (norm == 0.0) throw InvalidArgument("amplitude vector is all zero");
  if (std::abs(norm - 1.0) > kRejectTol) {
    throw InvalidArgument("amplitude norm " + std::to_string(norm) +
                          " is outside the accepted window [1-1e-6, 1+1e-6]");
  }
  renormalized_ = std::abs(norm - 1.0) > kWarnTol;
  amps_ /= norm;
}

CMatrix PureTripartiteState::cut_matrix() const {
  const int rest = dims_[1] * dims_[2];
  CMatrix m(dims_[0], rest);
  for (int a = 0; a < dims_[0]; ++a) {
    for (int j = 0; j < rest; ++j) m(a, j) = amps_[a * rest + j];
  }
  return m;
}

DensityMatrix::DensityMatrix(CMatrix entries, std::vector<int> local_dims)
    : rho_(std::move(entries)), local_dims_(std::move(local_dims)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
    throw InvalidArgument("density matrix must be square and nonempty");
  }
  int prod = 1;
  for (int d : local_dims_) prod *= d;
  if (local_dims_.empty() || prod != rho_.rows()) {
    throw InvalidArgument("local dimensions do not match density matrix size");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw InvalidArgument("density matrix is not Hermitian within 1e-10");
  }
  if (std::abs(rho_.trace() - cplx(1.0)) > kTraceTol) {
    throw InvalidArgument("density matrix trace differs from 1 by more than 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_);
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() < -kPsdTol) {
    throw InvalidArgument("density matrix has eigenvalue below -1e-10");
  }
  int rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) rank += ev[i] > 0.0 ? 1 : 0;
  factor_.resize(rho_.rows(), rank);
  int col = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > 0.0) factor_.col(col++) = es.eigenvectors().col(i) * std::sqrt(ev[i]);
  }
}

DensityMatrix::DensityMatrix(CMatrix entries)
    : DensityMatrix(entries, std::vector<int>{static_cast<int>(entries.rows())}) {}

DensityMatrix DensityMatrix::from_factor(CMatrix factor, std::vector<int> local_dims) {
  DensityMatrix out;
  out.rho_ = factor * factor.adjoint();
  out.factor_ = std::move(factor);
  out.local_dims_ = std::move(local_dims);
  int prod = 1;
  for (int d : out.local_dims_) prod *= d;
  if (prod != out.rho_.rows()) {
    throw InvalidArgument("local dimensions do not match factor rows");
  }
  if (std::abs(out.rho_.trace() - cplx(1.0)) > kTraceTol) {
    throw InvalidArgument("density matrix trace differs from 1 by more than 1e-10");
  }
  return out;
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

PureTripartiteState pure_state_new(Dims dims, CVector amplitudes) {
  return PureTripartiteState(dims, std::move(amplitudes));
}

PureTripartiteState from_schmidt(const SchmidtParams& p) {
  const std::array<double, 5> lam{p.lambda0, p.lambda1, p.lambda2, p.lambda3, p.lambda4};
  double sq = 0.0;
  for (double l : lam) {
    if (!(l >= 0.0)) throw InvalidArgument("Schmidt coefficients must be non-negative");
    sq += l * l;
  }
  if (std::abs(sq - 1.0) > kWarnTol) {
    throw InvalidArgument("Schmidt coefficients must satisfy sum lambda_i^2 = 1 within 1e-9");
  }
  CVector v = CVector::Zero(8);
  v[0] = p.lambda0;                                  // |000>
  v[4] = p.lambda1 * std::polar(1.0, p.phi);         // |100>
  v[5] = p.lambda2;                                  // |101>
  v[6] = p.lambda3;                                  // |110>
  v[7] = p.lambda4;                                  // |111>
  return PureTripartiteState({2, 2, 2}, std::move(v));
}

PureTripartiteState w_class(cplx b0, cplx b1, cplx b2, cplx b3) {
  const double sq = std::norm(b0) + std::norm(b1) + std::norm(b2) + std::norm(b3);
  if (std::abs(sq - 1.0) > kWarnTol) {
    throw InvalidArgument("W-class coefficients must satisfy sum |b_i|^2 = 1 within 1e-9");
  }
  CVector v = CVector::Zero(8);
  v[0] = b0;  // |000>
  v[4] = b1;  // |100>
  v[2] = b2;  // |010>
  v[1] = b3;  // |001>
  return PureTripartiteState({2, 2, 2}, std::move(v));
}

PureTripartiteState ghz() {
  CVector v = CVector::Zero(8);
  v[0] = v[7] = std::numbers::sqrt2 / 2.0;
  return PureTripartiteState({2, 2, 2}, std::move(v));
}

PureTripartiteState w_state() {
  const double s = 1.0 / std::sqrt(3.0);
  return w_class(0.0, s, s, s);
}

PureTripartiteState example_223() {
  const Dims dims{2, 2, 3};
  CVector v = CVector::Zero(12);
  const double third = 1.0 / std::sqrt(3.0);
  const double sixth = 1.0 / std::sqrt(6.0);
  auto idx = [&](int a, int b, int c) { return (a * dims[1] + b) * dims[2] + c; };
  v[idx(0, 0, 0)] = third;
  v[idx(1, 1, 1)] = third;
  v[idx(0, 1, 2)] = sixth;
  v[idx(1, 0, 2)] = sixth;
  return PureTripartiteState(dims, std::move(v));
}

PureTripartiteState antisymmetric_qutrit() {
  const Dims dims{3, 3, 3};
  CVector v = CVector::Zero(27);
  const double s = 1.0 / std::sqrt(6.0);
  std::array<int, 3> perm{0, 1, 2};
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    v[(perm[0] * 3 + perm[1]) * 3 + perm[2]] = inversions % 2 == 0 ? s : -s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PureTripartiteState(dims, std::move(v));
}

PureTripartiteState haar_random(Dims dims, std::uint64_t seed) {
  check_dims(dims);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(product(dims));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = cplx(re, im);
  }
  v.normalize();
  return PureTripartiteState(dims, std::move(v));
}

DensityMatrix reduced_density(const PureTripartiteState& state, const Subsystems& keep) {
  const Dims& d = state.dims();
  std::vector<Party> kept;
  std::vector<Party> traced;
  for (Party p : {Party::A, Party::B, Party::C}) {
    (keep.contains(p) ? kept : traced).push_back(p);
  }
  if (kept.size() == 3) throw InvalidArgument("cannot keep all three subsystems");

  auto combined = [&](const std::vector<Party>& parties, const std::array<int, 3>& digit) {
    int idx = 0;
    for (Party p : parties) idx = idx * d[static_cast<int>(p)] + digit[static_cast<int>(p)];
    return idx;
  };
  int kept_dim = 1;
  int traced_dim = 1;
  std::vector<int> local_dims;
  for (Party p : kept) {
    kept_dim *= d[static_cast<int>(p)];
    local_dims.push_back(d[static_cast<int>(p)]);
  }
  for (Party p : traced) traced_dim *= d[static_cast<int>(p)];

  // rho_kept = W W^dagger with W(kept, traced) = psi(kept, traced).
  CMatrix factor = CMatrix::Zero(kept_dim, traced_dim);
  std::array<int, 3> digit{};
  for (digit[0] = 0; digit[0] < d[0]; ++digit[0]) {
    for (digit[1] = 0; digit[1] < d[1]; ++digit[1]) {
      for (digit[2] = 0; digit[2] < d[2]; ++digit[2]) {
        factor(combined(kept, digit), combined(traced, digit)) =
            state.amplitude(digit[0], digit[1], digit[2]);
      }
    }
  }
  return DensityMatrix::from_factor(std::move(factor), std::move(local_dims));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

Eigen::VectorXd cut_spectrum(const PureTripartiteState& state) {
  Eigen::JacobiSVD<CMatrix> svd(state.cut_matrix());
  return svd.singularValues().array().square();
}

double fidelity(const PureTripartiteState& a, const PureTripartiteState& b) {
  if (a.dims() != b.dims()) return 0.0;
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace mono
