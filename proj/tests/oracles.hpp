#pragma once

// Test-only reference computations. Each one takes a different route from
// the library: full density matrices instead of purification factors,
// eigenvalues of the non-Hermitian product rho * rho~ instead of singular
// values, and explicit random ensembles instead of optimization.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mono/qstate.hpp"

namespace oracle {

using mono::cplx;
using mono::CMatrix;
using mono::CVector;

/// Partial trace by summing |psi><psi| over the traced indices.
/// keep_mask bit p set keeps party p (A=0, B=1, C=2).
inline CMatrix partial_trace(const mono::PureTripartiteState& s, unsigned keep_mask) {
  const auto& d = s.dims();
  const CMatrix full = s.amplitudes() * s.amplitudes().adjoint();
  int kept_dim = 1;
  for (int p = 0; p < 3; ++p) kept_dim *= (keep_mask >> p & 1U) ? d[p] : 1;
  CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
  auto kept_index = [&](int a, int b, int c) {
    const int dig[3] = {a, b, c};
    int idx = 0;
    for (int p = 0; p < 3; ++p) {
      if (keep_mask >> p & 1U) idx = idx * d[p] + dig[p];
    }
    return idx;
  };
  auto traced_equal = [&](int a, int b, int c, int a2, int b2, int c2) {
    const int x[3] = {a, b, c};
    const int y[3] = {a2, b2, c2};
    for (int p = 0; p < 3; ++p) {
      if (!(keep_mask >> p & 1U) && x[p] != y[p]) return false;
    }
    return true;
  };
  for (int a = 0; a < d[0]; ++a)
    for (int b = 0; b < d[1]; ++b)
      for (int c = 0; c < d[2]; ++c)
        for (int a2 = 0; a2 < d[0]; ++a2)
          for (int b2 = 0; b2 < d[1]; ++b2)
            for (int c2 = 0; c2 < d[2]; ++c2) {
              if (!traced_equal(a, b, c, a2, b2, c2)) continue;
              out(kept_index(a, b, c), kept_index(a2, b2, c2)) +=
                  full(s.index(a, b, c), s.index(a2, b2, c2));
            }
  return out;
}

/// sqrt of the eigenvalues of rho * (Y(x)Y) rho* (Y(x)Y), descending.
inline std::vector<double> spin_flip_roots(const CMatrix& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const CMatrix prod = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<CMatrix> es(prod);
  std::vector<double> r;
  for (int i = 0; i < 4; ++i) r.push_back(std::sqrt(std::max(es.eigenvalues()[i].real(), 0.0)));
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

inline double wootters(const CMatrix& rho) {
  const auto r = spin_flip_roots(rho);
  return std::max(0.0, r[0] - r[1] - r[2] - r[3]);
}

/// Concurrence of a normalized qubit (x) n vector, sqrt(2 (1 - Tr rho_A^2)).
inline double pure_concurrence(const CVector& psi, int n) {
  CMatrix m(2, n);
  for (int a = 0; a < 2; ++a)
    for (int j = 0; j < n; ++j) m(a, j) = psi[a * n + j];
  const CMatrix ra = m * m.adjoint();
  const double pur = ra.squaredNorm();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - pur)));
}

/// Average concurrence of a random K-member ensemble of rho (qubit (x) n).
/// Lower-bounds C_a and upper-bounds the convex-roof concurrence.
inline double random_ensemble_average(const CMatrix& rho, int n, int members, std::mt19937_64& rng) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
  std::vector<CVector> cols;
  for (int i = 0; i < rho.rows(); ++i) {
    if (es.eigenvalues()[i] > 1e-14) cols.push_back(es.eigenvectors().col(i) * std::sqrt(es.eigenvalues()[i]));
  }
  const int r = static_cast<int>(cols.size());
  std::normal_distribution<double> g;
  CMatrix x(members, r);
  for (int i = 0; i < x.size(); ++i) x(i) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(x);
  const CMatrix u = qr.householderQ() * CMatrix::Identity(members, r);
  double avg = 0.0;
  for (int i = 0; i < members; ++i) {
    CVector psi = CVector::Zero(rho.rows());
    for (int j = 0; j < r; ++j) psi += u(i, j) * cols[j];
    const double p = psi.squaredNorm();
    if (p < 1e-300) continue;
    avg += p * pure_concurrence(psi / std::sqrt(p), n);
  }
  return avg;
}

inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

/// Solution of r^a = 2 s^a.
inline double symmetric_min_alpha(double r, double s) { return std::log(2.0) / std::log(r / s); }

}  // namespace oracle
