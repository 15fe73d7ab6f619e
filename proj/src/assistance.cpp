// Numerical concurrence of assistance for qubit (x) qudit states.
//
// Every ensemble {p_i, phi_i} of rho = W W^dagger (W of full column rank r)
// is psi_i = W u_i, where the u_i are the rows of a K x r isometry U. The
// pure-state concurrence of a qubit (x) qudit vector is 2 sqrt(det M M^dagger)
// with M the 2 x n coefficient matrix, homogeneous of degree two, so the
// average concurrence of the ensemble is F(U) = sum_i 2 sqrt(det M_i M_i^dagger)
// with no explicit weights. F is maximized over the Stiefel manifold.

#include <algorithm>
#include <cmath>
#include <random>

#include "mono/error.hpp"
#include "mono/measures.hpp"

namespace mono {

namespace {

struct MemberValue {
  double value = 0.0;
  CVector grad;  // d value / d conj(psi)
};

MemberValue member_concurrence(const CVector& psi, int n) {
  const auto a = psi.head(n);
  const auto b = psi.tail(n);
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  const cplx ab = a.dot(b);  // a^dagger b
  const double det = std::max(na * nb - std::norm(ab), 0.0);
  MemberValue out;
  out.value = 2.0 * std::sqrt(det);
  out.grad = CVector::Zero(2 * n);
  if (det > 0.0) {
    const double inv = 1.0 / std::sqrt(det);
    out.grad.head(n) = (a * nb - b * std::conj(ab)) * inv;
    out.grad.tail(n) = (b * na - a * ab) * inv;
  }
  return out;
}

CMatrix polar_retract(const CMatrix& x) {
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

class EnsembleObjective {
 public:
  EnsembleObjective(CMatrix w, int n) : w_(std::move(w)), n_(n) {}

  double value(const CMatrix& u) const {
    double total = 0.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      total += member_concurrence(w_ * u.row(i).transpose(), n_).value;
    }
    return total;
  }

  /// Riemannian ascent direction on {U : U^dagger U = I}.
  CMatrix ascent_direction(const CMatrix& u) const {
    CMatrix g(u.rows(), u.cols());
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      const MemberValue m = member_concurrence(w_ * u.row(i).transpose(), n_);
      g.row(i) = (w_.adjoint() * m.grad).transpose();
    }
    const CMatrix ug = u.adjoint() * g;
    return g - u * (0.5 * (ug + ug.adjoint()));
  }

 private:
  CMatrix w_;
  int n_;
};

double ascend(const EnsembleObjective& obj, CMatrix u, const EnsembleSearchOptions& opt) {
  double f = obj.value(u);
  double step = 0.1;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const CMatrix xi = obj.ascent_direction(u);
    const double gnorm = xi.norm();
    if (gnorm < opt.gradient_tol) break;
    bool improved = false;
    while (step > 1e-14) {
      CMatrix trial = polar_retract(u + step * xi);
      const double ft = obj.value(trial);
      if (ft > f) {
        improved = ft - f > 1e-16 * std::max(1.0, f);
        u = std::move(trial);
        f = ft;
        step *= 1.5;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return f;
}

}  // namespace

double concurrence_of_assistance_numeric(const DensityMatrix& rho,
                                         const EnsembleSearchOptions& options) {
  const auto& ld = rho.local_dims();
  if (ld.size() != 2 || ld[0] != 2) {
    throw DomainError("numerical concurrence of assistance requires a qubit (x) qudit state");
  }
  const int n = ld[1];

  // Full-column-rank factor; any factor yields the same set of ensembles.
  Eigen::JacobiSVD<CMatrix> svd(rho.factor(), Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  int rank = 0;
  while (rank < s.size() && s[rank] > 1e-14 * std::max(1.0, s[0])) ++rank;
  if (rank == 0) return 0.0;
  const CMatrix w = svd.matrixU().leftCols(rank) * s.head(rank).asDiagonal();
  if (rank == 1) return std::min(member_concurrence(w.col(0), n).value, 1.0);

  const EnsembleObjective obj(w, n);
  const int members = rank * rank;

  CMatrix spectral = CMatrix::Zero(members, rank);
  spectral.topRows(rank).setIdentity();
  double best = ascend(obj, spectral, options);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  for (int r = 0; r < options.restarts; ++r) {
    CMatrix start(members, rank);
    for (Eigen::Index i = 0; i < start.size(); ++i) start(i) = cplx(gauss(rng), gauss(rng));
    best = std::max(best, ascend(obj, polar_retract(start), options));
  }
  return std::min(best, 1.0);
}

}  // namespace mono
