#include "mono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mono/error.hpp"

namespace mono {

namespace {

void check_triple(const MeasureTriple& t) {
  if (!(t.e_abc >= 0.0 && t.e_ab >= 0.0 && t.e_ac >= 0.0)) {
    throw InvalidArgument("measure values must be non-negative");
  }
}

// 1 - p^alpha - q^alpha with p = max/e_abc, q = min/e_abc; same sign as the
// residual and strictly increasing in alpha when 0 < q <= p < 1.
double normalized_residual(double p, double q, double alpha) {
  return 1.0 - std::pow(p, alpha) - std::pow(q, alpha);
}

}  // namespace

std::string_view to_string(XSolution::Kind kind) {
  switch (kind) {
    case XSolution::Kind::Zero:
      return "zero";
    case XSolution::Kind::Finite:
      return "finite";
    case XSolution::Kind::Unbounded:
      return "unbounded";
  }
  return "?";
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::BoundedSolutionSet:
      return "bounded-solution-set";
    case CertificateKind::PerStateLogBase:
      return "per-state-log-base";
    case CertificateKind::RelaxedLogBase:
      return "relaxed-log-base";
    case CertificateKind::NonMonogamyWitness:
      return "non-monogamy-witness";
  }
  return "?";
}

XSolution solve_x(const MeasureTriple& t, double y, double eps) {
  if (!(y > 0.0)) throw InvalidArgument("exponent y must be positive");
  check_triple(t);
  if (t.e_abc < t.max_pair() - eps) {
    std::ostringstream msg;
    msg << "triple violates E_A|BC >= max(E_AB, E_AC): " << t.e_abc << " < " << t.max_pair();
    throw DomainError(msg.str());
  }
  const double gap = std::pow(t.e_abc, y) - std::pow(t.max_pair(), y);
  const double m = std::pow(t.min_pair(), y);
  if (m < eps) return {XSolution::Kind::Zero, 0.0, y};
  if (gap >= eps) return {XSolution::Kind::Finite, m / gap, y};
  return {XSolution::Kind::Unbounded, 0.0, y};
}

double residual(const MeasureTriple& t, double alpha) {
  return std::pow(t.e_abc, alpha) - std::pow(t.e_ab, alpha) - std::pow(t.e_ac, alpha);
}

double alpha_from_bound(double bound, double y0) {
  if (!(bound >= 0.0)) throw InvalidArgument("bound M must be non-negative");
  if (!(y0 > 0.0)) throw InvalidArgument("exponent y0 must be positive");
  return std::max(bound * y0, y0);
}

bool in_lambda(const MeasureTriple& t, double eps) {
  return t.min_pair() >= eps && t.e_abc - t.max_pair() >= eps;
}

double theorem3_alpha(const MeasureTriple& t, double eps) {
  check_triple(t);
  if (!in_lambda(t, eps)) {
    throw DomainError(
        "triple is outside Lambda: requires E_A|BC > max(E_AB, E_AC) and min(E_AB, E_AC) > 0");
  }
  const double b = t.e_abc / t.max_pair();
  return std::numbers::ln2 / std::log(b);
}

double theorem3_alpha_relaxed(double c) {
  if (!(c > 1.0)) throw DomainError("relaxed base c must satisfy c > 1");
  return std::numbers::ln2 / std::log(c);
}

double theorem3_alpha_relaxed(double c, const MeasureTriple& t, double eps) {
  if (!in_lambda(t, eps)) {
    throw DomainError(
        "triple is outside Lambda: requires E_A|BC > max(E_AB, E_AC) and min(E_AB, E_AC) > 0");
  }
  const double b = t.e_abc / t.max_pair();
  // Allow c = b up to rounding of the quotient.
  if (c > b * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "relaxed base c = " << c << " exceeds b = " << b;
    throw DomainError(msg.str());
  }
  return theorem3_alpha_relaxed(c);
}

MinAlpha min_alpha(const MeasureTriple& t, double tol, double eps) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  check_triple(t);
  if (t.e_abc < t.max_pair() - eps) {
    throw DomainError("triple violates E_A|BC >= max(E_AB, E_AC)");
  }
  if (t.min_pair() < eps) return {MinAlpha::Kind::Finite, 0.0, {}};
  if (t.e_abc - t.max_pair() < eps) {
    return {MinAlpha::Kind::NotFinite, 0.0,
            "E_A|BC equals max(E_AB, E_AC) with positive min: non-monogamous at every alpha"};
  }

  const double p = t.max_pair() / t.e_abc;
  const double q = t.min_pair() / t.e_abc;
  double lo = kBisectionLow;
  double hi = kBisectionHigh;
  if (normalized_residual(p, q, hi) < 0.0) {
    std::ostringstream msg;
    msg << "residual still negative at alpha = " << hi << " (bracket failure)";
    return {MinAlpha::Kind::NotFinite, 0.0, msg.str()};
  }
  // Roots below the default bracket occur when both ratios are tiny.
  while (normalized_residual(p, q, lo) >= 0.0 && lo > 1e-300) lo *= 1e-3;

  for (int it = 0; it < kBisectionMaxIter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (normalized_residual(p, q, mid) >= 0.0 ? hi : lo) = mid;
  }
  return {MinAlpha::Kind::Finite, hi, {}};
}

bool is_theorem2_witness(const MeasureTriple& t, double eps) {
  return std::abs(t.e_abc - t.max_pair()) < eps && t.min_pair() >= eps;
}

Certificate certify_theorem3(const MeasureTriple& t, double eps) {
  Certificate c;
  c.kind = CertificateKind::PerStateLogBase;
  c.alpha = theorem3_alpha(t, eps);
  c.base = t.e_abc / t.max_pair();
  c.triple = t;
  c.residual_at_alpha = residual(t, *c.alpha);
  return c;
}

Certificate certify_relaxed(const MeasureTriple& t, double base, double eps) {
  Certificate c;
  c.kind = CertificateKind::RelaxedLogBase;
  c.alpha = theorem3_alpha_relaxed(base, t, eps);
  c.base = t.e_abc / t.max_pair();
  c.relaxed_base = base;
  c.triple = t;
  c.residual_at_alpha = residual(t, *c.alpha);
  return c;
}

Certificate certify_bound(double bound, double y0, bool empirical) {
  Certificate c;
  c.kind = CertificateKind::BoundedSolutionSet;
  c.alpha = alpha_from_bound(bound, y0);
  c.y = y0;
  c.bound = bound;
  c.empirical = empirical;
  return c;
}

Certificate witness_certificate(const MeasureTriple& t) {
  Certificate c;
  c.kind = CertificateKind::NonMonogamyWitness;
  c.triple = t;
  return c;
}

std::vector<BetaRow> beta_curves(const MeasureTriple& t, std::span<const double> y_grid,
                                 double eps) {
  std::vector<BetaRow> rows;
  rows.reserve(y_grid.size());
  for (double y : y_grid) {
    const XSolution sol = solve_x(t, y, eps);
    if (!sol.is_finite()) {
      std::ostringstream msg;
      msg << "x(y) is " << to_string(sol.kind) << " at y = " << y;
      throw DomainError(msg.str());
    }
    rows.push_back({y, sol.x * y, y});
  }
  return rows;
}

}  // namespace mono
