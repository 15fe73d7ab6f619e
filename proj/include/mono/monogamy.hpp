#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mono/measures.hpp"

namespace mono {

/// Absolute tolerance for equality tests on measure values.
inline constexpr double kDefaultEps = 1e-9;

/// Outcome of x (E^y_{A|BC} - max^y) = min^y for one state.
///
/// x is the reciprocal of the parameter mu in E_{A|BC} = mu E_{AB} + E_{AC}
/// at y = 1.
struct XSolution {
  enum class Kind : std::uint8_t { Zero, Finite, Unbounded };

  Kind kind = Kind::Zero;
  double x = 0.0;  // meaningful only for Finite
  double y = 1.0;

  [[nodiscard]] bool is_finite() const { return kind == Kind::Finite; }
};

std::string_view to_string(XSolution::Kind kind);

/// Classifies with gap = e_abc^y - max^y and m = min^y:
/// Zero if m < eps, Finite(m / gap) if gap >= eps, else Unbounded.
/// Throws DomainError when e_abc < max(e_ab, e_ac) - eps.
XSolution solve_x(const MeasureTriple& t, double y, double eps = kDefaultEps);

/// e_abc^alpha - e_ab^alpha - e_ac^alpha.
double residual(const MeasureTriple& t, double alpha);

/// max(M y0, y0).
double alpha_from_bound(double bound, double y0);

/// True when e_abc > max(e_ab, e_ac) and min(e_ab, e_ac) > 0, both by at least eps.
bool in_lambda(const MeasureTriple& t, double eps = kDefaultEps);

/// log 2 / log b, b = min(e_abc / e_ac, e_abc / e_ab). DomainError outside Lambda.
double theorem3_alpha(const MeasureTriple& t, double eps = kDefaultEps);

/// log 2 / log c for 1 < c.
double theorem3_alpha_relaxed(double c);

/// As above, additionally checking c <= b for the given triple.
double theorem3_alpha_relaxed(double c, const MeasureTriple& t, double eps = kDefaultEps);

struct MinAlpha {
  enum class Kind : std::uint8_t { Finite, NotFinite };

  Kind kind = Kind::Finite;
  /// Smallest exponent with non-negative residual; 0 when min(e_ab, e_ac) = 0.
  double alpha = 0.0;
  std::string diagnostic;

  [[nodiscard]] bool finite() const { return kind == Kind::Finite; }
};

inline constexpr double kBisectionLow = 1e-3;
inline constexpr double kBisectionHigh = 64.0;
inline constexpr int kBisectionMaxIter = 200;

/// Root of the residual in alpha by bisection on [1e-3, 64].
MinAlpha min_alpha(const MeasureTriple& t, double tol, double eps = kDefaultEps);

/// |e_abc - max| < eps and min >= eps: non-monogamous at every exponent.
bool is_theorem2_witness(const MeasureTriple& t, double eps = kDefaultEps);

enum class CertificateKind : std::uint8_t {
  BoundedSolutionSet,
  PerStateLogBase,
  RelaxedLogBase,
  NonMonogamyWitness,
};

std::string_view to_string(CertificateKind kind);

/// A certified exponent (or non-monogamy witness) with the inputs it came from.
struct Certificate {
  CertificateKind kind = CertificateKind::BoundedSolutionSet;
  std::optional<double> alpha;
  std::optional<double> y;
  std::optional<double> bound;  // M
  std::optional<double> base;   // b
  std::optional<double> relaxed_base;  // c
  std::optional<MeasureTriple> triple;
  std::optional<double> residual_at_alpha;
  bool empirical = false;
};

Certificate certify_theorem3(const MeasureTriple& t, double eps = kDefaultEps);
Certificate certify_relaxed(const MeasureTriple& t, double c, double eps = kDefaultEps);
Certificate certify_bound(double bound, double y0, bool empirical);
Certificate witness_certificate(const MeasureTriple& t);

struct BetaRow {
  double y = 0.0;
  double z1 = 0.0;  // x(y) * y
  double z2 = 0.0;  // y
};

/// Rows (y, x(y) y, y). DomainError if any grid point has a non-finite x.
std::vector<BetaRow> beta_curves(const MeasureTriple& t, std::span<const double> y_grid,
                                 double eps = kDefaultEps);

}  // namespace mono
