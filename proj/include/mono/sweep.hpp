#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mono/monogamy.hpp"

namespace mono {

/// State family sampled by a sweep.
enum class Family : std::uint8_t {
  Haar,     // Haar-random pure states on the requested dims
  WClass,   // Haar on the coefficient sphere of b0|000>+b1|100>+b2|010>+b3|001>
  Schmidt,  // lambda uniform on the positive orthant of the unit 4-sphere, phi uniform
};

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct SweepOptions {
  Dims dims{2, 2, 2};
  MeasureId measure = MeasureId::Concurrence;
  double y = 2.0;
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  Family family = Family::Haar;
  double eps = kDefaultEps;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

struct HistogramBucket {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t count = 0;
};

struct Witness {
  std::uint64_t seed = 0;
  MeasureTriple triple;
};

inline constexpr int kHistogramBuckets = 50;

/// Aggregate over the sampled solution set X_y.
///
/// zero_count + finite_count + unbounded_count + omega_violations == samples.
/// Samples whose triple violates E_A|BC >= max(E_AB, E_AC) lie outside the
/// admissible set and are only counted. certified_alpha = max(M y, y) with M
/// the largest finite x, present iff no unbounded solution was seen. The
/// certificate is empirical: sampling cannot prove boundedness of X_y.
struct SweepReport {
  SweepOptions options;
  std::int64_t samples = 0;
  double max_finite_x = 0.0;
  std::int64_t zero_count = 0;
  std::int64_t finite_count = 0;
  std::int64_t unbounded_count = 0;
  std::int64_t omega_violations = 0;
  std::vector<Witness> witnesses;  // sorted by seed
  std::vector<HistogramBucket> histogram;
  std::optional<double> certified_alpha;
  /// Smallest residual at certified_alpha over the admissible samples.
  std::optional<double> min_residual_at_alpha;
  bool empirical = true;
};

/// Seed of sample `index` in a sweep with master seed `master`.
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index);

/// Draws one state of the family. W-class and Schmidt families need (2,2,2).
PureTripartiteState sample_state(Family family, const Dims& dims, std::uint64_t seed);

SweepReport sweep(const SweepOptions& options);

}  // namespace mono
