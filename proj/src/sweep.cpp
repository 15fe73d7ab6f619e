#include "mono/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "mono/error.hpp"

namespace mono {

namespace {

enum class Outcome : std::uint8_t { Zero, Finite, Unbounded, OutsideOmega };

struct SampleResult {
  Outcome outcome = Outcome::Zero;
  double x = 0.0;
  std::uint64_t seed = 0;
  MeasureTriple triple;
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampleResult evaluate(const SweepOptions& opt, std::uint64_t index) {
  SampleResult r;
  r.seed = sample_seed(opt.seed, index);
  r.triple = measure_triple(sample_state(opt.family, opt.dims, r.seed), opt.measure);
  if (r.triple.e_abc < r.triple.max_pair() - opt.eps) {
    r.outcome = Outcome::OutsideOmega;
    return r;
  }
  const XSolution sol = solve_x(r.triple, opt.y, opt.eps);
  switch (sol.kind) {
    case XSolution::Kind::Zero:
      r.outcome = Outcome::Zero;
      break;
    case XSolution::Kind::Finite:
      r.outcome = Outcome::Finite;
      r.x = sol.x;
      break;
    case XSolution::Kind::Unbounded:
      r.outcome = Outcome::Unbounded;
      break;
  }
  return r;
}

void require_qubits(const Dims& dims, Family f) {
  if (dims != Dims{2, 2, 2}) {
    throw InvalidArgument(std::string("family '") + std::string(to_string(f)) +
                          "' requires dims (2,2,2)");
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Haar:
      return "haar";
    case Family::WClass:
      return "w";
    case Family::Schmidt:
      return "schmidt";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "haar") return Family::Haar;
  if (text == "w" || text == "w_class" || text == "wclass") return Family::WClass;
  if (text == "schmidt") return Family::Schmidt;
  throw InvalidArgument("unknown family '" + std::string(text) +
                        "' (expected haar, w or schmidt)");
}

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ index);
}

PureTripartiteState sample_state(Family family, const Dims& dims, std::uint64_t seed) {
  switch (family) {
    case Family::Haar:
      return haar_random(dims, seed);
    case Family::WClass: {
      require_qubits(dims, family);
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> gauss;
      std::array<cplx, 4> b;
      double norm = 0.0;
      for (auto& v : b) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v = {re, im};
        norm += std::norm(v);
      }
      norm = std::sqrt(norm);
      return w_class(b[0] / norm, b[1] / norm, b[2] / norm, b[3] / norm);
    }
    case Family::Schmidt: {
      require_qubits(dims, family);
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> gauss;
      std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
      std::array<double, 5> lam;
      double norm = 0.0;
      for (auto& l : lam) {
        l = std::abs(gauss(rng));
        norm += l * l;
      }
      norm = std::sqrt(norm);
      for (auto& l : lam) l /= norm;
      return from_schmidt({lam[0], lam[1], lam[2], lam[3], lam[4], phase(rng)});
    }
  }
  throw InvalidArgument("unknown family");
}

SweepReport sweep(const SweepOptions& options) {
  if (options.samples < 1) throw InvalidArgument("sample count must be >= 1");
  if (!(options.y > 0.0)) throw InvalidArgument("exponent y must be positive");
  if (!(options.eps > 0.0)) throw InvalidArgument("eps must be positive");

  const auto n = static_cast<std::size_t>(options.samples);
  std::vector<SampleResult> results(n);
  // The first sample runs on the caller so unsupported dims/measure surface directly.
  results[0] = evaluate(options, 0);

  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(n, 256)));

  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = 1 + w; i < n; i += workers) results[i] = evaluate(options, i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepReport rep;
  rep.options = options;
  rep.samples = options.samples;
  for (const auto& r : results) {
    switch (r.outcome) {
      case Outcome::Zero:
        ++rep.zero_count;
        break;
      case Outcome::Finite:
        ++rep.finite_count;
        rep.max_finite_x = std::max(rep.max_finite_x, r.x);
        break;
      case Outcome::Unbounded:
        ++rep.unbounded_count;
        rep.witnesses.push_back({r.seed, r.triple});
        break;
      case Outcome::OutsideOmega:
        ++rep.omega_violations;
        break;
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.seed < b.seed; });

  if (rep.finite_count > 0) {
    const double width = rep.max_finite_x / kHistogramBuckets;
    rep.histogram.resize(kHistogramBuckets);
    for (int k = 0; k < kHistogramBuckets; ++k) {
      rep.histogram[k].lo = width * k;
      rep.histogram[k].hi = k + 1 == kHistogramBuckets ? rep.max_finite_x : width * (k + 1);
    }
    for (const auto& r : results) {
      if (r.outcome != Outcome::Finite) continue;
      const int k = std::min(kHistogramBuckets - 1, static_cast<int>(r.x / width));
      ++rep.histogram[k].count;
    }
  }

  if (rep.unbounded_count == 0) {
    rep.certified_alpha = alpha_from_bound(rep.max_finite_x, options.y);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : results) {
      if (r.outcome == Outcome::OutsideOmega) continue;
      worst = std::min(worst, residual(r.triple, *rep.certified_alpha));
    }
    if (std::isfinite(worst)) rep.min_residual_at_alpha = worst;
  }
  return rep;
}

}  // namespace mono
