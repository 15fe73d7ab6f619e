#include "mono/named_states.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "mono/error.hpp"

namespace mono {

namespace {

std::vector<double> parse_reals(std::string_view text, std::size_t expected,
                                std::string_view name) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw InvalidArgument("cannot parse '" + std::string(tok) + "' as a real in '" +
                            std::string(name) + "' parameters");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.size() != expected) {
    throw InvalidArgument(std::string(name) + " expects " + std::to_string(expected) +
                          " comma-separated reals, got " + std::to_string(out.size()));
  }
  return out;
}

// Rescales the first `count` entries to unit Euclidean norm.
bool normalize_prefix(std::vector<double>& v, std::size_t count) {
  double sq = 0.0;
  for (std::size_t i = 0; i < count; ++i) sq += v[i] * v[i];
  if (sq == 0.0) throw InvalidArgument("state parameters are all zero");
  const double norm = std::sqrt(sq);
  for (std::size_t i = 0; i < count; ++i) v[i] /= norm;
  return std::abs(norm - 1.0) > 1e-9;
}

}  // namespace

NamedState resolve_named_state(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;

  auto no_args = [&] {
    if (has_args) throw InvalidArgument("example '" + std::string(name) + "' takes no parameters");
  };

  if (name == "ghz") {
    no_args();
    return {"ghz", ghz(), false};
  }
  if (name == "w") {
    no_args();
    return {"w", w_state(), false};
  }
  if (name == "e223") {
    no_args();
    return {"e223", example_223(), false};
  }
  if (name == "afs") {
    no_args();
    return {"afs", antisymmetric_qutrit(), false};
  }
  if (name == "wclass") {
    if (!has_args) throw InvalidArgument("wclass needs parameters: wclass:b0,b1,b2,b3");
    auto b = parse_reals(args, 4, "wclass");
    const bool rescaled = normalize_prefix(b, 4);
    return {std::string(spec), w_class(b[0], b[1], b[2], b[3]), rescaled};
  }
  if (name == "schmidt") {
    if (!has_args) {
      throw InvalidArgument("schmidt needs parameters: schmidt:l0,l1,l2,l3,l4,phi");
    }
    auto p = parse_reals(args, 6, "schmidt");
    const bool rescaled = normalize_prefix(p, 5);
    return {std::string(spec), from_schmidt({p[0], p[1], p[2], p[3], p[4], p[5]}), rescaled};
  }
  throw InvalidArgument("unknown example '" + std::string(name) +
                        "' (expected ghz, w, wclass:..., schmidt:..., e223, afs)");
}

std::vector<std::string> named_state_names() {
  return {"ghz", "w", "wclass", "schmidt", "e223", "afs"};
}

}  // namespace mono
