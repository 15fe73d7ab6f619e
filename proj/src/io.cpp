#include "mono/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

#include "mono/error.hpp"

namespace mono {

using nlohmann::json;

PureTripartiteState parse_state_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amps")) {
      throw InvalidArgument("state document needs fields 'dims' and 'amps'");
    }
    const auto& jd = doc.at("dims");
    if (!jd.is_array() || jd.size() != 3) throw InvalidArgument("'dims' must be [dA, dB, dC]");
    Dims dims{};
    for (int i = 0; i < 3; ++i) {
      if (!jd[i].is_number_integer()) throw InvalidArgument("'dims' entries must be integers");
      dims[i] = jd[i].get<int>();
    }
    const auto& ja = doc.at("amps");
    if (!ja.is_array()) throw InvalidArgument("'amps' must be an array of [re, im] pairs");
    CVector amps(static_cast<Eigen::Index>(ja.size()));
    for (std::size_t i = 0; i < ja.size(); ++i) {
      const auto& pair = ja[i];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw InvalidArgument("amplitude " + std::to_string(i) + " is not a [re, im] pair");
      }
      amps[static_cast<Eigen::Index>(i)] = cplx(pair[0].get<double>(), pair[1].get<double>());
    }
    return PureTripartiteState(dims, std::move(amps));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed state document: ") + e.what());
  }
}

PureTripartiteState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open state file '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidArgument("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_state_json(doc);
}

json state_to_json(const PureTripartiteState& state) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
    const cplx a = state.amplitudes()[i];
    amps.push_back({a.real(), a.imag()});
  }
  const Dims& d = state.dims();
  return {{"dims", {d[0], d[1], d[2]}}, {"amps", std::move(amps)}};
}

void write_state_file(const std::filesystem::path& path, const PureTripartiteState& state) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write state file '" + path.string() + "'");
  // nlohmann::json emits doubles in shortest round-trip form (up to 17 digits).
  out << state_to_json(state).dump(2) << '\n';
}

json to_json(const MeasureTriple& t) {
  return {{"measure", std::string(to_string(t.measure_id))},
          {"e_abc", t.e_abc},
          {"e_ab", t.e_ab},
          {"e_ac", t.e_ac}};
}

json to_json(const XSolution& s) {
  json j = {{"kind", std::string(to_string(s.kind))}, {"y", s.y}};
  j["x"] = s.is_finite() ? json(s.x) : json(nullptr);
  return j;
}

json to_json(const MinAlpha& m) {
  json j = {{"finite", m.finite()}};
  j["alpha"] = m.finite() ? json(m.alpha) : json(nullptr);
  if (!m.diagnostic.empty()) j["diagnostic"] = m.diagnostic;
  return j;
}

json to_json(const Certificate& c) {
  json j = {{"kind", std::string(to_string(c.kind))}, {"empirical", c.empirical}};
  auto opt = [&](const char* key, const std::optional<double>& v) {
    j[key] = v ? json(*v) : json(nullptr);
  };
  opt("alpha", c.alpha);
  opt("y", c.y);
  opt("bound_M", c.bound);
  opt("base_b", c.base);
  opt("relaxed_c", c.relaxed_base);
  opt("residual_at_alpha", c.residual_at_alpha);
  j["triple"] = c.triple ? to_json(*c.triple) : json(nullptr);
  return j;
}

json to_json(const SweepReport& r) {
  const auto& o = r.options;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"seed", w.seed}, {"triple", to_json(w.triple)}});
  }
  json hist = json::array();
  for (const auto& b : r.histogram) {
    hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  }
  json j = {
      {"dims", {o.dims[0], o.dims[1], o.dims[2]}},
      {"measure", std::string(to_string(o.measure))},
      {"family", std::string(to_string(o.family))},
      {"y", o.y},
      {"seed", o.seed},
      {"eps", o.eps},
      {"samples", r.samples},
      {"max_finite_x", r.max_finite_x},
      {"zero_count", r.zero_count},
      {"finite_count", r.finite_count},
      {"unbounded_count", r.unbounded_count},
      {"omega_violations", r.omega_violations},
      {"witnesses", std::move(witnesses)},
      {"histogram", std::move(hist)},
      {"certificate", r.empirical ? "empirical" : "exact"},
  };
  j["certified_alpha"] = r.certified_alpha ? json(*r.certified_alpha) : json(nullptr);
  j["min_residual_at_alpha"] =
      r.min_residual_at_alpha ? json(*r.min_residual_at_alpha) : json(nullptr);
  return j;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << v;
  return os.str();
}

void write_histogram_csv(std::ostream& os, const SweepReport& r) {
  os << "bucket_lo,bucket_hi,count\n";
  for (const auto& b : r.histogram) {
    os << format_number(b.lo) << ',' << format_number(b.hi) << ',' << b.count << '\n';
  }
}

void write_fig1_csv(std::ostream& os, const std::vector<Fig1Row>& rows) {
  os << "alpha,f_alpha\n";
  for (const auto& r : rows) os << format_number(r.alpha) << ',' << format_number(r.f_alpha) << '\n';
}

void write_fig2_csv(std::ostream& os, const std::vector<BetaRow>& rows) {
  os << "y,z1,z2\n";
  for (const auto& r : rows) {
    os << format_number(r.y) << ',' << format_number(r.z1) << ',' << format_number(r.z2) << '\n';
  }
}

}  // namespace mono
