#include "mono/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mono/error.hpp"
#include "mono/figures.hpp"
#include "mono/io.hpp"
#include "mono/named_states.hpp"

namespace mono::cli {

using nlohmann::json;

namespace {

struct LoadedState {
  std::string descriptor;
  PureTripartiteState state;
  bool renormalized = false;
};

LoadedState load(const StateSource& source) {
  if (source.example.has_value() == source.file.has_value()) {
    throw InvalidArgument("exactly one of --example or --state is required");
  }
  if (source.example) {
    NamedState ns = resolve_named_state(*source.example);
    return {ns.descriptor, std::move(ns.state), ns.renormalized};
  }
  PureTripartiteState st = read_state_file(*source.file);
  const bool renorm = st.renormalized();
  return {source.file->string(), std::move(st), renorm};
}

Dims parse_dims(const std::string& text) {
  Dims d{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string::npos) throw InvalidArgument("--dims expects dA,dB,dC");
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, d[i]);
    if (ec != std::errc() || ptr != last) throw InvalidArgument("--dims expects dA,dB,dC");
    pos = end + 1;
  }
  return d;
}

unsigned threads_from_env() {
  const char* v = std::getenv("MONO_THREADS");
  if (v == nullptr) return 0;
  unsigned n = 0;
  const std::string_view s(v);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  return ec == std::errc() ? n : 0;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidArgument("cannot write '" + path.string() + "'");
  os << content;
  if (!os) throw InvalidArgument("write failed for '" + path.string() + "'");
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InvalidArgument("cannot create output directory '" + dir.string() + "'");
}

}  // namespace

json to_json(const AnalysisRecord& r) {
  json j = {
      {"state", r.descriptor},
      {"triple", mono::to_json(r.triple)},
      {"x_solution", mono::to_json(r.x)},
      {"min_alpha", mono::to_json(r.min_alpha)},
      {"theorem2_witness", r.witness},
      {"renormalized", r.renormalized},
  };
  j["theorem3"] = r.theorem3 ? mono::to_json(*r.theorem3) : json(nullptr);
  if (!r.theorem3) j["theorem3_note"] = r.theorem3_note;
  if (r.alpha) {
    j["alpha"] = *r.alpha;
    j["residual_at_alpha"] = *r.residual_at_alpha;
  }
  return j;
}

AnalysisRecord cmd_analyze(const StateSource& source, MeasureId id, double y, double eps,
                           double tol, std::optional<double> alpha) {
  const LoadedState ls = load(source);
  AnalysisRecord r;
  r.descriptor = ls.descriptor;
  r.renormalized = ls.renormalized;
  r.triple = measure_triple(ls.state, id);
  r.x = solve_x(r.triple, y, eps);
  r.min_alpha = min_alpha(r.triple, tol, eps);
  r.witness = is_theorem2_witness(r.triple, eps);
  try {
    r.theorem3 = certify_theorem3(r.triple, eps);
  } catch (const DomainError& e) {
    r.theorem3_note = e.what();
  }
  if (alpha) {
    if (!(*alpha > 0.0)) throw InvalidArgument("--alpha must be positive");
    r.alpha = alpha;
    r.residual_at_alpha = residual(r.triple, *alpha);
  }
  return r;
}

SweepReport cmd_sweep(const SweepOptions& options,
                      const std::optional<std::filesystem::path>& outdir) {
  SweepReport rep = sweep(options);
  if (outdir) {
    ensure_dir(*outdir);
    write_file(*outdir / "sweep_report.json", mono::to_json(rep).dump(2) + "\n");
    std::ostringstream csv;
    write_histogram_csv(csv, rep);
    write_file(*outdir / "histogram.csv", csv.str());
  }
  return rep;
}

Certificate cmd_certify(const StateSource& source, MeasureId id, CertifyMode mode,
                        std::optional<double> c) {
  const LoadedState ls = load(source);
  const MeasureTriple t = measure_triple(ls.state, id);
  if (mode == CertifyMode::PerState) return certify_theorem3(t);
  if (!c) throw InvalidArgument("--mode relaxed requires --c");
  return certify_relaxed(t, *c);
}

void cmd_figures(const std::filesystem::path& outdir) {
  ensure_dir(outdir);
  std::ostringstream f1;
  write_fig1_csv(f1, figure1_rows());
  write_file(outdir / "fig1.csv", f1.str());
  std::ostringstream f2;
  write_fig2_csv(f2, figure2_rows());
  write_file(outdir / "fig2.csv", f2.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and certify alpha-monogamy of entanglement measures on tripartite pure states", "monocert"};
  app.require_subcommand(1);

  std::string example;
  std::string state_file;
  std::string measure = "c";
  double y = 2.0;
  double eps = kDefaultEps;
  double tol = 1e-6;
  std::optional<double> alpha;
  std::optional<double> c;
  std::string dims_text = "2,2,2";
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  std::string family = "haar";
  std::string outdir = ".";
  std::string mode = "thm3";

  auto add_source = [&](CLI::App* sub) {
    auto* ex = sub->add_option("--example", example,
                               "Named state: ghz, w, wclass:b0,b1,b2,b3, "
                               "schmidt:l0,l1,l2,l3,l4,phi, e223, afs");
    auto* st = sub->add_option("--state", state_file, "JSON state file");
    ex->excludes(st);
  };

  auto* analyze = app.add_subcommand("analyze", "Measure triple, x solution and exponents of one state");
  add_source(analyze);
  analyze->add_option("--measure", measure, "c, ca, eof or ec-lookup")->capture_default_str();
  analyze->add_option("--y", y, "Exponent y of the x equation")->capture_default_str();
  analyze->add_option("--alpha", alpha, "Also report the residual at this exponent");
  analyze->add_option("--eps", eps, "Equality tolerance")->capture_default_str();
  analyze->add_option("--tol", tol, "Bisection tolerance for the minimal exponent")
      ->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Sample states and probe boundedness of X_y");
  sweep_cmd->add_option("--dims", dims_text, "dA,dB,dC")->capture_default_str();
  sweep_cmd->add_option("--measure", measure, "c, ca or eof")->capture_default_str();
  sweep_cmd->add_option("--y", y, "Exponent y")->capture_default_str();
  sweep_cmd->add_option("-n,--samples", samples, "Number of sampled states")->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  sweep_cmd->add_option("--family", family, "haar, w or schmidt")->capture_default_str();
  sweep_cmd->add_option("--eps", eps, "Equality tolerance")->capture_default_str();
  sweep_cmd->add_option("--out", outdir, "Output directory")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Per-state exponent certificate");
  add_source(certify);
  certify->add_option("--measure", measure, "c, ca, eof or ec-lookup")->capture_default_str();
  certify->add_option("--mode", mode, "thm3 or relaxed")->capture_default_str();
  certify->add_option("--c", c, "Relaxed base c in (1, b]");

  auto* figures = app.add_subcommand("figures", "Write fig1.csv and fig2.csv");
  figures->add_option("--out", outdir, "Output directory")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  auto source = [&] {
    StateSource s;
    if (!example.empty()) s.example = example;
    if (!state_file.empty()) s.file = state_file;
    return s;
  };

  try {
    if (analyze->parsed()) {
      const AnalysisRecord r = cmd_analyze(source(), parse_measure_id(measure), y, eps, tol, alpha);
      if (r.renormalized) err << "warning: input state renormalized (norm off by more than 1e-9)\n";
      out << to_json(r).dump(2) << '\n';
      return r.witness ? kExitWitness : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      SweepOptions o;
      o.dims = parse_dims(dims_text);
      o.measure = parse_measure_id(measure);
      o.y = y;
      o.samples = samples;
      o.seed = seed;
      o.family = parse_family(family);
      o.eps = eps;
      o.threads = threads_from_env();
      const SweepReport rep = cmd_sweep(o, std::filesystem::path(outdir));
      json summary = mono::to_json(rep);
      summary.erase("histogram");
      out << summary.dump(2) << '\n';
      return rep.unbounded_count > 0 ? kExitWitness : kExitOk;
    }
    if (certify->parsed()) {
      CertifyMode m;
      if (mode == "thm3") {
        m = CertifyMode::PerState;
      } else if (mode == "relaxed") {
        m = CertifyMode::Relaxed;
      } else {
        throw InvalidArgument("--mode must be thm3 or relaxed");
      }
      const Certificate cert = cmd_certify(source(), parse_measure_id(measure), m, c);
      out << mono::to_json(cert).dump(2) << '\n';
      return kExitOk;
    }
    if (figures->parsed()) {
      cmd_figures(outdir);
      out << "wrote " << (std::filesystem::path(outdir) / "fig1.csv").string() << " and "
          << (std::filesystem::path(outdir) / "fig2.csv").string() << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace mono::cli
