#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mono/cli.hpp"
#include "mono/error.hpp"
#include "mono/io.hpp"
#include "mono/named_states.hpp"

using namespace mono;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("monocert_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("named state registry") {
  for (const std::string name : {"ghz", "w", "e223", "afs"}) CHECK_NOTHROW(resolve_named_state(name));
  const NamedState w = resolve_named_state("wclass:0,0.577,0.577,0.577");
  CHECK(w.renormalized);
  CHECK(w.state.amplitudes().norm() == doctest::Approx(1.0));
  CHECK(resolve_named_state("wclass:0,5.773502691896258e-1,0.5773502691896258,0.5773502691896258")
            .state.amplitude(1, 0, 0)
            .real() == doctest::Approx(1.0 / std::sqrt(3.0)));
  const NamedState s = resolve_named_state("schmidt:0.5,0,0.5,0.5,0.5,0");
  CHECK_FALSE(s.renormalized);
  CHECK_THROWS_AS(resolve_named_state("wclass:0,1,x,0"), InvalidArgument);
  CHECK_THROWS_AS(resolve_named_state("wclass:0,1,0"), InvalidArgument);
  CHECK_THROWS_AS(resolve_named_state("ghz:1"), InvalidArgument);
  CHECK_THROWS_AS(resolve_named_state("bell"), InvalidArgument);
  CHECK(named_state_names().size() == 6);
}

TEST_CASE("analyze: a non-monogamy witness exits with code 2") {
  const Result r = run({"analyze", "--example", "e223", "--measure", "ca", "--y", "2"});
  CHECK(r.code == cli::kExitWitness);
  const json j = json::parse(r.out);
  CHECK(j["theorem2_witness"] == true);
  CHECK(j["x_solution"]["kind"] == "unbounded");
  CHECK(j["min_alpha"]["finite"] == false);
  CHECK(j["theorem3"].is_null());
}

TEST_CASE("analyze: entanglement-cost example at y = 1") {
  const Result r = run({"analyze", "--example", "afs", "--measure", "ec-lookup", "--y", "1"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["x_solution"]["x"].get<double>() == doctest::Approx(1.0 / (std::log2(3.0) - 1.0)));
  CHECK(j["x_solution"]["x"].get<double>() == doctest::Approx(1.7095).epsilon(1e-4));
  CHECK(j["theorem3"]["alpha"].get<double>() == doctest::Approx(1.505007066432433));
}

TEST_CASE("analyze: GHZ concurrence") {
  const Result r = run({"analyze", "--example", "ghz", "--measure", "c", "--y", "2", "--alpha", "2"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["x_solution"]["kind"] == "zero");
  CHECK(j["min_alpha"]["alpha"] == 0.0);
  CHECK(j["residual_at_alpha"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("analyze: errors exit with code 1") {
  CHECK(run({"analyze", "--example", "e223", "--measure", "c"}).code == cli::kExitError);
  CHECK(run({"analyze", "--example", "nope", "--measure", "c"}).code == cli::kExitError);
  CHECK(run({"analyze", "--measure", "c"}).code == cli::kExitError);
  CHECK(run({"analyze", "--example", "ghz", "--measure", "tangle"}).code == cli::kExitError);
  CHECK(run({"analyze", "--state", "/nonexistent/state.json"}).code == cli::kExitError);
  CHECK(run({"frobnicate"}).code == cli::kExitError);
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("state files round-trip and malformed files are rejected") {
  const auto dir = scratch("state");
  const auto path = dir / "afs.json";
  write_state_file(path, antisymmetric_qutrit());
  const auto back = read_state_file(path);
  CHECK(back.dims() == Dims{3, 3, 3});
  CHECK((back.amplitudes() - antisymmetric_qutrit().amplitudes()).cwiseAbs().maxCoeff() == 0.0);

  const Result r = run({"analyze", "--state", path.string(), "--measure", "ec-lookup", "--y", "1"});
  CHECK(r.code == cli::kExitOk);

  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  CHECK(run({"analyze", "--state", write("a.json", "{\"dims\": [2,2,2]}")}).code == cli::kExitError);
  CHECK(run({"analyze", "--state", write("b.json", "not json")}).code == cli::kExitError);
  CHECK(run({"analyze", "--state",
             write("c.json", "{\"dims\":[1,1,2],\"amps\":[[1,0],[0]]}")}).code == cli::kExitError);
  CHECK(run({"analyze", "--state",
             write("d.json", "{\"dims\":[1,1,2],\"amps\":[[1,0]]}")}).code == cli::kExitError);
  CHECK(run({"analyze", "--state",
             write("e.json", "{\"dims\":[2,2,2],\"amps\":[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}")})
            .code == cli::kExitError);

  // Slightly denormalized input is accepted with a warning.
  const std::string drift = write(
      "f.json", "{\"dims\":[2,2,2],\"amps\":[[0.7071068,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0.7071068,0]]}");
  const Result ok = run({"analyze", "--state", drift, "--measure", "c"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.err.find("renormalized") != std::string::npos);
}

TEST_CASE("sweep writes a report and histogram, byte-identical across runs") {
  const auto d1 = scratch("sweep1");
  const auto d2 = scratch("sweep2");
  const std::vector<std::string> base{"sweep", "--dims", "2,2,2", "--measure", "c", "--y", "2", "-n", "2000", "--seed", "7"};
  auto a1 = base;
  a1.insert(a1.end(), {"--out", d1.string()});
  auto a2 = base;
  a2.insert(a2.end(), {"--out", d2.string()});
  const Result r1 = run(a1);
  const Result r2 = run(a2);
  CHECK(r1.code == cli::kExitOk);
  CHECK(r1.out == r2.out);
  CHECK(slurp(d1 / "sweep_report.json") == slurp(d2 / "sweep_report.json"));
  CHECK(slurp(d1 / "histogram.csv") == slurp(d2 / "histogram.csv"));

  const json j = json::parse(slurp(d1 / "sweep_report.json"));
  CHECK(j["certified_alpha"] == 2.0);
  CHECK(j["certificate"] == "empirical");
  CHECK(j["histogram"].size() == 50);
  const std::string csv = slurp(d1 / "histogram.csv");
  CHECK(csv.rfind("bucket_lo,bucket_hi,count\n", 0) == 0);

  const Result one = run({"sweep", "--dims", "2,2,2", "--measure", "c", "--y", "2", "-n", "1", "--out", d1.string()});
  CHECK(one.code == cli::kExitOk);
  CHECK(json::parse(one.out)["samples"] == 1);

  CHECK(run({"sweep", "--dims", "2,2", "--out", d1.string()}).code == cli::kExitError);
  CHECK(run({"sweep", "--dims", "2,2,2", "--family", "bogus", "--out", d1.string()}).code == cli::kExitError);
}

TEST_CASE("sweep with unbounded solutions exits with code 2") {
  const auto d = scratch("sweep_witness");
  const Result r = run({"sweep", "--dims", "2,2,3", "--measure", "ca", "--y", "2", "-n", "40", "--seed", "1",
                        "--eps", "0.01", "--out", d.string()});
  CHECK(r.code == cli::kExitWitness);
  CHECK(json::parse(r.out)["certified_alpha"].is_null());
}

TEST_CASE("W-class sweep through the CLI") {
  const auto d = scratch("sweep_w");
  const Result r = run({"sweep", "--dims", "2,2,2", "--measure", "ca", "--y", "2", "--family", "w", "-n", "1000",
                        "--out", d.string()});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["certified_alpha"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("certify") {
  Result r = run({"certify", "--example", "afs", "--measure", "ec-lookup", "--mode", "thm3"});
  CHECK(r.code == cli::kExitOk);
  json j = json::parse(r.out);
  CHECK(j["alpha"].get<double>() == doctest::Approx(1.505007066432433));
  CHECK(std::abs(j["residual_at_alpha"].get<double>()) <= 1e-9);

  r = run({"certify", "--example", "afs", "--measure", "ec-lookup", "--mode", "relaxed", "--c", "1.5"});
  CHECK(r.code == cli::kExitOk);
  j = json::parse(r.out);
  CHECK(j["alpha"].get<double>() == doctest::Approx(1.7095112913514548));
  CHECK(j["kind"] == "relaxed-log-base");

  CHECK(run({"certify", "--example", "ghz", "--measure", "c", "--mode", "thm3"}).code == cli::kExitError);
  CHECK(run({"certify", "--example", "afs", "--measure", "ec-lookup", "--mode", "relaxed"}).code ==
        cli::kExitError);
  CHECK(run({"certify", "--example", "afs", "--measure", "ec-lookup", "--mode", "relaxed", "--c", "1.7"}).code ==
        cli::kExitError);
  CHECK(run({"certify", "--example", "afs", "--measure", "ec-lookup", "--mode", "other"}).code ==
        cli::kExitError);
}

TEST_CASE("figures writes both CSV files") {
  const auto d = scratch("figures");
  CHECK(run({"figures", "--out", d.string()}).code == cli::kExitOk);
  const std::string f1 = slurp(d / "fig1.csv");
  const std::string f2 = slurp(d / "fig2.csv");
  CHECK(f1.rfind("alpha,f_alpha\n", 0) == 0);
  CHECK(f2.rfind("y,z1,z2\n", 0) == 0);
  CHECK(f1.find("\n3,1.98159401181\n") != std::string::npos);
  CHECK(f2.find("\n1,1.70951129135,1\n") != std::string::npos);
  CHECK(std::count(f1.begin(), f1.end(), '\n') == 301);
  CHECK(std::count(f2.begin(), f2.end(), '\n') == 392);

  const auto again = scratch("figures2");
  run({"figures", "--out", again.string()});
  CHECK(slurp(again / "fig1.csv") == f1);
  CHECK(slurp(again / "fig2.csv") == f2);
}

TEST_CASE("number formatting uses 12 significant digits") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
}
