#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mono/monogamy.hpp"
#include "mono/sweep.hpp"

namespace mono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitWitness = 2;

/// Where the analyzed state comes from: a named example or a state file.
struct StateSource {
  std::optional<std::string> example;
  std::optional<std::filesystem::path> file;
};

struct AnalysisRecord {
  std::string descriptor;
  MeasureTriple triple;
  XSolution x;
  MinAlpha min_alpha;
  std::optional<Certificate> theorem3;
  std::string theorem3_note;  // domain-error message when theorem3 is empty
  bool witness = false;
  bool renormalized = false;  // input norm was adjusted by more than 1e-9
  std::optional<double> alpha;  // user-requested exponent
  std::optional<double> residual_at_alpha;
};

nlohmann::json to_json(const AnalysisRecord& r);

AnalysisRecord cmd_analyze(const StateSource& source, MeasureId id, double y, double eps,
                           double tol, std::optional<double> alpha = std::nullopt);

/// Writes sweep_report.json and histogram.csv into outdir when given.
SweepReport cmd_sweep(const SweepOptions& options,
                      const std::optional<std::filesystem::path>& outdir);

enum class CertifyMode { PerState, Relaxed };

Certificate cmd_certify(const StateSource& source, MeasureId id, CertifyMode mode,
                        std::optional<double> c);

/// Writes fig1.csv and fig2.csv into outdir.
void cmd_figures(const std::filesystem::path& outdir);

/// Full command-line entry point. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mono::cli
