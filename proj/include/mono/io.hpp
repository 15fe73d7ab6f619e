#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mono/figures.hpp"
#include "mono/sweep.hpp"

namespace mono {

// State files: {"dims": [dA, dB, dC], "amps": [[re, im], ...]} in row-major
// |abc> order.
PureTripartiteState parse_state_json(const nlohmann::json& doc);
PureTripartiteState read_state_file(const std::filesystem::path& path);
nlohmann::json state_to_json(const PureTripartiteState& state);
/// Writes with 17 significant digits.
void write_state_file(const std::filesystem::path& path, const PureTripartiteState& state);

nlohmann::json to_json(const MeasureTriple& t);
nlohmann::json to_json(const XSolution& s);
nlohmann::json to_json(const MinAlpha& m);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const SweepReport& r);

/// Fixed 12-significant-digit rendering, independent of the global locale.
std::string format_number(double v);

void write_histogram_csv(std::ostream& os, const SweepReport& r);
void write_fig1_csv(std::ostream& os, const std::vector<Fig1Row>& rows);
void write_fig2_csv(std::ostream& os, const std::vector<BetaRow>& rows);

}  // namespace mono
