#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bellpp/runner.hpp"

namespace bellpp {

/// Doubles in CSV output carry 17 significant digits (value-preserving).
std::string format_g17(double v);

/// Writes content to path via a temporary file plus rename, so a failed
/// write never leaves a partial file behind. Throws std::runtime_error on
/// I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

/// Run manifest embedded in every output file: enough to reproduce the file
/// exactly.
nlohmann::json make_manifest(const std::string& command, const RunConfig& cfg,
                             const nlohmann::json& extra = nlohmann::json::object());

/// Fixed CHSH sweep column set (matches the CSV header order).
const std::vector<std::string>& chsh_columns();

std::vector<double> chsh_row(const ChshCurvePoint& p);

std::string render_chsh_csv(const nlohmann::json& manifest, const std::vector<SweepPoint>& points);
nlohmann::json render_chsh_json(const nlohmann::json& manifest,
                                const std::vector<SweepPoint>& points);

const std::vector<std::string>& dump_columns();
std::string render_dump_csv(const nlohmann::json& manifest, const std::vector<DumpRow>& rows);
nlohmann::json render_dump_json(const nlohmann::json& manifest, const std::vector<DumpRow>& rows);

nlohmann::json render_hist_json(const nlohmann::json& manifest, const HistConfig& cfg,
                                const HistResult& result);

/// Writes the file for one command, honoring cfg.format where the command
/// supports both formats. CSV outputs also get a <path>.manifest.json
/// sidecar.
void write_chsh_output(const RunConfig& cfg, const std::vector<SweepPoint>& points);
void write_dump_output(const RunConfig& cfg, const std::vector<DumpRow>& rows);
void write_hist_output(const HistConfig& cfg, const HistResult& result);

}  // namespace bellpp
