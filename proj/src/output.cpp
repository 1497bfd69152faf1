#include "bellpp/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "bellpp/modes.hpp"
#include "bellpp/version.hpp"

namespace bellpp {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (out) {
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            out.flush();
        }
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("failed to write " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec2;
        std::filesystem::remove(tmp, ec2);
        throw std::runtime_error("failed to move " + tmp + " to " + path + ": " + ec.message());
    }
}

nlohmann::json make_manifest(const std::string& command, const RunConfig& cfg,
                             const nlohmann::json& extra) {
    nlohmann::json m = {
        {"tool", "bellpp"},
        {"version", BELLPP_VERSION},
        {"command", command},
        {"seed", cfg.seed},
        {"samples", cfg.samples},
        {"pairs", cfg.pairs},
        {"sampler", to_string(cfg.sampler)},
        {"theta_min", cfg.theta_min},
        {"theta_max", cfg.theta_max},
        {"theta_steps", cfg.theta_steps},
        {"workers", cfg.workers},
        {"format", to_string(cfg.format)},
    };
    for (const auto& [key, value] : extra.items()) m[key] = value;
    return m;
}

const std::vector<std::string>& chsh_columns() {
    static const std::vector<std::string> cols = {
        "theta",          "delta_mean", "delta_stderr", "delta_imag_mean", "delta_theory",
        "c_ab",           "c_ab_stderr", "c_apb",       "c_apb_stderr",    "c_abp",
        "c_abp_stderr",   "c_apbp",      "c_apbp_stderr",
    };
    return cols;
}

std::vector<double> chsh_row(const ChshCurvePoint& p) {
    std::vector<double> row = {p.theta, p.delta_mean, p.delta_stderr, p.delta_imag_mean,
                               p.delta_theory};
    for (const auto& c : p.correlations) {
        row.push_back(c.mean.real());
        row.push_back(c.stderr_real);
    }
    return row;
}

namespace {

std::string manifest_comment(const nlohmann::json& manifest) {
    return "# manifest: " + manifest.dump() + "\n";
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

std::string numeric_csv_row(const std::vector<double>& values) {
    std::vector<std::string> fields;
    fields.reserve(values.size());
    for (double v : values) fields.push_back(format_g17(v));
    return join_csv(fields);
}

}  // namespace

std::string render_chsh_csv(const nlohmann::json& manifest,
                            const std::vector<SweepPoint>& points) {
    std::string out = manifest_comment(manifest);
    out += join_csv(chsh_columns());
    for (const auto& p : points) out += numeric_csv_row(chsh_row(p.chsh));
    return out;
}

nlohmann::json render_chsh_json(const nlohmann::json& manifest,
                                const std::vector<SweepPoint>& points) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : points) rows.push_back(chsh_row(p.chsh));
    return {{"manifest", manifest}, {"columns", chsh_columns()}, {"rows", rows}};
}

const std::vector<std::string>& dump_columns() {
    static const std::vector<std::string> cols = [] {
        std::vector<std::string> c = {"sample_index"};
        for (const char* field : {"alpha", "beta"}) {
            for (ModeIndex m : all_modes()) {
                c.push_back(std::string(field) + "_" + tag(m) + "_re");
                c.push_back(std::string(field) + "_" + tag(m) + "_im");
            }
        }
        return c;
    }();
    return cols;
}

std::string render_dump_csv(const nlohmann::json& manifest, const std::vector<DumpRow>& rows) {
    std::string out = manifest_comment(manifest);
    out += join_csv(dump_columns());
    for (const auto& r : rows) {
        std::vector<std::string> fields = {std::to_string(r.index)};
        for (double v : r.coords) fields.push_back(format_g17(v));
        out += join_csv(fields);
    }
    return out;
}

nlohmann::json render_dump_json(const nlohmann::json& manifest, const std::vector<DumpRow>& rows) {
    nlohmann::json out_rows = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(r.index);
        for (double v : r.coords) row.push_back(v);
        out_rows.push_back(std::move(row));
    }
    return {{"manifest", manifest}, {"columns", dump_columns()}, {"rows", out_rows}};
}

namespace {

nlohmann::json variable_summary(const VariableSpec& spec, const CorrelationEstimate& est) {
    return {
        {"variable", spec.descriptor()}, {"mean", est.mean.real()},
        {"mean_imag", est.mean.imag()},  {"stderr", est.stderr_real},
        {"stderr_imag", est.stderr_imag},
    };
}

}  // namespace

nlohmann::json render_hist_json(const nlohmann::json& manifest, const HistConfig& cfg,
                                const HistResult& result) {
    nlohmann::json out = {
        {"manifest", manifest},
        {"x", variable_summary(cfg.x, result.x_mean)},
        {"bins", cfg.bins},
        {"lo", cfg.lo},
        {"hi", cfg.hi},
    };
    if (result.hist1d) {
        const auto& h = *result.hist1d;
        out["bin_edges_x"] = h.bin_edges();
        out["counts"] = h.counts();
        out["underflow"] = h.underflow();
        out["overflow"] = h.overflow();
        out["total"] = h.total();
    } else {
        const auto& h = *result.hist2d;
        out["y"] = variable_summary(*cfg.y, result.y_mean);
        out["bin_edges_x"] = h.bin_edges_x();
        out["bin_edges_y"] = h.bin_edges_y();
        nlohmann::json counts = nlohmann::json::array();
        for (int ix = 0; ix < h.bins_x(); ++ix) {
            nlohmann::json row = nlohmann::json::array();
            for (int iy = 0; iy < h.bins_y(); ++iy)
                row.push_back(h.counts()[static_cast<std::size_t>(ix) * h.bins_y() + iy]);
            counts.push_back(std::move(row));
        }
        out["counts"] = std::move(counts);
        nlohmann::json outside = nlohmann::json::array();
        for (int cx = 0; cx < 3; ++cx) {
            nlohmann::json row = nlohmann::json::array();
            for (int cy = 0; cy < 3; ++cy)
                row.push_back(h.outside_regions()[static_cast<std::size_t>(cx * 3 + cy)]);
            outside.push_back(std::move(row));
        }
        out["outside_regions"] = std::move(outside);
        out["total"] = h.total();
    }
    return out;
}

namespace {

void write_with_sidecar(const RunConfig& cfg, const nlohmann::json& manifest,
                        const std::string& csv_content, const nlohmann::json& json_content) {
    if (cfg.format == OutputFormat::csv) {
        write_file_atomic(cfg.output_path, csv_content);
        write_file_atomic(cfg.output_path + ".manifest.json", manifest.dump(2) + "\n");
    } else {
        write_file_atomic(cfg.output_path, json_content.dump(2) + "\n");
    }
}

}  // namespace

void write_chsh_output(const RunConfig& cfg, const std::vector<SweepPoint>& points) {
    const auto manifest = make_manifest("chsh", cfg);
    write_with_sidecar(cfg, manifest, render_chsh_csv(manifest, points),
                       render_chsh_json(manifest, points));
}

void write_dump_output(const RunConfig& cfg, const std::vector<DumpRow>& rows) {
    const auto manifest = make_manifest("dump", cfg);
    write_with_sidecar(cfg, manifest, render_dump_csv(manifest, rows),
                       render_dump_json(manifest, rows));
}

void write_hist_output(const HistConfig& cfg, const HistResult& result) {
    nlohmann::json extra = {{"x", cfg.x.descriptor()},
                            {"bins", cfg.bins},
                            {"lo", cfg.lo},
                            {"hi", cfg.hi}};
    if (cfg.y) extra["y"] = cfg.y->descriptor();
    const auto manifest = make_manifest("hist", cfg.run, extra);
    write_file_atomic(cfg.run.output_path, render_hist_json(manifest, cfg, result).dump(2) + "\n");
}

}  // namespace bellpp
