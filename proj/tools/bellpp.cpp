#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bellpp/output.hpp"
#include "bellpp/runner.hpp"
#include "bellpp/validation.hpp"
#include "bellpp/version.hpp"

namespace {

void add_run_options(CLI::App* cmd, bellpp::RunConfig& cfg, bool with_grid) {
    cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    cmd->add_option("--samples", cfg.samples,
                    "Monte Carlo samples (per sweep point for chsh)")
        ->capture_default_str();
    cmd->add_option("--pairs", cfg.pairs, "Photon pairs N")
        ->check(CLI::Range(1, bellpp::PairNumber::kMax))
        ->capture_default_str();
    static const std::map<std::string, bellpp::SamplerKind> kSamplers{
        {"exact", bellpp::SamplerKind::exact_decomposition},
        {"rejection", bellpp::SamplerKind::rejection}};
    cmd->add_option("--sampler", cfg.sampler, "Sampling algorithm")
        ->transform(CLI::CheckedTransformer(kSamplers, CLI::ignore_case))
        ->default_str("exact");
    if (with_grid) {
        cmd->add_option("--theta-min", cfg.theta_min, "Sweep start angle (radians)")
            ->capture_default_str();
        cmd->add_option("--theta-max", cfg.theta_max, "Sweep end angle (radians)")
            ->capture_default_str();
        cmd->add_option("--theta-steps", cfg.theta_steps, "Number of sweep angles")
            ->capture_default_str();
    }
    cmd->add_option("--workers", cfg.workers, "Worker threads (result is identical for any value)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_output_options(CLI::App* cmd, bellpp::RunConfig& cfg) {
    cmd->add_option("--output", cfg.output_path, "Output file path")->required();
    static const std::map<std::string, bellpp::OutputFormat> kFormats{
        {"csv", bellpp::OutputFormat::csv}, {"json", bellpp::OutputFormat::json}};
    cmd->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("csv");
}

int chsh_command(const bellpp::RunConfig& cfg) {
    const auto points = bellpp::run_chsh_sweep(cfg);
    bellpp::write_chsh_output(cfg, points);
    const auto* best = &points.front();
    for (const auto& p : points)
        if (p.chsh.delta_mean > best->chsh.delta_mean) best = &p;
    std::printf("wrote %s (%zu sweep points, %llu samples each)\n", cfg.output_path.c_str(),
                points.size(), static_cast<unsigned long long>(cfg.samples));
    std::printf("peak delta %.6f +/- %.6f at theta = %.6f (theory %.6f)\n",
                best->chsh.delta_mean, best->chsh.delta_stderr, best->chsh.theta,
                best->chsh.delta_theory);
    return 0;
}

int hist_command(bellpp::HistConfig& cfg, const std::string& x_spec, const std::string& y_spec) {
    cfg.x = bellpp::VariableSpec::parse(x_spec);
    if (!y_spec.empty()) cfg.y = bellpp::VariableSpec::parse(y_spec);
    const auto result = bellpp::run_hist(cfg);
    bellpp::write_hist_output(cfg, result);
    std::printf("wrote %s\n", cfg.run.output_path.c_str());
    std::printf("x = %s: mean %.6f + %.6fi (stderr %.6f)\n", cfg.x.descriptor().c_str(),
                result.x_mean.mean.real(), result.x_mean.mean.imag(), result.x_mean.stderr_real);
    if (cfg.y)
        std::printf("y = %s: mean %.6f + %.6fi (stderr %.6f)\n", cfg.y->descriptor().c_str(),
                    result.y_mean.mean.real(), result.y_mean.mean.imag(),
                    result.y_mean.stderr_real);
    return 0;
}

int validate_command(const bellpp::RunConfig& cfg) {
    const auto report = bellpp::run_validation(cfg);
    for (const auto& c : report.checks)
        std::printf("[%s] %-26s measured=%-12.6g expected=%-12.6g tolerance=%-12.6g %s\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.expected,
                    c.tolerance, c.detail.c_str());
    if (!cfg.output_path.empty())
        bellpp::write_file_atomic(cfg.output_path, report.to_json().dump(2) + "\n");
    if (!report.all_passed()) {
        std::fprintf(stderr, "validation failed\n");
        return 2;
    }
    std::printf("all %zu checks passed\n", report.checks.size());
    return 0;
}

int dump_command(const bellpp::RunConfig& cfg) {
    const auto rows = bellpp::run_dump(cfg);
    bellpp::write_dump_output(cfg, rows);
    std::printf("wrote %s (%zu samples)\n", cfg.output_path.c_str(), rows.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-space Monte Carlo for photonic Bell-state correlations"};
    app.set_version_flag("--version", std::string(BELLPP_VERSION));
    app.require_subcommand(1);

    bellpp::RunConfig chsh_cfg;
    auto* chsh = app.add_subcommand("chsh", "Sweep the CHSH combination over analyzer angles");
    add_run_options(chsh, chsh_cfg, true);
    add_output_options(chsh, chsh_cfg);

    bellpp::HistConfig hist_cfg;
    hist_cfg.run.samples = 1'000'000;
    std::string x_spec;
    std::string y_spec;
    auto* hist =
        app.add_subcommand("hist", "Histogram spin or correlation variables (JSON output)");
    add_run_options(hist, hist_cfg.run, false);
    hist->add_option("--x", x_spec, "Variable: spin:<A|B>:<theta> or corr:<thetaA>:<thetaB>")
        ->required();
    hist->add_option("--y", y_spec, "Optional second variable (makes a joint 2D histogram)");
    hist->add_option("--bins", hist_cfg.bins, "Bins per axis")->capture_default_str();
    hist->add_option("--min", hist_cfg.lo, "Lower range edge")->capture_default_str();
    hist->add_option("--max", hist_cfg.hi, "Upper range edge")->capture_default_str();
    hist->add_option("--output", hist_cfg.run.output_path, "Output file path")->required();

    bellpp::RunConfig validate_cfg;
    validate_cfg.samples = 100'000;
    auto* validate = app.add_subcommand("validate", "Run the self-consistency check battery");
    add_run_options(validate, validate_cfg, false);
    validate->add_option("--output", validate_cfg.output_path, "Optional JSON report path");

    bellpp::RunConfig dump_cfg;
    dump_cfg.samples = 10'000;
    auto* dump = app.add_subcommand("dump", "Write raw phase-space samples");
    add_run_options(dump, dump_cfg, false);
    add_output_options(dump, dump_cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (chsh->parsed()) return chsh_command(chsh_cfg);
        if (hist->parsed()) return hist_command(hist_cfg, x_spec, y_spec);
        if (validate->parsed()) return validate_command(validate_cfg);
        if (dump->parsed()) return dump_command(dump_cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
