#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellpp/bell_sampler.hpp"
#include "bellpp/histogram.hpp"
#include "bellpp/observables.hpp"
#include "bellpp/statistics.hpp"

namespace bellpp {

enum class OutputFormat { csv, json };

inline std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

/// Complete description of a run; echoed verbatim into output manifests so
/// any file can be reproduced from its own header.
struct RunConfig {
    std::uint64_t seed = 12345;
    std::uint64_t samples = 2'000'000;
    int pairs = 1;
    SamplerKind sampler = SamplerKind::exact_decomposition;
    double theta_min = 0.0;
    double theta_max = 1.5707963267948966;  // pi/2
    int theta_steps = 25;
    int workers = 1;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void check() const;

    /// Inclusive grid of theta_steps sweep angles.
    std::vector<double> theta_grid() const;

    PairNumber pair_number() const { return PairNumber(pairs); }
};

/// Sweep result for one angle: the CHSH row plus the full complex delta
/// estimate and the per-mode photon-number estimates (used by the realness
/// cross-checks; not part of the CSV row).
struct SweepPoint {
    ChshCurvePoint chsh;
    CorrelationEstimate delta{};
    std::array<CorrelationEstimate, 4> mode_numbers{};
};

/// Runs the CHSH sweep. Deterministic for fixed (seed, samples, grid): the
/// output does not depend on the worker count. Sweep point j uses
/// substreams [j*samples, (j+1)*samples).
std::vector<SweepPoint> run_chsh_sweep(const RunConfig& cfg);

/// Selects the per-sample variable a histogram bins: either one site's spin
/// at a polarizer angle, or the product of the two sites' spins.
struct VariableSpec {
    enum class Kind { spin, correlation };

    Kind kind = Kind::spin;
    Site site = Site::A;     // spin only
    double theta = 0.0;      // spin angle, or theta_A for correlation
    double theta_b = 0.0;    // correlation only

    Complex evaluate(const PhasePoint& p) const;
    std::string descriptor() const;

    /// Parses "spin:<A|B>:<theta>" or "corr:<thetaA>:<thetaB>".
    static VariableSpec parse(const std::string& text);
};

struct HistConfig {
    RunConfig run;
    VariableSpec x;
    std::optional<VariableSpec> y;  // present -> joint 2D histogram
    int bins = 101;
    double lo = -4.0;
    double hi = 4.0;
};

/// Binned counts of Re(variable) plus the full complex-mean estimate of
/// each selected variable (the imaginary part is a sanity statistic).
struct HistResult {
    std::optional<Histogram1D> hist1d;
    std::optional<Histogram2D> hist2d;
    CorrelationEstimate x_mean;
    CorrelationEstimate y_mean;
};

HistResult run_hist(const HistConfig& cfg);

/// Raw samples for external analysis: sample index plus the 16 real
/// coordinates (alpha then beta, site-major mode order) per row.
struct DumpRow {
    std::uint64_t index = 0;
    std::array<double, 16> coords{};
};

inline constexpr std::uint64_t kDumpSampleCap = 10'000'000;

std::vector<DumpRow> run_dump(const RunConfig& cfg);

}  // namespace bellpp
