#include "bellpp/runner.hpp"

#include <cmath>
#include <stdexcept>

#include "bellpp/parallel.hpp"

namespace bellpp {

void RunConfig::check() const {
    if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    PairNumber check_pairs(pairs);  // validates range
    (void)check_pairs;
    if (theta_steps < 1) throw std::invalid_argument("config: theta_steps must be >= 1");
    if (!(theta_min <= theta_max))
        throw std::invalid_argument("config: need theta_min <= theta_max");
    if (!std::isfinite(theta_min) || !std::isfinite(theta_max))
        throw std::invalid_argument("config: theta bounds must be finite");
    if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
}

std::vector<double> RunConfig::theta_grid() const {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(theta_steps));
    if (theta_steps == 1) {
        grid.push_back(theta_min);
        return grid;
    }
    const double step = (theta_max - theta_min) / (theta_steps - 1);
    for (int i = 0; i < theta_steps; ++i) grid.push_back(theta_min + step * i);
    return grid;
}

namespace {

struct ChshPointAccumulator {
    ComplexAccumulator delta;
    std::array<ComplexAccumulator, 4> correlations;  // AB, A'B, AB', A'B'
    std::array<ComplexAccumulator, 4> mode_numbers;

    void merge(const ChshPointAccumulator& o) {
        delta.merge(o.delta);
        for (int i = 0; i < 4; ++i) correlations[i].merge(o.correlations[i]);
        for (int i = 0; i < 4; ++i) mode_numbers[i].merge(o.mode_numbers[i]);
    }
};

}  // namespace

std::vector<SweepPoint> run_chsh_sweep(const RunConfig& cfg) {
    cfg.check();
    const PairNumber n = cfg.pair_number();
    const std::vector<double> grid = cfg.theta_grid();

    std::vector<SweepPoint> result;
    result.reserve(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double theta = grid[j];
        const std::uint64_t stream_base = static_cast<std::uint64_t>(j) * cfg.samples;

        auto acc = sample_reduce(
            cfg.seed, stream_base, cfg.samples, cfg.workers,
            [] { return ChshPointAccumulator{}; },
            [&](RandomStream& rng, ChshPointAccumulator& a) {
                const PhasePoint p = sample_bell(rng, n, cfg.sampler);
                const ChshTerms t = chsh_terms(p, theta);
                a.delta.add(t.delta);
                a.correlations[0].add(t.ab);
                a.correlations[1].add(t.apb);
                a.correlations[2].add(t.abp);
                a.correlations[3].add(t.apbp);
                for (int m = 0; m < 4; ++m)
                    a.mode_numbers[m].add(photon_number(p.alpha[m], p.beta[m]));
            });

        SweepPoint point;
        const CorrelationEstimate d = acc.delta.estimate();
        point.delta = d;
        point.chsh.theta = theta;
        point.chsh.delta_mean = d.mean.real();
        point.chsh.delta_stderr = d.stderr_real;
        point.chsh.delta_imag_mean = d.mean.imag();
        point.chsh.delta_theory = theoretical_delta(theta);
        for (int i = 0; i < 4; ++i) point.chsh.correlations[i] = acc.correlations[i].estimate();
        for (int i = 0; i < 4; ++i) point.mode_numbers[i] = acc.mode_numbers[i].estimate();
        result.push_back(point);
    }
    return result;
}

Complex VariableSpec::evaluate(const PhasePoint& p) const {
    if (kind == Kind::spin) return spin_variable(p, site, theta);
    return spin_variable(p, Site::A, theta) * spin_variable(p, Site::B, theta_b);
}

std::string VariableSpec::descriptor() const {
    if (kind == Kind::spin)
        return "spin:" + to_string(site) + ":" + std::to_string(theta);
    return "corr:" + std::to_string(theta) + ":" + std::to_string(theta_b);
}

VariableSpec VariableSpec::parse(const std::string& text) {
    const auto fail = [&] {
        throw std::invalid_argument("variable spec '" + text +
                                    "': expected spin:<A|B>:<theta> or corr:<thetaA>:<thetaB>");
    };
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) fail();
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) fail();
    const std::string head = text.substr(0, c1);
    const std::string mid = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string tail = text.substr(c2 + 1);

    const auto to_angle = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size() || !std::isfinite(v)) fail();
            return v;
        } catch (const std::invalid_argument&) {
            fail();
        } catch (const std::out_of_range&) {
            fail();
        }
        return 0.0;  // unreachable
    };

    VariableSpec spec;
    if (head == "spin") {
        spec.kind = Kind::spin;
        if (mid == "A")
            spec.site = Site::A;
        else if (mid == "B")
            spec.site = Site::B;
        else
            fail();
        spec.theta = to_angle(tail);
    } else if (head == "corr") {
        spec.kind = Kind::correlation;
        spec.theta = to_angle(mid);
        spec.theta_b = to_angle(tail);
    } else {
        fail();
    }
    return spec;
}

namespace {

struct HistAccumulator {
    std::optional<Histogram1D> h1;
    std::optional<Histogram2D> h2;
    ComplexAccumulator x_mean;
    ComplexAccumulator y_mean;

    void merge(const HistAccumulator& o) {
        if (h1) h1->merge(*o.h1);
        if (h2) h2->merge(*o.h2);
        x_mean.merge(o.x_mean);
        y_mean.merge(o.y_mean);
    }
};

}  // namespace

HistResult run_hist(const HistConfig& cfg) {
    cfg.run.check();
    if (cfg.bins < 1) throw std::invalid_argument("hist: bins must be >= 1");
    if (!(cfg.lo < cfg.hi) || !std::isfinite(cfg.lo) || !std::isfinite(cfg.hi))
        throw std::invalid_argument("hist: need finite lo < hi");

    const PairNumber n = cfg.run.pair_number();
    const bool joint = cfg.y.has_value();

    auto acc = sample_reduce(
        cfg.run.seed, 0, cfg.run.samples, cfg.run.workers,
        [&] {
            HistAccumulator a;
            if (joint)
                a.h2.emplace(cfg.bins, cfg.lo, cfg.hi, cfg.bins, cfg.lo, cfg.hi);
            else
                a.h1.emplace(cfg.bins, cfg.lo, cfg.hi);
            return a;
        },
        [&](RandomStream& rng, HistAccumulator& a) {
            const PhasePoint p = sample_bell(rng, n, cfg.run.sampler);
            const Complex x = cfg.x.evaluate(p);
            a.x_mean.add(x);
            if (joint) {
                const Complex y = cfg.y->evaluate(p);
                a.y_mean.add(y);
                a.h2->add(x.real(), y.real());
            } else {
                a.h1->add(x.real());
            }
        });

    HistResult r;
    r.hist1d = std::move(acc.h1);
    r.hist2d = std::move(acc.h2);
    r.x_mean = acc.x_mean.estimate();
    r.y_mean = acc.y_mean.estimate();
    return r;
}

std::vector<DumpRow> run_dump(const RunConfig& cfg) {
    cfg.check();
    if (cfg.samples > kDumpSampleCap)
        throw std::invalid_argument("dump: samples exceeds the cap of " +
                                    std::to_string(kDumpSampleCap));
    const PairNumber n = cfg.pair_number();

    std::vector<DumpRow> rows;
    rows.reserve(cfg.samples);
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        RandomStream rng(cfg.seed, i);
        const PhasePoint p = sample_bell(rng, n, cfg.sampler);
        DumpRow row;
        row.index = i;
        for (int m = 0; m < 4; ++m) {
            row.coords[static_cast<std::size_t>(2 * m)] = p.alpha[m].real();
            row.coords[static_cast<std::size_t>(2 * m + 1)] = p.alpha[m].imag();
            row.coords[static_cast<std::size_t>(8 + 2 * m)] = p.beta[m].real();
            row.coords[static_cast<std::size_t>(8 + 2 * m + 1)] = p.beta[m].imag();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bellpp
