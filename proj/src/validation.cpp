#include "bellpp/validation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellpp/fock_oracle.hpp"
#include "bellpp/math_util.hpp"
#include "bellpp/observables.hpp"
#include "bellpp/statistics.hpp"

namespace bellpp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Validation streams live far above the sweep runners' per-sample range.
constexpr std::uint64_t kStreamBase = 1ULL << 48;
constexpr std::uint64_t stream_for(int check, int lane = 0) {
    return kStreamBase + (static_cast<std::uint64_t>(check) << 8) +
           static_cast<std::uint64_t>(lane);
}

std::array<double, 16> flatten_coords(const PhasePoint& p) {
    std::array<double, 16> out{};
    for (int m = 0; m < 4; ++m) {
        out[static_cast<std::size_t>(2 * m)] = p.alpha[static_cast<std::size_t>(m)].real();
        out[static_cast<std::size_t>(2 * m + 1)] = p.alpha[static_cast<std::size_t>(m)].imag();
        out[static_cast<std::size_t>(8 + 2 * m)] = p.beta[static_cast<std::size_t>(m)].real();
        out[static_cast<std::size_t>(8 + 2 * m + 1)] = p.beta[static_cast<std::size_t>(m)].imag();
    }
    return out;
}

std::string format_brief(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : checks) {
        items.push_back({{"name", c.name},
                         {"measured", c.measured},
                         {"expected", c.expected},
                         {"tolerance", c.tolerance},
                         {"passed", c.passed},
                         {"detail", c.detail}});
    }
    return {{"all_passed", all_passed()}, {"checks", items}};
}

CheckResult check_construction_consistency(std::uint64_t seed, int points, PairNumber n,
                                           double jacobian, double rel_tol) {
    RandomStream rng(seed, stream_for(1));
    const TruncatedState state = build_bell_state(n);
    double max_rel = 0.0;
    for (int i = 0; i < points; ++i) {
        const PhasePoint p = sample_bell(rng, n, SamplerKind::exact_decomposition);
        const double closed = bell_density(to_sum_diff(p), n);
        const double generic = jacobian * canonical_positive_p(state, p);
        const double rel = std::abs(generic - closed) / std::max(std::abs(closed), 1e-300);
        max_rel = std::max(max_rel, rel);
    }
    CheckResult r;
    r.name = "construction_consistency";
    r.measured = max_rel;
    r.expected = 0.0;
    r.tolerance = rel_tol;
    r.passed = max_rel <= rel_tol;
    r.detail = "max relative density deviation over " + std::to_string(points) +
               " sampled points, jacobian " + format_brief(jacobian);
    return r;
}

CheckResult check_sampler_equivalence(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                      double z_tol) {
    std::array<std::array<RunningMoments, 16>, 2> val;
    std::array<std::array<RunningMoments, 16>, 2> sq;
    for (int s = 0; s < 2; ++s) {
        RandomStream rng(seed, stream_for(2, s));
        const SamplerKind kind =
            s == 0 ? SamplerKind::exact_decomposition : SamplerKind::rejection;
        for (std::uint64_t i = 0; i < samples; ++i) {
            const auto coords = flatten_coords(sample_bell(rng, n, kind));
            for (int k = 0; k < 16; ++k) {
                val[s][k].add(coords[static_cast<std::size_t>(k)]);
                sq[s][k].add(coords[static_cast<std::size_t>(k)] *
                             coords[static_cast<std::size_t>(k)]);
            }
        }
    }
    double max_z = 0.0;
    auto z_between = [](const RunningMoments& a, const RunningMoments& b) {
        const double se = std::sqrt(a.standard_error() * a.standard_error() +
                                    b.standard_error() * b.standard_error());
        return std::abs(a.mean() - b.mean()) / se;
    };
    for (int k = 0; k < 16; ++k) {
        max_z = std::max(max_z, z_between(val[0][k], val[1][k]));
        max_z = std::max(max_z, z_between(sq[0][k], sq[1][k]));
    }
    CheckResult r;
    r.name = "sampler_equivalence";
    r.measured = max_z;
    r.expected = 0.0;
    r.tolerance = z_tol;
    r.passed = max_z <= z_tol;
    r.detail = "max |z| over 16 coordinate means and 16 second moments, " +
               std::to_string(samples) + " samples per sampler";
    return r;
}

CheckResult check_rejection_rate(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                 double abs_tol) {
    RandomStream rng(seed, stream_for(3));
    std::uint64_t trials = 0;
    for (std::uint64_t i = 0; i < samples; ++i) sample_plus_rejection(rng, n, &trials);
    const double rate = static_cast<double>(samples) / static_cast<double>(trials);
    const double expected = 1.0 / (n.count + 1);
    CheckResult r;
    r.name = "rejection_rate";
    r.measured = rate;
    r.expected = expected;
    r.tolerance = abs_tol;
    r.passed = std::abs(rate - expected) <= abs_tol;
    r.detail = std::to_string(samples) + " accepted draws over " + std::to_string(trials) +
               " proposals";
    return r;
}

CheckResult check_normalization(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                double z_tol) {
    RandomStream rng(seed, stream_for(4));
    // Proposal: per site, radius^2 ~ Gamma(N+2) with a uniform direction,
    // so q_site(mu) = |mu|^{2N} exp(-|mu|^2) / (pi^2 (N+1)!); the difference
    // half is the 4-component unit complex Gaussian.
    const double site_norm = kPi * kPi * static_cast<double>(factorial(n.count + 1));
    const double minus_norm = kPi * kPi * kPi * kPi;
    RunningMoments weights;
    for (std::uint64_t i = 0; i < samples; ++i) {
        SumDiffPoint s;
        double q = 1.0;
        for (int site = 0; site < 2; ++site) {
            const double r2 = rng.gamma_integer(n.count + 2);
            const double radius = std::sqrt(r2);
            const SitePair dir = sample_unit_c2(rng);
            s.plus[static_cast<std::size_t>(2 * site)] = radius * dir[0];
            s.plus[static_cast<std::size_t>(2 * site + 1)] = radius * dir[1];
            q *= ipow(r2, n.count) * std::exp(-r2) / site_norm;
        }
        s.minus = sample_minus(rng);
        q *= std::exp(-norm_sq(s.minus)) / minus_norm;
        weights.add(bell_density(s, n) / q);
    }
    const double se = weights.standard_error();
    CheckResult r;
    r.name = "normalization";
    r.measured = weights.mean();
    r.expected = 1.0;
    r.tolerance = z_tol * se;
    r.passed = std::abs(weights.mean() - 1.0) <= r.tolerance;
    r.detail = "importance-sampled integral of the closed-form density, stderr " +
               format_brief(se);
    return r;
}

CheckResult check_oracle_correlations(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                      int angle_pairs, double z_tol) {
    RandomStream rng(seed, stream_for(5));
    const TruncatedState state = build_bell_state(n);
    double max_z = 0.0;
    double worst_a = 0.0, worst_b = 0.0;
    for (int k = 0; k < angle_pairs; ++k) {
        const double theta_a = kPi * rng.uniform();
        const double theta_b = kPi * rng.uniform();
        const double exact = exact_correlation(state, theta_a, theta_b);
        ComplexAccumulator acc;
        for (std::uint64_t i = 0; i < samples; ++i) {
            const PhasePoint p = sample_bell(rng, n, SamplerKind::exact_decomposition);
            acc.add(spin_variable(p, Site::A, theta_a) * spin_variable(p, Site::B, theta_b));
        }
        const CorrelationEstimate est = acc.estimate();
        const double z = std::abs(est.mean.real() - exact) / est.stderr_real;
        if (z > max_z) {
            max_z = z;
            worst_a = theta_a;
            worst_b = theta_b;
        }
    }
    CheckResult r;
    r.name = "oracle_correlations";
    r.measured = max_z;
    r.expected = 0.0;
    r.tolerance = z_tol;
    r.passed = max_z <= z_tol;
    r.detail = "max |z| vs exact correlations at " + std::to_string(angle_pairs) +
               " random angle pairs (worst at theta_a=" + format_brief(worst_a) +
               ", theta_b=" + format_brief(worst_b) + "), N=" + std::to_string(n.count);
    return r;
}

CheckResult check_mean_numbers(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                               double z_tol) {
    RandomStream rng(seed, stream_for(6));
    std::array<ComplexAccumulator, 4> acc;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const PhasePoint p = sample_bell(rng, n, SamplerKind::exact_decomposition);
        for (std::size_t m = 0; m < 4; ++m)
            acc[m].add(photon_number(p.alpha[m], p.beta[m]));
    }
    const double expected = 0.5 * n.count;
    double max_z = 0.0;
    for (const auto& a : acc) {
        const CorrelationEstimate est = a.estimate();
        max_z = std::max(max_z, std::abs(est.mean.real() - expected) / est.stderr_real);
    }
    CheckResult r;
    r.name = "mean_numbers";
    r.measured = max_z;
    r.expected = 0.0;
    r.tolerance = z_tol;
    r.passed = max_z <= z_tol;
    r.detail = "max |z| of the four mode occupations vs N/2 = " + format_brief(expected);
    return r;
}

CheckResult check_hermitian_realness(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                     int sweep_points, double z_tol) {
    RandomStream rng(seed, stream_for(7));
    double max_z = 0.0;
    for (int j = 0; j < sweep_points; ++j) {
        const double theta =
            sweep_points == 1 ? 0.0 : 0.5 * kPi * j / static_cast<double>(sweep_points - 1);
        ComplexAccumulator delta;
        std::array<ComplexAccumulator, 4> numbers;
        for (std::uint64_t i = 0; i < samples; ++i) {
            const PhasePoint p = sample_bell(rng, n, SamplerKind::exact_decomposition);
            delta.add(chsh_sample(p, theta));
            for (std::size_t m = 0; m < 4; ++m)
                numbers[m].add(photon_number(p.alpha[m], p.beta[m]));
        }
        auto imag_z = [](const CorrelationEstimate& est) {
            return std::abs(est.mean.imag()) / est.stderr_imag;
        };
        max_z = std::max(max_z, imag_z(delta.estimate()));
        for (const auto& a : numbers) max_z = std::max(max_z, imag_z(a.estimate()));
    }
    CheckResult r;
    r.name = "hermitian_realness";
    r.measured = max_z;
    r.expected = 0.0;
    r.tolerance = z_tol;
    r.passed = max_z <= z_tol;
    r.detail = "max |Im(mean)| / stderr over the CHSH combination and mode numbers at " +
               std::to_string(sweep_points) + " sweep angles";
    return r;
}

ValidationReport run_validation(const RunConfig& cfg) {
    cfg.check();
    const PairNumber n = cfg.pair_number();
    ValidationReport report;
    report.checks.push_back(check_construction_consistency(cfg.seed, 100, n));
    report.checks.push_back(check_sampler_equivalence(cfg.seed, cfg.samples, n));
    report.checks.push_back(check_rejection_rate(cfg.seed, cfg.samples, n));
    report.checks.push_back(check_normalization(cfg.seed, cfg.samples, n));
    report.checks.push_back(check_oracle_correlations(cfg.seed, cfg.samples, n, 6, 4.0));
    report.checks.push_back(check_mean_numbers(cfg.seed, cfg.samples, n, 4.0));
    report.checks.push_back(check_hermitian_realness(cfg.seed, cfg.samples, n, 5, 4.0));
    return report;
}

}  // namespace bellpp
