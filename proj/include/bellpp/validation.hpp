#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellpp/bell_sampler.hpp"
#include "bellpp/runner.hpp"

namespace bellpp {

/// Outcome of one self-consistency check. `measured` is compared against
/// `expected` with absolute tolerance `tolerance`; the exact meaning of the
/// three numbers is check-specific and spelled out in `detail`.
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

/// Max relative deviation between the closed-form density and the generic
/// construction times the coordinate-change jacobian, over `points` sampled
/// phase-space points. The jacobian is a parameter so tests can prove the
/// check has teeth (any other value must fail).
CheckResult check_construction_consistency(std::uint64_t seed, int points, PairNumber n,
                                           double jacobian = kSumDiffJacobian,
                                           double rel_tol = 1e-10);

/// Largest z-score between the two samplers over the per-coordinate means
/// and second moments (32 statistics), `samples` draws each.
CheckResult check_sampler_equivalence(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                      double z_tol = 4.0);

/// Empirical acceptance rate of the rejection sampler against the exact
/// value 1/(N+1).
CheckResult check_rejection_rate(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                 double abs_tol = 0.01);

/// Importance-sampling estimate of the total integral of the closed-form
/// density (proposal with explicit normalization), expected 1.
CheckResult check_normalization(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                double z_tol = 3.0);

/// Sampled polarization correlations at `angle_pairs` random analyzer
/// settings against the exact truncated-basis oracle.
CheckResult check_oracle_correlations(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                      int angle_pairs = 10, double z_tol = 3.0);

/// Sampled per-mode photon numbers against the exact value N/2.
CheckResult check_mean_numbers(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                               double z_tol = 3.0);

/// Imaginary parts of Hermitian-observable estimators (CHSH combination and
/// mode numbers) across a small angle sweep, in units of their standard
/// errors.
CheckResult check_hermitian_realness(std::uint64_t seed, std::uint64_t samples, PairNumber n,
                                     int sweep_points = 5, double z_tol = 4.0);

/// Runs the full battery at the sizes given in cfg (cfg.samples per
/// Monte Carlo check).
ValidationReport run_validation(const RunConfig& cfg);

}  // namespace bellpp
