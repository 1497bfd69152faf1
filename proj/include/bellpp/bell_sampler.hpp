#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bellpp/phase_point.hpp"
#include "bellpp/random.hpp"

namespace bellpp {

/// Number of photon pairs N in the Bell family. N=1 is the two-photon Bell
/// state; the cap keeps the exact Fock oracle cheap.
struct PairNumber {
    static constexpr int kMax = 8;

    explicit PairNumber(int n) : count(n) {
        if (n < 1 || n > kMax)
            throw std::invalid_argument("PairNumber: need 1 <= N <= " + std::to_string(kMax));
    }

    int count;
};

/// Two independent algorithms targeting the identical sum-coordinate
/// distribution; they cross-validate each other.
enum class SamplerKind { exact_decomposition, rejection };

inline std::string to_string(SamplerKind k) {
    return k == SamplerKind::exact_decomposition ? "exact" : "rejection";
}

/// Pair of complex amplitudes belonging to one site.
using SitePair = std::array<Complex, 2>;

/// Uniform direction on the unit sphere of C^2 (4 real dimensions).
SitePair sample_unit_c2(RandomStream& rng);

/// Difference coordinates: 4 iid complex Gaussians with density
/// exp(-|z|^2)/pi per component.
ComplexQuad sample_minus(RandomStream& rng);

/// Sum coordinates mu = (mu_A, mu_B) with density proportional to
/// |mu_A . mu_B|^{2N} exp(-|mu_A|^2 - |mu_B|^2), where the dot is the
/// unconjugated bilinear product. Exact decomposition:
/// conditioned on mu_A the dot product collapses to |mu_A| z with z the
/// component of mu_B along conj(mu_A)/|mu_A|, so |mu_A|^2 ~ Gamma(N+2),
/// |z|^2 ~ Gamma(N+1) with uniform phase, and the orthogonal remainder of
/// mu_B stays Gaussian.
ComplexQuad sample_plus_exact(RandomStream& rng, PairNumber n);

/// Same target via von Neumann rejection. Proposal: independent gamma
/// radii and uniform directions; the acceptance ratio
/// |dir_A . dir_B|^{2N} is <= 1 by Cauchy-Schwarz. `trials`, when given,
/// is incremented once per proposal so callers can measure the rate.
ComplexQuad sample_plus_rejection(RandomStream& rng, PairNumber n,
                                  std::uint64_t* trials = nullptr);

/// Acceptance probability of the rejection proposal for unit directions,
/// clamped to [0, 1].
double rejection_acceptance_probability(const SitePair& dir_a, const SitePair& dir_b,
                                        PairNumber n);

/// One unweighted sample of the N-pair Bell state in (alpha, beta)
/// coordinates.
PhasePoint sample_bell(RandomStream& rng, PairNumber n, SamplerKind kind);

/// The normalized closed-form density of the N-pair Bell state on the
/// 16-real-dimensional sum/difference space:
///   |mu_A . mu_B|^{2N} / (pi^8 (N+1) (N!)^2) * exp(-|plus|^2 - |minus|^2)
double bell_density(const SumDiffPoint& s, PairNumber n);

}  // namespace bellpp
