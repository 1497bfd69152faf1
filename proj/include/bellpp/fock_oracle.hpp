#pragma once

#include <complex>
#include <map>

#include "bellpp/bell_sampler.hpp"
#include "bellpp/modes.hpp"
#include "bellpp/phase_point.hpp"

namespace bellpp {

/// Photon numbers per mode, ordered as ModeIndex::flat().
using FockOccupation = std::array<int, 4>;

/// Pure state over a truncated 4-mode Fock basis, stored sparsely on its
/// support. Exact, sampler-independent ground truth for small N.
struct TruncatedState {
    std::map<FockOccupation, Complex> amplitudes;
    int cutoff = 0;
};

double norm_sq(const TruncatedState& state);

/// The normalized N-pair Bell state: equal amplitudes 1/sqrt(N+1) on the
/// occupations (k, N-k, k, N-k), k = 0..N.
TruncatedState build_bell_state(PairNumber n);

/// Re-expresses the state in the polarizer-rotated mode basis of one site
/// (the same real-orthogonal rotation as observables' rotate_site), by
/// substituting the creation operators in the state's polynomial expansion.
/// Exact; conserves the per-site photon number, so the cutoff is unchanged.
TruncatedState rotate_polarization(const TruncatedState& state, Site site, double theta);

/// <n_mode> by direct summation over the sparse amplitudes.
double exact_mean_number(const TruncatedState& state, ModeIndex mode);

/// <(n_Apar - n_Aperp)(n_Bpar - n_Bperp)> with each site's number operators
/// taken in its rotated polarization basis.
double exact_correlation(const TruncatedState& state, double theta_a, double theta_b);

/// The generic positive-P construction evaluated pointwise:
///   (2 pi)^{-8} exp(-|alpha - conj(beta)|^2 / 4) |<mu|psi>|^2,
/// mu = (alpha + conj(beta))/2. Manifestly nonnegative; for the Bell family
/// it equals bell_density(to_sum_diff(p), N) / kSumDiffJacobian.
double canonical_positive_p(const TruncatedState& state, const PhasePoint& p);

}  // namespace bellpp
