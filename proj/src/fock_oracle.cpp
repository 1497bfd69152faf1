#include "bellpp/fock_oracle.hpp"

#include <cmath>

#include "bellpp/math_util.hpp"

namespace bellpp {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double norm_sq(const TruncatedState& state) {
    double n = 0.0;
    for (const auto& [occ, amp] : state.amplitudes) n += std::norm(amp);
    return n;
}

TruncatedState build_bell_state(PairNumber n) {
    // (a+_{A+} a+_{B+} + a+_{A-} a+_{B-})^N |0> expands binomially; the
    // C(N,k) k! (N-k)! operator factorials collapse to N! on every term,
    // leaving N+1 equally weighted kets.
    TruncatedState state;
    state.cutoff = n.count;
    const double amp = 1.0 / std::sqrt(static_cast<double>(n.count + 1));
    for (int k = 0; k <= n.count; ++k) {
        state.amplitudes[{k, n.count - k, k, n.count - k}] = amp;
    }
    return state;
}

TruncatedState rotate_polarization(const TruncatedState& state, Site site, double theta) {
    const int k0 = site_offset(site);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    TruncatedState out;
    out.cutoff = state.cutoff;
    for (const auto& [occ, amp] : state.amplitudes) {
        const int np = occ[k0];
        const int nm = occ[k0 + 1];
        // Polynomial coefficient of the monomial (a+_+)^np (a+_-)^nm, then
        // substitute a+_+ -> c b1 - s b2 and a+_- -> s b1 + c b2.
        const Complex coeff = amp / std::sqrt(factorial(np) * factorial(nm));
        for (int i = 0; i <= np; ++i) {
            for (int j = 0; j <= nm; ++j) {
                const int n1 = i + j;
                const int n2 = np + nm - i - j;
                const double weight = binomial(np, i) * ipow(c, i) * ipow(-s, np - i) *
                                      binomial(nm, j) * ipow(s, j) * ipow(c, nm - j);
                FockOccupation occ2 = occ;
                occ2[k0] = n1;
                occ2[k0 + 1] = n2;
                out.amplitudes[occ2] += coeff * weight * std::sqrt(factorial(n1) * factorial(n2));
            }
        }
    }
    return out;
}

double exact_mean_number(const TruncatedState& state, ModeIndex mode) {
    double mean = 0.0;
    for (const auto& [occ, amp] : state.amplitudes) {
        mean += occ[static_cast<std::size_t>(mode.flat())] * std::norm(amp);
    }
    return mean;
}

double exact_correlation(const TruncatedState& state, double theta_a, double theta_b) {
    const TruncatedState rotated =
        rotate_polarization(rotate_polarization(state, Site::A, theta_a), Site::B, theta_b);
    double corr = 0.0;
    for (const auto& [occ, amp] : rotated.amplitudes) {
        corr += static_cast<double>(occ[0] - occ[1]) * static_cast<double>(occ[2] - occ[3]) *
                std::norm(amp);
    }
    return corr;
}

double canonical_positive_p(const TruncatedState& state, const PhasePoint& p) {
    ComplexQuad mu;
    double mu_sq = 0.0;
    double diff_sq = 0.0;
    for (int k = 0; k < 4; ++k) {
        const Complex bc = std::conj(p.beta[k]);
        mu[k] = 0.5 * (p.alpha[k] + bc);
        mu_sq += std::norm(mu[k]);
        diff_sq += std::norm(p.alpha[k] - bc);
    }

    // <mu|psi> with <mu|n> = exp(-|mu|^2/2) prod conj(mu_k)^{n_k}/sqrt(n_k!)
    Complex braket = 0.0;
    for (const auto& [occ, amp] : state.amplitudes) {
        Complex term = amp;
        for (int k = 0; k < 4; ++k) {
            Complex mc = std::conj(mu[k]);
            Complex power = 1.0;
            for (int q = 0; q < occ[k]; ++q) power *= mc;
            term *= power / std::sqrt(factorial(occ[k]));
        }
        braket += term;
    }

    const double prefactor = ipow(1.0 / (2.0 * kPi), 8);
    return prefactor * std::exp(-diff_sq / 4.0 - mu_sq) * std::norm(braket);
}

}  // namespace bellpp
