#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "bellpp/modes.hpp"

namespace bellpp {

using Complex = std::complex<double>;
using ComplexQuad = std::array<Complex, 4>;

/// One sample of the doubled phase space: coherent amplitudes alpha and the
/// independent conjugate-role amplitudes beta. beta is stored as drawn, NOT
/// pre-conjugated; the coordinate transforms below apply the conjugation.
struct PhasePoint {
    ComplexQuad alpha;
    ComplexQuad beta;
};

/// The same sample in sum/difference coordinates:
///   plus  = (alpha + conj(beta)) / 2
///   minus = (alpha - conj(beta)) / 2
struct SumDiffPoint {
    ComplexQuad plus;
    ComplexQuad minus;
};

/// |det| of the real-linear change of variables (alpha, beta) -> (plus,
/// minus). Each mode contributes a factor 4, so four modes give 4^4 = 256:
/// a density on (plus, minus) equals 256 times the matching density on
/// (alpha, beta).
inline constexpr double kSumDiffJacobian = 256.0;

inline SumDiffPoint to_sum_diff(const PhasePoint& p) {
    SumDiffPoint s;
    for (int k = 0; k < 4; ++k) {
        const Complex bc = std::conj(p.beta[k]);
        s.plus[k] = 0.5 * (p.alpha[k] + bc);
        s.minus[k] = 0.5 * (p.alpha[k] - bc);
    }
    return s;
}

inline PhasePoint from_sum_diff(const SumDiffPoint& s) {
    PhasePoint p;
    for (int k = 0; k < 4; ++k) {
        p.alpha[k] = s.plus[k] + s.minus[k];
        p.beta[k] = std::conj(s.plus[k] - s.minus[k]);
    }
    return p;
}

inline double norm_sq(const ComplexQuad& v) {
    double r = 0.0;
    for (const Complex& z : v) r += std::norm(z);
    return r;
}

inline bool is_finite(const ComplexQuad& v) {
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

inline bool is_finite(const PhasePoint& p) { return is_finite(p.alpha) && is_finite(p.beta); }

}  // namespace bellpp
