#pragma once

#include <array>
#include <cmath>

#include "bellpp/phase_point.hpp"
#include "bellpp/statistics.hpp"

namespace bellpp {

/// Polarizer angle in radians. Physically periodic with period pi.
struct PolarizerSetting {
    double theta = 0.0;

    double reduced() const {
        constexpr double kPi = 3.14159265358979323846;
        double r = std::fmod(theta, kPi);
        if (r < 0.0) r += kPi;
        return r;
    }
};

/// The four analyzer angles as multiples of the sweep parameter theta:
/// (theta_A, theta_A', theta_B, theta_B') = (0, 2t, t, -t). Under this
/// convention the three "+" correlations of the CHSH combination all equal
/// cos 2t and the "-" one equals cos 6t, which maximizes the violation at
/// t = pi/8.
struct AngleConvention {
    double a_mult = 0.0;
    double a_prime_mult = 2.0;
    double b_mult = 1.0;
    double b_prime_mult = -1.0;

    struct Angles {
        double a, a_prime, b, b_prime;
    };

    Angles at(double theta) const {
        return {a_mult * theta, a_prime_mult * theta, b_mult * theta, b_prime_mult * theta};
    }
};

/// Amplitudes of one site's modes after a polarizer rotation by theta.
/// The same real-orthogonal rotation is applied to the alpha half and the
/// beta half.
struct RotatedSite {
    Complex a_par, b_par;
    Complex a_perp, b_perp;
};

inline RotatedSite rotate_site(const PhasePoint& p, Site site, double theta) {
    const int k = site_offset(site);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    RotatedSite r;
    r.a_par = c * p.alpha[k] + s * p.alpha[k + 1];
    r.a_perp = -s * p.alpha[k] + c * p.alpha[k + 1];
    r.b_par = c * p.beta[k] + s * p.beta[k + 1];
    r.b_perp = -s * p.beta[k] + c * p.beta[k + 1];
    return r;
}

/// The phase-space photon number n = a*b (unconjugated). Its sample mean
/// estimates the quantum count expectation of the mode.
inline Complex photon_number(Complex a, Complex b) { return a * b; }

/// Schwinger spin variable: difference of the two polarizer-output photon
/// numbers at one site. Its mean reproduces a spin projection; single
/// samples may fall outside [-1, 1].
inline Complex spin_variable(const PhasePoint& p, Site site, double theta) {
    const RotatedSite r = rotate_site(p, site, theta);
    return photon_number(r.a_par, r.b_par) - photon_number(r.a_perp, r.b_perp);
}

/// The four per-sample correlation products and their CHSH combination
/// delta = (ab + a'b + ab' - a'b')/2 - 1.
struct ChshTerms {
    Complex ab, apb, abp, apbp;
    Complex delta;
};

inline ChshTerms chsh_terms(const PhasePoint& p, double theta,
                            const AngleConvention& conv = {}) {
    const auto ang = conv.at(theta);
    const Complex a = spin_variable(p, Site::A, ang.a);
    const Complex ap = spin_variable(p, Site::A, ang.a_prime);
    const Complex b = spin_variable(p, Site::B, ang.b);
    const Complex bp = spin_variable(p, Site::B, ang.b_prime);
    ChshTerms t;
    t.ab = a * b;
    t.apb = ap * b;
    t.abp = a * bp;
    t.apbp = ap * bp;
    t.delta = 0.5 * (t.ab + t.apb + t.abp - t.apbp) - 1.0;
    return t;
}

inline Complex chsh_sample(const PhasePoint& p, double theta, const AngleConvention& conv = {}) {
    return chsh_terms(p, theta, conv).delta;
}

/// Quantum-mechanical prediction for the N=1 Bell state under the fixed
/// angle convention: Delta(theta) = (3 cos 2t - cos 6t)/2 - 1. Positive
/// values violate the CHSH bound; the maximum sqrt(2)-1 sits at t = pi/8.
inline double theoretical_delta(double theta) {
    return 0.5 * (3.0 * std::cos(2.0 * theta) - std::cos(6.0 * theta)) - 1.0;
}

/// One row of the CHSH sweep. Correlations ordered AB, A'B, AB', A'B'.
struct ChshCurvePoint {
    double theta = 0.0;
    double delta_mean = 0.0;
    double delta_stderr = 0.0;
    double delta_imag_mean = 0.0;
    double delta_theory = 0.0;
    std::array<CorrelationEstimate, 4> correlations{};
};

}  // namespace bellpp
