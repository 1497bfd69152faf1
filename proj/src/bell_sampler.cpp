#include "bellpp/bell_sampler.hpp"

#include <cmath>

#include "bellpp/math_util.hpp"

namespace bellpp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Unconjugated bilinear product u . v = u0*v0 + u1*v1.
Complex bilinear_dot(const SitePair& u, const SitePair& v) {
    return u[0] * v[0] + u[1] * v[1];
}

}  // namespace

SitePair sample_unit_c2(RandomStream& rng) {
    for (;;) {
        SitePair v = {rng.complex_normal(), rng.complex_normal()};
        const double n2 = std::norm(v[0]) + std::norm(v[1]);
        if (n2 > 0.0) {
            const double inv = 1.0 / std::sqrt(n2);
            return {v[0] * inv, v[1] * inv};
        }
    }
}

ComplexQuad sample_minus(RandomStream& rng) {
    return {rng.complex_normal(), rng.complex_normal(), rng.complex_normal(),
            rng.complex_normal()};
}

ComplexQuad sample_plus_exact(RandomStream& rng, PairNumber n) {
    // mu_A: radius^2 ~ Gamma(N+2, 1), direction uniform on the C^2 sphere.
    const double ra2 = rng.gamma_integer(n.count + 2);
    const SitePair e = sample_unit_c2(rng);
    const double ra = std::sqrt(ra2);

    // Unit vector f with e . f = 0 (bilinear), so the z and w components of
    // mu_B below are independent coordinates in an orthonormal basis.
    const SitePair f = {-e[1], e[0]};

    // Along conj(e): |z|^2 ~ Gamma(N+1, 1), uniform phase. Orthogonal
    // remainder w stays a plain complex Gaussian.
    const double z2 = rng.gamma_integer(n.count + 1);
    const Complex z = std::polar(std::sqrt(z2), 2.0 * kPi * rng.uniform());
    const Complex w = rng.complex_normal();

    ComplexQuad out;
    out[0] = ra * e[0];
    out[1] = ra * e[1];
    out[2] = z * std::conj(e[0]) + w * f[0];
    out[3] = z * std::conj(e[1]) + w * f[1];
    return out;
}

double rejection_acceptance_probability(const SitePair& dir_a, const SitePair& dir_b,
                                        PairNumber n) {
    const double mag2 = std::norm(bilinear_dot(dir_a, dir_b));
    const double p = ipow(mag2, n.count);
    return p < 1.0 ? p : 1.0;
}

ComplexQuad sample_plus_rejection(RandomStream& rng, PairNumber n, std::uint64_t* trials) {
    for (;;) {
        const SitePair da = sample_unit_c2(rng);
        const SitePair db = sample_unit_c2(rng);
        if (trials != nullptr) ++*trials;
        if (rng.uniform() < rejection_acceptance_probability(da, db, n)) {
            const double ra = std::sqrt(rng.gamma_integer(n.count + 2));
            const double rb = std::sqrt(rng.gamma_integer(n.count + 2));
            return {ra * da[0], ra * da[1], rb * db[0], rb * db[1]};
        }
    }
}

PhasePoint sample_bell(RandomStream& rng, PairNumber n, SamplerKind kind) {
    SumDiffPoint s;
    s.plus = kind == SamplerKind::exact_decomposition ? sample_plus_exact(rng, n)
                                                      : sample_plus_rejection(rng, n);
    s.minus = sample_minus(rng);
    return from_sum_diff(s);
}

double bell_density(const SumDiffPoint& s, PairNumber n) {
    const Complex dot = s.plus[0] * s.plus[2] + s.plus[1] * s.plus[3];
    const double norm_const =
        ipow(kPi, 8) * (n.count + 1) * factorial(n.count) * factorial(n.count);
    return ipow(std::norm(dot), n.count) / norm_const *
           std::exp(-norm_sq(s.plus) - norm_sq(s.minus));
}

}  // namespace bellpp
