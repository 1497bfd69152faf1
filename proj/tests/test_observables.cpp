#include <doctest.h>

#include <cmath>

#include "bellpp/bell_sampler.hpp"
#include "bellpp/fock_oracle.hpp"
#include "bellpp/observables.hpp"

using namespace bellpp;

namespace {
constexpr double kPi = 3.14159265358979323846;

PhasePoint random_point(RandomStream& rng) {
    PhasePoint p;
    for (int k = 0; k < 4; ++k) {
        p.alpha[k] = rng.complex_normal();
        p.beta[k] = rng.complex_normal();
    }
    return p;
}
}  // namespace

TEST_CASE("polarizer angle reduction") {
    CHECK(PolarizerSetting{0.2}.reduced() == doctest::Approx(0.2));
    CHECK(PolarizerSetting{0.2 + kPi}.reduced() == doctest::Approx(0.2));
    CHECK(PolarizerSetting{-0.1}.reduced() == doctest::Approx(kPi - 0.1));
}

TEST_CASE("site rotation at special angles") {
    RandomStream rng(301, 0);
    const PhasePoint p = random_point(rng);
    SUBCASE("identity") {
        const RotatedSite r = rotate_site(p, Site::A, 0.0);
        CHECK(r.a_par == p.alpha[0]);
        CHECK(r.a_perp == p.alpha[1]);
        CHECK(r.b_par == p.beta[0]);
        CHECK(r.b_perp == p.beta[1]);
    }
    SUBCASE("quarter turn swaps the channels") {
        const RotatedSite r = rotate_site(p, Site::B, kPi / 2.0);
        CHECK(std::abs(r.a_par - p.alpha[3]) < 1e-15);
        CHECK(std::abs(r.a_perp + p.alpha[2]) < 1e-15);
        CHECK(std::abs(r.b_par - p.beta[3]) < 1e-15);
        CHECK(std::abs(r.b_perp + p.beta[2]) < 1e-15);
    }
}

TEST_CASE("rotation conserves the per-site photon number variable") {
    RandomStream rng(307, 0);
    for (int i = 0; i < 200; ++i) {
        const PhasePoint p = random_point(rng);
        const double theta = 4.0 * kPi * (rng.uniform() - 0.5);
        for (const Site site : {Site::A, Site::B}) {
            const int k = site_offset(site);
            const RotatedSite r = rotate_site(p, site, theta);
            const Complex before =
                photon_number(p.alpha[k], p.beta[k]) + photon_number(p.alpha[k + 1], p.beta[k + 1]);
            const Complex after =
                photon_number(r.a_par, r.b_par) + photon_number(r.a_perp, r.b_perp);
            CHECK(std::abs(after - before) < 1e-12);
        }
    }
}

TEST_CASE("spin variable on a classical point") {
    PhasePoint p{};
    p.alpha = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0)};
    for (int k = 0; k < 4; ++k) p.beta[k] = std::conj(p.alpha[k]);
    CHECK(spin_variable(p, Site::A, 0.0).real() == doctest::Approx(1.0));
    CHECK(spin_variable(p, Site::A, 0.0).imag() == doctest::Approx(0.0));
    CHECK(spin_variable(p, Site::A, kPi / 2.0).real() == doctest::Approx(-1.0));
    CHECK(spin_variable(p, Site::B, 0.0).real() == doctest::Approx(0.0));
}

TEST_CASE("sampled spin has zero mean and leaks outside the quantum bounds") {
    RandomStream rng(311, 0);
    const PairNumber n1(1);
    ComplexAccumulator spin;
    int outside = 0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        const PhasePoint p = sample_bell(rng, n1, SamplerKind::exact_decomposition);
        const Complex s = spin_variable(p, Site::A, 0.0);
        spin.add(s);
        if (std::abs(s.real()) > 1.0) ++outside;
    }
    const auto est = spin.estimate();
    CHECK(std::abs(est.mean.real()) <= 5.0 * est.stderr_real);
    CHECK(std::abs(est.mean.imag()) <= 5.0 * est.stderr_imag);
    // individual phase-space samples are not bounded by the spin spectrum
    CHECK(static_cast<double>(outside) / samples > 0.5);
}

TEST_CASE("angle convention spells out the four analyzer settings") {
    const AngleConvention conv;
    const auto ang = conv.at(kPi / 8.0);
    CHECK(ang.a == doctest::Approx(0.0));
    CHECK(ang.a_prime == doctest::Approx(kPi / 4.0));
    CHECK(ang.b == doctest::Approx(kPi / 8.0));
    CHECK(ang.b_prime == doctest::Approx(-kPi / 8.0));
}

TEST_CASE("theoretical curve agrees with the exact oracle assembly") {
    const TruncatedState one = build_bell_state(PairNumber(1));
    const AngleConvention conv;
    for (int j = 0; j < 25; ++j) {
        const double theta = 0.5 * kPi * j / 24.0;
        const auto ang = conv.at(theta);
        const double assembled = 0.5 * (exact_correlation(one, ang.a, ang.b) +
                                        exact_correlation(one, ang.a_prime, ang.b) +
                                        exact_correlation(one, ang.a, ang.b_prime) -
                                        exact_correlation(one, ang.a_prime, ang.b_prime)) -
                                 1.0;
        CHECK(std::abs(assembled - theoretical_delta(theta)) < 1e-10);
    }
    CHECK(theoretical_delta(kPi / 8.0) == doctest::Approx(std::sqrt(2.0) - 1.0));
    CHECK(theoretical_delta(0.0) == doctest::Approx(0.0));
    CHECK(theoretical_delta(kPi / 4.0) == doctest::Approx(-1.0));
}

TEST_CASE("sampled CHSH combination tracks the prediction") {
    const PairNumber n1(1);
    auto sampled_delta = [&](double theta, int samples, std::uint64_t stream) {
        RandomStream rng(313, stream);
        ComplexAccumulator acc;
        for (int i = 0; i < samples; ++i)
            acc.add(chsh_sample(sample_bell(rng, n1, SamplerKind::exact_decomposition), theta));
        return acc.estimate();
    };

    SUBCASE("no violation at zero angle") {
        const auto est = sampled_delta(0.0, 100000, 0);
        CHECK(std::abs(est.mean.real()) <= 5.0 * est.stderr_real);
    }
    SUBCASE("clear violation at pi/8") {
        const auto est = sampled_delta(kPi / 8.0, 200000, 1);
        CHECK(std::abs(est.mean.real() - (std::sqrt(2.0) - 1.0)) <= 5.0 * est.stderr_real);
        CHECK(est.mean.real() > 3.0 * est.stderr_real);
    }
    SUBCASE("strong anti-correlation at pi/4") {
        const auto est = sampled_delta(kPi / 4.0, 100000, 2);
        CHECK(std::abs(est.mean.real() + 1.0) <= 5.0 * est.stderr_real);
    }
}

TEST_CASE("sampled two-site correlation matches the oracle at unequal angles") {
    const PairNumber n1(1);
    const TruncatedState one = build_bell_state(n1);
    const double theta_a = 0.3, theta_b = 1.1;
    RandomStream rng(317, 0);
    ComplexAccumulator acc;
    for (int i = 0; i < 200000; ++i) {
        const PhasePoint p = sample_bell(rng, n1, SamplerKind::exact_decomposition);
        acc.add(spin_variable(p, Site::A, theta_a) * spin_variable(p, Site::B, theta_b));
    }
    const auto est = acc.estimate();
    CHECK(std::abs(est.mean.real() - exact_correlation(one, theta_a, theta_b)) <=
          5.0 * est.stderr_real);
    CHECK(std::abs(est.mean.imag()) <= 5.0 * est.stderr_imag);
}
