#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace bellpp {

namespace detail {

// Philox 4x32-10 block cipher (Salmon et al., SC 2011). Counter-based:
// the output block is a pure function of (counter, key), which is what
// makes per-sample substreams reproducible under any thread schedule.
inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round != 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
               static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
               static_cast<std::uint32_t>(p0)};
    }
    return ctr;
}

}  // namespace detail

/// Deterministic random substream. The value sequence depends only on
/// (seed, stream); samplers create one stream per sample index so that
/// serial and parallel runs produce bit-identical draws.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream) {}

    std::uint64_t seed_value() const {
        return static_cast<std::uint64_t>(key_[1]) << 32 | key_[0];
    }
    std::uint64_t stream_index() const { return stream_; }

    std::uint32_t next_u32() {
        if (buffered_ == 0) refill();
        return buffer_[--buffered_];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return hi << 32 | lo;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Exp(1) variate; never evaluates log(0).
    double exponential() { return -std::log1p(-uniform()); }

    /// Standard normal via Box-Muller; the second member of each pair is
    /// cached, so draws come in a deterministic order.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(2.0 * exponential());
        const double phi = 2.0 * kPi * uniform();
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

    /// Complex variate with density exp(-|z|^2)/pi, i.e. independent real
    /// and imaginary parts of variance 1/2. E|z|^2 = 1.
    std::complex<double> complex_normal() {
        const double r = std::sqrt(exponential());
        return std::polar(r, 2.0 * kPi * uniform());
    }

    /// Gamma(shape, 1) for small integer shape, as a sum of exponentials.
    double gamma_integer(int shape) {
        double sum = 0.0;
        for (int i = 0; i < shape; ++i) sum += exponential();
        return sum;
    }

private:
    static constexpr double kPi = 3.14159265358979323846;

    void refill() {
        const std::array<std::uint32_t, 4> ctr = {
            static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        const auto out = detail::philox4x32_10(ctr, key_);
        // stored reversed so next_u32 pops out[0] first
        buffer_ = {out[3], out[2], out[1], out[0]};
        buffered_ = 4;
        ++block_;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffered_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bellpp
