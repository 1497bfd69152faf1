#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

namespace bellpp {

/// Single-pass mean/variance accumulator (Welford update) with an exact
/// pairwise merge rule, so partitioned accumulation reproduces the
/// single-pass result up to rounding.
class RunningMoments {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    void merge(const RunningMoments& other) {
        if (other.count_ == 0) return;
        if (count_ == 0) {
            *this = other;
            return;
        }
        const double delta = other.mean_ - mean_;
        const double na = static_cast<double>(count_);
        const double nb = static_cast<double>(other.count_);
        const double n = na + nb;
        m2_ += other.m2_ + delta * delta * (na * nb / n);
        mean_ += delta * (nb / n);
        count_ += other.count_;
    }

    std::size_t count() const { return count_; }
    double mean() const { return mean_; }

    /// Unbiased sample variance; NaN when count < 2.
    double sample_variance() const {
        if (count_ < 2) return std::numeric_limits<double>::quiet_NaN();
        return m2_ / static_cast<double>(count_ - 1);
    }

    /// Standard error of the mean; NaN when count < 2.
    double standard_error() const {
        if (count_ < 2) return std::numeric_limits<double>::quiet_NaN();
        return std::sqrt(sample_variance() / static_cast<double>(count_));
    }

private:
    std::size_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Mean, per-part standard errors and count of a complex-valued estimator.
struct CorrelationEstimate {
    std::size_t count = 0;
    std::complex<double> mean{0.0, 0.0};
    double stderr_real = std::numeric_limits<double>::quiet_NaN();
    double stderr_imag = std::numeric_limits<double>::quiet_NaN();
};

/// Streams complex values into independent real/imaginary moment
/// accumulators.
class ComplexAccumulator {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    void merge(const ComplexAccumulator& other) {
        re_.merge(other.re_);
        im_.merge(other.im_);
    }

    std::size_t count() const { return re_.count(); }

    CorrelationEstimate estimate() const {
        CorrelationEstimate e;
        e.count = re_.count();
        e.mean = {re_.mean(), im_.mean()};
        e.stderr_real = re_.standard_error();
        e.stderr_imag = im_.standard_error();
        return e;
    }

    const RunningMoments& real_moments() const { return re_; }
    const RunningMoments& imag_moments() const { return im_; }

private:
    RunningMoments re_;
    RunningMoments im_;
};

}  // namespace bellpp
