#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bellpp {

namespace detail {

// 0 below range, 1 inside, 2 at-or-above (non-finite values land in 2).
inline int classify(double x, double lo, double hi) {
    if (x >= lo && x < hi) return 1;
    if (x < lo) return 0;
    return 2;
}

}  // namespace detail

/// Fixed-range 1D histogram with explicit underflow/overflow bins, so the
/// total count is preserved for any input.
class Histogram1D {
public:
    Histogram1D(int bins, double lo, double hi) : bins_(bins), lo_(lo), hi_(hi) {
        if (bins < 1) throw std::invalid_argument("Histogram1D: bins must be >= 1");
        if (!(lo < hi)) throw std::invalid_argument("Histogram1D: need lo < hi");
        counts_.assign(static_cast<std::size_t>(bins), 0);
    }

    void add(double x) {
        switch (detail::classify(x, lo_, hi_)) {
            case 0: ++underflow_; break;
            case 2: ++overflow_; break;
            default: ++counts_[bin_of(x)]; break;
        }
    }

    void merge(const Histogram1D& other) {
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        underflow_ += other.underflow_;
        overflow_ += other.overflow_;
    }

    int bins() const { return bins_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    std::uint64_t underflow() const { return underflow_; }
    std::uint64_t overflow() const { return overflow_; }

    std::uint64_t total() const {
        std::uint64_t t = underflow_ + overflow_;
        for (auto c : counts_) t += c;
        return t;
    }

    std::vector<double> bin_edges() const {
        std::vector<double> e(static_cast<std::size_t>(bins_) + 1);
        for (int i = 0; i <= bins_; ++i) e[static_cast<std::size_t>(i)] = edge(i);
        return e;
    }

private:
    std::size_t bin_of(double x) const {
        auto i = static_cast<std::size_t>((x - lo_) / (hi_ - lo_) * bins_);
        return i >= static_cast<std::size_t>(bins_) ? static_cast<std::size_t>(bins_) - 1 : i;
    }
    double edge(int i) const { return lo_ + (hi_ - lo_) * i / bins_; }

    int bins_;
    double lo_, hi_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t underflow_ = 0;
    std::uint64_t overflow_ = 0;
};

/// 2D histogram over a rectangle. Out-of-range pairs are tallied per
/// region of the 3x3 partition of the plane (center region = the bins),
/// keeping conservation exact.
class Histogram2D {
public:
    Histogram2D(int bins_x, double lo_x, double hi_x, int bins_y, double lo_y, double hi_y)
        : x_(bins_x, lo_x, hi_x), y_(bins_y, lo_y, hi_y) {
        counts_.assign(static_cast<std::size_t>(bins_x) * static_cast<std::size_t>(bins_y), 0);
    }

    void add(double x, double y) {
        const int cx = detail::classify(x, x_.lo(), x_.hi());
        const int cy = detail::classify(y, y_.lo(), y_.hi());
        if (cx == 1 && cy == 1) {
            const auto ix = index_1d(x_, x);
            const auto iy = index_1d(y_, y);
            ++counts_[ix * static_cast<std::size_t>(y_.bins()) + iy];
        } else {
            ++outside_[static_cast<std::size_t>(cx * 3 + cy)];
        }
    }

    void merge(const Histogram2D& other) {
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        for (std::size_t i = 0; i < 9; ++i) outside_[i] += other.outside_[i];
    }

    int bins_x() const { return x_.bins(); }
    int bins_y() const { return y_.bins(); }
    /// Row-major: counts()[ix * bins_y() + iy].
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    const std::array<std::uint64_t, 9>& outside_regions() const { return outside_; }

    std::uint64_t outside_total() const {
        std::uint64_t t = 0;
        for (auto c : outside_) t += c;
        return t;
    }

    std::uint64_t total() const {
        std::uint64_t t = outside_total();
        for (auto c : counts_) t += c;
        return t;
    }

    std::vector<double> bin_edges_x() const { return x_.bin_edges(); }
    std::vector<double> bin_edges_y() const { return y_.bin_edges(); }

private:
    static std::size_t index_1d(const Histogram1D& axis, double v) {
        auto i = static_cast<std::size_t>((v - axis.lo()) / (axis.hi() - axis.lo()) * axis.bins());
        return i >= static_cast<std::size_t>(axis.bins()) ? static_cast<std::size_t>(axis.bins()) - 1
                                                          : i;
    }

    Histogram1D x_;  // used for axis metadata only
    Histogram1D y_;
    std::vector<std::uint64_t> counts_;
    std::array<std::uint64_t, 9> outside_{};
};

}  // namespace bellpp
