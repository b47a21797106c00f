#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tgalign/error.hpp"

namespace tgalign {

using Vec = std::vector<double>;

// Neumaier (Kahan-Babuska) compensated accumulator.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

// Sorts the terms before compensated summation. The result depends only on the
// multiset of values, never on their production order, which is what makes the
// exact interaction indices bit-identical under player relabeling.
inline double sorted_sum(std::vector<double>&& terms) noexcept {
    std::sort(terms.begin(), terms.end());
    return compensated_sum(terms);
}

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw ShapeError("dot: vector lengths differ (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

inline double norm(const Vec& a) {
    CompensatedSum acc;
    for (double x : a) acc.add(x * x);
    return std::sqrt(acc.value());
}

inline bool all_finite(const Vec& a) noexcept {
    for (double x : a) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

// Dense row-major matrix. Desk-scale sizes only; no view machinery needed.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }

    // y = M x
    Vec apply(const Vec& x) const {
        if (x.size() != cols) {
            throw ShapeError("matrix apply: expected input of length " + std::to_string(cols) +
                             ", got " + std::to_string(x.size()));
        }
        Vec y(rows, 0.0);
        for (std::size_t r = 0; r < rows; ++r) {
            CompensatedSum acc;
            for (std::size_t c = 0; c < cols; ++c) acc.add(data[r * cols + c] * x[c]);
            y[r] = acc.value();
        }
        return y;
    }

    bool finite() const noexcept {
        for (double x : data) {
            if (!std::isfinite(x)) return false;
        }
        return true;
    }
};

// splitmix64; used to derive independent sub-seeds so that parallel work items
// get stable per-item streams regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept {
    return splitmix64(splitmix64(base ^ (a * 0x9e3779b97f4a7c15ULL)) ^ (b * 0xc2b2ae3d27d4eb4fULL));
}

} // namespace tgalign
