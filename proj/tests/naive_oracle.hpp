#pragma once

// Test-only reference implementations, kept deliberately naive and independent
// of the library's evaluation path: coalitions are member lists, subsets come
// from recursive inclusion/exclusion, weights from plain factorial arithmetic.
// No memoization, no bitmask enumeration tricks.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using PayoffFn = std::function<double(const std::vector<unsigned>&)>;

inline void collect_subsets(const std::vector<unsigned>& pool, std::size_t pos,
                            std::vector<unsigned>& current, std::vector<std::vector<unsigned>>& out) {
    if (pos == pool.size()) {
        out.push_back(current);
        return;
    }
    collect_subsets(pool, pos + 1, current, out);
    current.push_back(pool[pos]);
    collect_subsets(pool, pos + 1, current, out);
    current.pop_back();
}

inline std::vector<std::vector<unsigned>> all_subsets(const std::vector<unsigned>& pool) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    collect_subsets(pool, 0, current, out);
    return out;
}

inline double factorial(std::size_t k) {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

inline std::vector<unsigned> with_added(std::vector<unsigned> base, std::initializer_list<unsigned> extra) {
    for (unsigned p : extra) base.push_back(p);
    return base;
}

inline double bracket(const PayoffFn& payoff, const std::vector<unsigned>& c, unsigned i, unsigned j) {
    return payoff(with_added(c, {i, j})) + payoff(c) - payoff(with_added(c, {i})) - payoff(with_added(c, {j}));
}

inline std::vector<unsigned> others(std::size_t n, unsigned i, unsigned j) {
    std::vector<unsigned> pool;
    for (unsigned p = 0; p < n; ++p) {
        if (p != i && p != j) pool.push_back(p);
    }
    return pool;
}

inline double banzhaf_pair(const PayoffFn& payoff, std::size_t n, unsigned i, unsigned j) {
    double total = 0.0;
    for (const auto& c : all_subsets(others(n, i, j))) {
        total += bracket(payoff, c, i, j);
    }
    double weight = 1.0;
    for (std::size_t k = 0; k + 2 < n; ++k) weight /= 2.0;
    return total * weight;
}

inline double shapley_pair(const PayoffFn& payoff, std::size_t n, unsigned i, unsigned j) {
    double total = 0.0;
    for (const auto& c : all_subsets(others(n, i, j))) {
        const double w = factorial(c.size()) * factorial(n - c.size() - 2) / factorial(n - 1);
        total += w * bracket(payoff, c, i, j);
    }
    return total;
}

} // namespace oracle
