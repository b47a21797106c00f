#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tgalign/coalition.hpp"
#include "tgalign/game.hpp"

namespace testutil {

// Random payoff table over all 2^n coalitions, entries U[lo, hi].
inline std::vector<double> random_payoff_table(std::size_t n_players, std::uint64_t seed,
                                               double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> table(std::size_t{1} << n_players);
    for (double& v : table) v = dist(rng);
    return table;
}

inline tgalign::CharacteristicGame table_game(std::size_t n_players, std::vector<double> table) {
    return tgalign::CharacteristicGame(n_players, [table = std::move(table)](tgalign::Coalition c) {
        return table[c.bits];
    });
}

// Unanimity game u_{i,j}: payoff 1 iff the coalition contains both i and j.
inline tgalign::CharacteristicGame unanimity_game(std::size_t n_players, unsigned i, unsigned j) {
    return tgalign::CharacteristicGame(n_players, [i, j](tgalign::Coalition c) {
        return c.contains(i) && c.contains(j) ? 1.0 : 0.0;
    });
}

inline tgalign::CharacteristicGame constant_game(std::size_t n_players, double value) {
    return tgalign::CharacteristicGame(n_players, [value](tgalign::Coalition) { return value; });
}

inline tgalign::CharacteristicGame additive_game(std::size_t n_players, std::vector<double> weights) {
    return tgalign::CharacteristicGame(n_players, [weights = std::move(weights)](tgalign::Coalition c) {
        double total = 0.0;
        for (unsigned p : c.members()) total += weights[p];
        return total;
    });
}

// Payoff ignores player `dummy` entirely.
inline tgalign::CharacteristicGame dummy_player_game(std::size_t n_players, unsigned dummy,
                                                     std::vector<double> table) {
    return tgalign::CharacteristicGame(n_players, [dummy, table = std::move(table)](tgalign::Coalition c) {
        return table[c.without(dummy).bits];
    });
}

} // namespace testutil
