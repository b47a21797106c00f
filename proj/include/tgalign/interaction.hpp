#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tgalign/coalition.hpp"
#include "tgalign/game.hpp"
#include "tgalign/numeric.hpp"
#include "tgalign/parallel.hpp"

namespace tgalign {

namespace detail {

inline std::pair<unsigned, unsigned> canonical_pair(const CharacteristicGame& game, unsigned i, unsigned j) {
    if (i == j) {
        throw ArgumentError("interaction index needs two distinct players, got i = j = " + std::to_string(i));
    }
    const std::size_t n = game.n_players();
    if (i >= n || j >= n) {
        throw ArgumentError("player pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside the " + std::to_string(n) + "-player universe");
    }
    // Fixed (lo, hi) ordering makes index(i, j) and index(j, i) run identical
    // code, so pair symmetry holds bitwise.
    return i < j ? std::pair{i, j} : std::pair{j, i};
}

// (R(C u {i,j}) + R(C)) - (R(C u {i}) + R(C u {j})). The grouping is fixed;
// IEEE addition is commutative, so the value is stable under swapping i and j.
inline double pair_bracket(const CharacteristicGame& game, Coalition c, unsigned lo, unsigned hi) {
    const double both = game.evaluate(c.with(lo).with(hi));
    const double base = game.evaluate(c);
    const double only_lo = game.evaluate(c.with(lo));
    const double only_hi = game.evaluate(c.with(hi));
    return (both + base) - (only_lo + only_hi);
}

// Shapley pair weights w[s] = s! (n-s-2)! / (n-1)! for coalition size s,
// tabulated in long double. Factorials up to 23! exceed 2^64 but the relative
// error at long-double precision (~1e-19) is far below the 1e-9 contract.
inline std::vector<double> shapley_pair_weights(std::size_t n_players) {
    std::vector<long double> fact(n_players + 1, 1.0L);
    for (std::size_t k = 1; k <= n_players; ++k) fact[k] = fact[k - 1] * static_cast<long double>(k);
    std::vector<double> w(n_players - 1, 0.0);
    for (std::size_t s = 0; s + 2 <= n_players; ++s) {
        w[s] = static_cast<double>(fact[s] * fact[n_players - s - 2] / fact[n_players - 1]);
    }
    return w;
}

} // namespace detail

// Exact Banzhaf interaction index for the pair {i, j} (Eq. 2 weights):
//   sum over C subset of P\{i,j} of 2^-(n-2) * bracket(C).
// Terms are sorted before summation, so the result depends only on the
// multiset of payoffs; relabeling players yields bit-identical values.
inline double banzhaf_interaction_exact(const CharacteristicGame& game, unsigned i, unsigned j) {
    const auto [lo, hi] = detail::canonical_pair(game, i, j);
    const std::size_t n = game.n_players();
    const SubsetRange subsets = enumerate_subsets(Coalition::of({lo, hi}), n);
    std::vector<double> terms;
    terms.reserve(subsets.count());
    for (Coalition c : subsets) {
        terms.push_back(detail::pair_bracket(game, c, lo, hi));
    }
    const double weight = std::ldexp(1.0, -static_cast<int>(n - 2)); // 1 / 2^(n-2)
    return sorted_sum(std::move(terms)) * weight;
}

// Exact Shapley interaction index: same brackets, positional weights
// |C|! (n-|C|-2)! / (n-1)!.
inline double shapley_interaction_exact(const CharacteristicGame& game, unsigned i, unsigned j) {
    const auto [lo, hi] = detail::canonical_pair(game, i, j);
    const std::size_t n = game.n_players();
    const std::vector<double> weights = detail::shapley_pair_weights(n);
    const SubsetRange subsets = enumerate_subsets(Coalition::of({lo, hi}), n);
    std::vector<double> terms;
    terms.reserve(subsets.count());
    for (Coalition c : subsets) {
        terms.push_back(weights[c.size()] * detail::pair_bracket(game, c, lo, hi));
    }
    return sorted_sum(std::move(terms));
}

// Monte-Carlo estimate plus its empirical standard error.
struct SampledEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t num_samples = 0;
};

namespace detail {

// Draws coalitions with each free player included independently with
// probability 1/2 (the Eq. 2 sampling weight p(C) = 2^-(n-2)) and averages the
// brackets. Welford accumulation gives the mean and the variance in one pass.
inline SampledEstimate sample_interaction(const CharacteristicGame& game, unsigned i, unsigned j,
                                          std::uint64_t num_samples, std::uint64_t seed, bool shapley_weighted) {
    const auto [lo, hi] = canonical_pair(game, i, j);
    if (num_samples == 0) {
        throw ArgumentError("sampled interaction needs num_samples >= 1");
    }
    const std::size_t n = game.n_players();
    const std::vector<unsigned> free_players = full_coalition(n).without(lo).without(hi).members();

    std::mt19937_64 rng(seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t s = 1; s <= num_samples; ++s) {
        Coalition c;
        double draw;
        if (!shapley_weighted) {
            // One 64-bit word supplies all n-2 <= 62 membership bits.
            std::uint64_t word = rng();
            for (unsigned p : free_players) {
                if (word & 1u) c = c.with(p);
                word >>= 1;
            }
            draw = pair_bracket(game, c, lo, hi);
        } else {
            // Shapley weights factor as uniform-size then uniform-subset:
            // w(C) = 1/(n-1) * 1/binom(n-2, |C|).
            const std::size_t size = std::uniform_int_distribution<std::size_t>(0, free_players.size())(rng);
            std::vector<unsigned> pool = free_players;
            for (std::size_t k = 0; k < size; ++k) {
                const std::size_t pick = std::uniform_int_distribution<std::size_t>(k, pool.size() - 1)(rng);
                std::swap(pool[k], pool[pick]);
                c = c.with(pool[k]);
            }
            draw = pair_bracket(game, c, lo, hi);
        }
        const double delta = draw - mean;
        mean += delta / static_cast<double>(s);
        m2 += delta * (draw - mean);
    }
    SampledEstimate out;
    out.value = mean;
    out.num_samples = num_samples;
    if (num_samples > 1) {
        const double variance = m2 / static_cast<double>(num_samples - 1);
        out.std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(num_samples));
    }
    return out;
}

} // namespace detail

inline SampledEstimate banzhaf_interaction_sampled_detailed(const CharacteristicGame& game, unsigned i, unsigned j,
                                                            std::uint64_t num_samples, std::uint64_t seed) {
    return detail::sample_interaction(game, i, j, num_samples, seed, /*shapley_weighted=*/false);
}

// Unbiased estimator of banzhaf_interaction_exact. Same seed and inputs give
// the same output within one build of the library.
inline double banzhaf_interaction_sampled(const CharacteristicGame& game, unsigned i, unsigned j,
                                          std::uint64_t num_samples, std::uint64_t seed) {
    return banzhaf_interaction_sampled_detailed(game, i, j, num_samples, seed).value;
}

inline SampledEstimate shapley_interaction_sampled_detailed(const CharacteristicGame& game, unsigned i, unsigned j,
                                                            std::uint64_t num_samples, std::uint64_t seed) {
    return detail::sample_interaction(game, i, j, num_samples, seed, /*shapley_weighted=*/true);
}

inline double shapley_interaction_sampled(const CharacteristicGame& game, unsigned i, unsigned j,
                                          std::uint64_t num_samples, std::uint64_t seed) {
    return shapley_interaction_sampled_detailed(game, i, j, num_samples, seed).value;
}

// Bipartite interaction matrix: entry (a, b) is the chosen index for
// (visual player a, question player b). Entries are independent, so they are
// computed in parallel; sampled entries use per-pair seeds derived from the
// base seed and the canonical player pair, making results independent of
// scheduling and thread count.
inline InteractionMatrix interaction_matrix(const CharacteristicGame& game, const PlayerUniverse& universe,
                                            InteractionMethod method, const EstimatorSpec& estimator) {
    if (universe.n_visual < 1 || universe.n_question < 1) {
        throw ArgumentError("interaction matrix needs at least one visual and one question player, got " +
                            std::to_string(universe.n_visual) + " x " + std::to_string(universe.n_question));
    }
    if (universe.n_players() != game.n_players()) {
        throw ShapeError("universe has " + std::to_string(universe.n_players()) +
                         " players but the game has " + std::to_string(game.n_players()));
    }
    if (estimator.kind == EstimatorKind::Exact && universe.n_players() > kExactPlayerCap) {
        throw CapacityError("exact interaction limited to " + std::to_string(kExactPlayerCap) +
                            " players, got " + std::to_string(universe.n_players()) +
                            "; use the sampled estimator");
    }

    InteractionMatrix out;
    out.method = method;
    out.estimator = estimator;
    out.values = Matrix(universe.n_visual, universe.n_question);

    parallel_for(universe.n_visual * universe.n_question, [&](std::size_t idx) {
        const std::size_t a = idx / universe.n_question;
        const std::size_t b = idx % universe.n_question;
        const unsigned i = universe.visual_player(a);
        const unsigned j = universe.question_player(b);
        double value;
        if (estimator.kind == EstimatorKind::Exact) {
            value = method == InteractionMethod::Banzhaf ? banzhaf_interaction_exact(game, i, j)
                                                         : shapley_interaction_exact(game, i, j);
        } else {
            const std::uint64_t pair_seed = derive_seed(estimator.seed, std::min(i, j), std::max(i, j));
            value = method == InteractionMethod::Banzhaf
                        ? banzhaf_interaction_sampled(game, i, j, estimator.num_samples, pair_seed)
                        : shapley_interaction_sampled(game, i, j, estimator.num_samples, pair_seed);
        }
        out.values.at(a, b) = value;
    });
    return out;
}

} // namespace tgalign
