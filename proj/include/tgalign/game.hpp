#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "tgalign/coalition.hpp"
#include "tgalign/error.hpp"
#include "tgalign/numeric.hpp"

namespace tgalign {

// Memoized characteristic function R: Coalition -> payoff.
//
// The evaluator must be a pure function of the coalition bits; payoffs must be
// finite (checked on every evaluation). For n <= kExactPlayerCap the memo is a
// dense table shared by all pairwise-interaction queries, so the full bipartite
// matrix costs at most 2^n distinct evaluations. Concurrent lookups are safe:
// purity means racing inserts store identical bit patterns, done with relaxed
// atomics on the raw payload. Beyond the cap (sampled estimation only) calls
// go straight to the evaluator.
class CharacteristicGame {
public:
    using Evaluator = std::function<double(Coalition)>;

    CharacteristicGame(std::size_t n_players, Evaluator evaluator)
        : n_players_(n_players), evaluator_(std::move(evaluator)) {
        if (n_players_ < 1 || n_players_ > kMaxPlayers) {
            throw ArgumentError("player count must be in [1, " + std::to_string(kMaxPlayers) +
                                "], got " + std::to_string(n_players_));
        }
        if (n_players_ <= kExactPlayerCap) {
            const std::size_t slots = std::size_t{1} << n_players_;
            memo_ = std::make_unique<std::atomic<std::uint64_t>[]>(slots);
            for (std::size_t i = 0; i < slots; ++i) {
                memo_[i].store(kUnset, std::memory_order_relaxed);
            }
        }
    }

    std::size_t n_players() const { return n_players_; }

    double evaluate(Coalition c) const {
        if ((c.bits & ~full_coalition(n_players_).bits) != 0) {
            throw ArgumentError("coalition mask has players outside the " +
                                std::to_string(n_players_) + "-player universe");
        }
        if (!memo_) return checked(c);
        std::atomic<std::uint64_t>& slot = memo_[c.bits];
        const std::uint64_t cached = slot.load(std::memory_order_relaxed);
        if (cached != kUnset) return std::bit_cast<double>(cached);
        const double value = checked(c);
        slot.store(std::bit_cast<std::uint64_t>(value), std::memory_order_relaxed);
        return value;
    }

    double operator()(Coalition c) const { return evaluate(c); }

private:
    // Sentinel: a quiet-NaN payload no finite payoff can collide with.
    static constexpr std::uint64_t kUnset = 0x7ff8dead0000beefULL;

    double checked(Coalition c) const {
        const double value = evaluator_(c);
        if (!std::isfinite(value)) {
            throw DegenerateInputError("characteristic function returned non-finite payoff for coalition mask " +
                                       std::to_string(c.bits));
        }
        return value;
    }

    std::size_t n_players_;
    Evaluator evaluator_;
    std::unique_ptr<std::atomic<std::uint64_t>[]> memo_;
};

enum class InteractionMethod : std::uint8_t { Banzhaf, Shapley };

enum class EstimatorKind : std::uint8_t { Exact, Sampled };

struct EstimatorSpec {
    EstimatorKind kind = EstimatorKind::Exact;
    std::uint64_t num_samples = 0;
    std::uint64_t seed = 0;

    static EstimatorSpec exact() { return {}; }
    static EstimatorSpec sampled(std::uint64_t samples, std::uint64_t seed) {
        return {EstimatorKind::Sampled, samples, seed};
    }
};

inline const char* to_string(InteractionMethod m) {
    return m == InteractionMethod::Banzhaf ? "banzhaf" : "shapley";
}

inline const char* to_string(EstimatorKind k) {
    return k == EstimatorKind::Exact ? "exact" : "sampled";
}

// Bipartite visual x question interaction values, the teacher guidance signal.
struct InteractionMatrix {
    Matrix values; // rows = n_visual, cols = n_question
    InteractionMethod method = InteractionMethod::Banzhaf;
    EstimatorSpec estimator;

    std::size_t rows() const { return values.rows; }
    std::size_t cols() const { return values.cols; }
};

} // namespace tgalign
