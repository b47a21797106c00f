#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "tgalign/error.hpp"

namespace tgalign {

// Largest player count for which exhaustive coalition enumeration is allowed.
// 2^24 memoized payoffs (~128 MB) is the desk-scale ceiling; beyond it the
// sampled estimator is the only option.
inline constexpr std::size_t kExactPlayerCap = 24;

// Hard representation limit: coalitions live in a 64-bit mask.
inline constexpr std::size_t kMaxPlayers = 64;

// A subset of the player universe, encoded as a bitmask. Bit k set means
// player k is in the coalition. Pure value type.
struct Coalition {
    std::uint64_t bits = 0;

    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint64_t mask) : bits(mask) {}

    static constexpr Coalition empty() { return Coalition{}; }

    static Coalition of(std::initializer_list<unsigned> players) {
        Coalition c;
        for (unsigned p : players) c = c.with(p);
        return c;
    }

    constexpr bool contains(unsigned player) const { return (bits >> player) & 1u; }
    constexpr Coalition with(unsigned player) const { return Coalition{bits | (std::uint64_t{1} << player)}; }
    constexpr Coalition without(unsigned player) const { return Coalition{bits & ~(std::uint64_t{1} << player)}; }
    constexpr Coalition unite(Coalition other) const { return Coalition{bits | other.bits}; }
    constexpr Coalition intersect(Coalition other) const { return Coalition{bits & other.bits}; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits)); }
    constexpr bool is_empty() const { return bits == 0; }
    constexpr bool is_subset_of(Coalition other) const { return (bits & ~other.bits) == 0; }

    constexpr bool operator==(const Coalition&) const = default;

    std::vector<unsigned> members() const {
        std::vector<unsigned> out;
        out.reserve(size());
        for (std::uint64_t m = bits; m != 0; m &= m - 1) {
            out.push_back(static_cast<unsigned>(__builtin_ctzll(m)));
        }
        return out;
    }
};

constexpr Coalition full_coalition(std::size_t n_players) {
    return Coalition{n_players >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_players) - 1};
}

enum class PlayerRole : std::uint8_t { Visual, Question };

// Visual players occupy indices [0, n_visual), question players
// [n_visual, n_visual + n_question). The answer embedding is fixed context of
// the revenue function, not an enumerable player.
struct PlayerUniverse {
    std::size_t n_visual = 0;
    std::size_t n_question = 0;

    PlayerUniverse() = default;
    PlayerUniverse(std::size_t visual, std::size_t question) : n_visual(visual), n_question(question) {
        if (n_players() > kMaxPlayers) {
            throw CapacityError("player universe holds at most " + std::to_string(kMaxPlayers) +
                                " players, got " + std::to_string(n_players()));
        }
    }

    std::size_t n_players() const { return n_visual + n_question; }

    PlayerRole role(unsigned player) const {
        if (player >= n_players()) {
            throw ArgumentError("player index " + std::to_string(player) + " outside universe of " +
                                std::to_string(n_players()));
        }
        return player < n_visual ? PlayerRole::Visual : PlayerRole::Question;
    }

    unsigned visual_player(std::size_t a) const { return static_cast<unsigned>(a); }
    unsigned question_player(std::size_t b) const { return static_cast<unsigned>(n_visual + b); }

    Coalition all() const { return full_coalition(n_players()); }
};

// Lazy range over every subset of `universe \ excluded`, in ascending bitmask
// order. Uses the standard submask walk s -> (s - free) & free, which visits
// each of the 2^|free| submasks exactly once and in increasing value.
class SubsetRange {
public:
    SubsetRange(Coalition excluded, std::size_t n_players)
        : free_(full_coalition(n_players).bits & ~excluded.bits) {
        if (n_players > kExactPlayerCap) {
            throw CapacityError("exhaustive subset enumeration limited to " +
                                std::to_string(kExactPlayerCap) + " players, got " +
                                std::to_string(n_players));
        }
        if ((excluded.bits & ~full_coalition(n_players).bits) != 0) {
            throw ArgumentError("excluded coalition has members outside the universe of " +
                                std::to_string(n_players) + " players");
        }
    }

    class iterator {
    public:
        using value_type = Coalition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(std::uint64_t free, bool done) : free_(free), current_(0), done_(done) {}

        Coalition operator*() const { return Coalition{current_}; }

        iterator& operator++() {
            current_ = (current_ - free_) & free_;
            if (current_ == 0) done_ = true;
            return *this;
        }

        iterator operator++(int) {
            iterator tmp = *this;
            ++(*this);
            return tmp;
        }

        bool operator==(const iterator& other) const {
            return done_ == other.done_ && (done_ || current_ == other.current_);
        }

    private:
        std::uint64_t free_ = 0;
        std::uint64_t current_ = 0;
        bool done_ = true;
    };

    iterator begin() const { return iterator(free_, false); }
    iterator end() const { return iterator(free_, true); }

    std::size_t count() const { return std::size_t{1} << __builtin_popcountll(free_); }
    Coalition free_players() const { return Coalition{free_}; }

private:
    std::uint64_t free_;
};

// Every subset of the n-player universe with `excluded` removed, 2^(n-|excluded|)
// coalitions in ascending bitmask order.
inline SubsetRange enumerate_subsets(Coalition excluded, std::size_t n_players) {
    return SubsetRange(excluded, n_players);
}

} // namespace tgalign
