// Dinner domain types: morsels with exact per-player utilities, validation,
// permutation dinners and seeded random generation.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "player.hpp"
#include "rational.hpp"

namespace ethdinner {

using MorselId = std::uint32_t;

struct Morsel {
    MorselId id = 0;
    Rational a;  // Alice's utility
    Rational b;  // Bob's utility

    const Rational& utility(Player p) const { return p == Player::A ? a : b; }
    friend bool operator==(const Morsel&, const Morsel&) = default;
};

using RawMorsel = std::pair<Rational, Rational>;

/// An immutable set of morsels plus the player who moves last.
///
/// Morsels keep the ids they were validated with, so a subdinner produced
/// by without()/subset() still refers to morsels of the original dinner.
class Dinner {
public:
    Dinner() = default;

    /// Assigns ids 0..n-1 in input order. Throws DuplicateUtility on ties.
    static Dinner validate(std::span<const RawMorsel> raw, Player last_mover = Player::B);

    /// Same as validate() but keeps caller-provided ids (must be unique).
    static Dinner from_morsels(std::vector<Morsel> morsels, Player last_mover = Player::B);

    std::size_t size() const { return morsels_.size(); }
    bool empty() const { return morsels_.empty(); }
    const std::vector<Morsel>& morsels() const { return morsels_; }
    const Morsel& operator[](std::size_t pos) const { return morsels_[pos]; }
    Player last_mover() const { return last_mover_; }

    /// Player to move when `remaining` morsels are left under alternation.
    Player mover_with(std::size_t remaining) const {
        return remaining % 2 == 1 ? last_mover_ : other(last_mover_);
    }
    /// Player who moves first in this dinner. Undefined for an empty dinner.
    Player first_mover() const { return mover_with(size()); }
    /// Number of moves player p makes under alternation.
    std::size_t moves_of(Player p) const {
        std::size_t last_count = (size() + 1) / 2;
        return p == last_mover_ ? last_count : size() - last_count;
    }

    /// Position of the morsel with this id, or size() if absent.
    std::size_t position_of(MorselId id) const;
    bool contains(MorselId id) const { return position_of(id) != size(); }
    const Morsel& by_id(MorselId id) const;

    Rational total(Player p) const;

    Dinner without(MorselId id) const;
    /// Subdinner of the morsels at the positions set in `mask` (n <= 64).
    Dinner subset(std::uint64_t mask) const;
    Dinner with_last_mover(Player p) const;

    friend bool operator==(const Dinner&, const Dinner&) = default;

private:
    std::vector<Morsel> morsels_;
    Player last_mover_ = Player::B;
};

/// Permutation dinner {(i, pi_i)}: both utilities range over 1..n.
class PermutationDinner {
public:
    /// Throws ValidationError unless `pi` is a bijection on {1..n}.
    explicit PermutationDinner(std::vector<int> pi);

    const std::vector<int>& pi() const { return pi_; }
    std::size_t size() const { return pi_.size(); }
    Dinner to_dinner(Player last_mover = Player::B) const;

    friend bool operator==(const PermutationDinner&, const PermutationDinner&) = default;

private:
    std::vector<int> pi_;
};

/// Name of the generator behind random_permutation_dinner, recorded in
/// experiment output.
inline constexpr std::string_view kGeneratorName = "mt19937_64+fisher-yates(rejection)";

/// Uniform random permutation of 1..n, a pure function of (n, seed).
/// std::mt19937_64 seeded with `seed`; Fisher-Yates from the top index
/// down, each swap index drawn by rejection sampling (no modulo bias).
PermutationDinner random_permutation_dinner(std::size_t n, std::uint64_t seed);

/// Random dinner with distinct rational utilities p/q, |p| <= max(60, 5n)
/// and 1 <= q <= 12, a pure function of (n, seed, last_mover). Values may be
/// negative. Throws EmptyDinner for n = 0.
Dinner random_rational_dinner(std::size_t n, std::uint64_t seed, Player last_mover = Player::B);

/// Visits every permutation of 1..n in lexicographic order.
template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn);

}  // namespace ethdinner

#include <algorithm>
#include <numeric>

template <typename Fn>
void ethdinner::for_each_permutation(std::size_t n, Fn&& fn) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    do {
        fn(std::as_const(pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
}
