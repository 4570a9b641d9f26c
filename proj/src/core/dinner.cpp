#include "dinner.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace ethdinner {
namespace {

void check_distinct(const std::vector<Morsel>& morsels, Player p) {
    std::vector<Rational> values;
    values.reserve(morsels.size());
    for (const auto& m : morsels) values.push_back(m.utility(p));
    std::sort(values.begin(), values.end());
    auto dup = std::adjacent_find(values.begin(), values.end());
    if (dup != values.end()) throw DuplicateUtility(p, *dup);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    // 2^64 mod bound; draws below it are rejected so x % bound is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x < threshold);
    return x % bound;
}

}  // namespace

Dinner Dinner::validate(std::span<const RawMorsel> raw, Player last_mover) {
    std::vector<Morsel> morsels;
    morsels.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        morsels.push_back(Morsel{static_cast<MorselId>(i), raw[i].first, raw[i].second});
    return from_morsels(std::move(morsels), last_mover);
}

Dinner Dinner::from_morsels(std::vector<Morsel> morsels, Player last_mover) {
    check_distinct(morsels, Player::A);
    check_distinct(morsels, Player::B);
    std::unordered_set<MorselId> ids;
    for (const auto& m : morsels)
        if (!ids.insert(m.id).second) throw ValidationError("duplicate morsel id " + std::to_string(m.id));
    Dinner d;
    d.morsels_ = std::move(morsels);
    d.last_mover_ = last_mover;
    return d;
}

std::size_t Dinner::position_of(MorselId id) const {
    // Validated dinners hold ids in increasing order, but subdinners built
    // by from_morsels need not.
    for (std::size_t i = 0; i < morsels_.size(); ++i)
        if (morsels_[i].id == id) return i;
    return morsels_.size();
}

const Morsel& Dinner::by_id(MorselId id) const {
    auto pos = position_of(id);
    if (pos == size()) throw ValidationError("no morsel with id " + std::to_string(id));
    return morsels_[pos];
}

Rational Dinner::total(Player p) const {
    Rational sum;
    for (const auto& m : morsels_) sum += m.utility(p);
    return sum;
}

Dinner Dinner::without(MorselId id) const {
    auto pos = position_of(id);
    if (pos == size()) throw ValidationError("no morsel with id " + std::to_string(id));
    Dinner d = *this;
    d.morsels_.erase(d.morsels_.begin() + static_cast<std::ptrdiff_t>(pos));
    return d;
}

Dinner Dinner::subset(std::uint64_t mask) const {
    Dinner d;
    d.last_mover_ = last_mover_;
    for (std::size_t i = 0; i < morsels_.size() && i < 64; ++i)
        if (mask >> i & 1U) d.morsels_.push_back(morsels_[i]);
    return d;
}

Dinner Dinner::with_last_mover(Player p) const {
    Dinner d = *this;
    d.last_mover_ = p;
    return d;
}

PermutationDinner::PermutationDinner(std::vector<int> pi) : pi_(std::move(pi)) {
    std::vector<bool> seen(pi_.size() + 1, false);
    for (int v : pi_) {
        if (v < 1 || static_cast<std::size_t>(v) > pi_.size() || seen[static_cast<std::size_t>(v)])
            throw ValidationError("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Dinner PermutationDinner::to_dinner(Player last_mover) const {
    std::vector<Morsel> morsels;
    morsels.reserve(pi_.size());
    for (std::size_t i = 0; i < pi_.size(); ++i)
        morsels.push_back(Morsel{static_cast<MorselId>(i), Rational(static_cast<std::int64_t>(i) + 1), Rational(pi_[i])});
    return Dinner::from_morsels(std::move(morsels), last_mover);
}

PermutationDinner random_permutation_dinner(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("random permutation dinner needs n >= 1");
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(bounded(rng, i + 1));
        std::swap(pi[i], pi[j]);
    }
    return PermutationDinner(std::move(pi));
}

Dinner random_rational_dinner(std::size_t n, std::uint64_t seed, Player last_mover) {
    if (n == 0) throw EmptyDinner("random dinner needs at least one morsel");
    std::mt19937_64 rng(seed);
    // The numerator range widens with n so that n distinct values always exist.
    const auto half = static_cast<std::int64_t>(std::max<std::size_t>(60, 5 * n));
    auto draw = [&] {
        const auto p = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(2 * half + 1))) - half;
        const auto q = static_cast<std::int64_t>(bounded(rng, 12)) + 1;
        return Rational(p, q);
    };
    auto distinct = [&](std::vector<Rational>& out) {
        while (out.size() < n) {
            Rational r = draw();
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    };
    std::vector<Rational> as, bs;
    distinct(as);
    distinct(bs);
    std::vector<RawMorsel> raw;
    for (std::size_t i = 0; i < n; ++i) raw.emplace_back(as[i], bs[i]);
    return Dinner::validate(raw, last_mover);
}

}  // namespace ethdinner
