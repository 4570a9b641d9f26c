// Exact ground truth by exhaustive search: best responses by backward
// induction, subgame-perfection checks, outcome enumeration, Pareto and
// envy analysis. Every routine is exact or refuses with GuardExceeded.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dinner.hpp"
#include "play.hpp"

namespace ethdinner {

struct OracleLimits {
    std::size_t max_dp_n = 24;                // subset dynamic programming
    std::uint64_t max_outcomes = 10'000'000;  // C(n, k) for outcome enumeration
    std::uint64_t max_paths = 1'000'000'000;  // move sequences when pinned against crossout
};

/// (Alice's score, Bob's score).
struct ScorePoint {
    Rational a;
    Rational b;

    const Rational& of(Player p) const { return p == Player::A ? a : b; }
    friend bool operator==(const ScorePoint&, const ScorePoint&) = default;
    friend std::strong_ordering operator<=>(const ScorePoint& x, const ScorePoint& y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

/// A partition of the dinner: Alice's plate by id, Bob gets the rest.
struct Outcome {
    std::vector<MorselId> alice;  // sorted
    ScorePoint scores;
};

Outcome make_outcome(const Dinner& d, std::vector<MorselId> alice);
Outcome outcome_of(const Transcript& t);

/// Best score `player` can reach in every subdinner when the opponent is
/// pinned to `opponent`, by memoized backward induction over remaining
/// subsets. Whose turn it is follows from the subset size and the dinner's
/// last mover, so the memo is keyed by the subset alone.
class BestResponse {
public:
    /// Throws GuardExceeded when d.size() > limits.max_dp_n.
    BestResponse(Dinner d, Strategy opponent, Player player, const OracleLimits& limits = {});

    /// Optimal value on the whole dinner.
    Rational value() { return value(full_mask()); }
    /// Optimal value on the subdinner of positions in `mask`.
    Rational value(std::uint32_t mask);

    /// For each morsel, u_player(m) + value(dinner - m). Only meaningful
    /// when `player` moves first in the dinner.
    std::vector<std::pair<MorselId, Rational>> what_if();

    const Dinner& dinner() const { return dinner_; }

private:
    std::uint32_t full_mask() const {
        return dinner_.size() == 32 ? UINT32_MAX : (std::uint32_t{1} << dinner_.size()) - 1;
    }

    Dinner dinner_;
    Strategy opponent_;
    Player player_;
    std::unordered_map<std::uint32_t, Rational> memo_;
};

Rational best_response_value(const Dinner& d, const Strategy& opponent, Player player,
                             const OracleLimits& limits = {});

struct SpeCounterexample {
    std::vector<MorselId> subdinner;
    Player player;
    Rational best_response;
    Rational crossout_score;
};

struct SpeReport {
    bool passed = true;
    std::uint64_t subdinners_checked = 0;
    std::optional<SpeCounterexample> counterexample;
};

/// Checks, on every subdinner S (same last mover) and for both players P,
/// that the best response to crossout in S scores exactly chi_P(S).
SpeReport verify_spe(const Dinner& d, const OracleLimits& limits = {});

Json spe_report_to_json(const SpeReport& r);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Visits every plate Alice could end with (all k-subsets, k = Alice's move
/// count) as fn(alice_mask, ScorePoint). Requires d.size() <= 63.
template <typename Fn>
void for_each_outcome(const Dinner& d, Fn&& fn);

/// One Outcome per k-subset. Throws GuardExceeded past limits.max_outcomes.
std::vector<Outcome> enumerate_outcomes(const Dinner& d, const OracleLimits& limits = {});

/// Distinct score pairs `player` can reach while the opponent plays crossout.
std::vector<ScorePoint> outcomes_vs_crossout(const Dinner& d, Player player, const OracleLimits& limits = {});

struct OutcomeCloud {
    std::vector<ScorePoint> all_points;         // one per outcome, not deduplicated
    std::vector<ScorePoint> restricted_points;  // deduplicated, sorted
    std::optional<ScorePoint> crossout_point;
};

/// All outcomes, optionally the cloud reachable against crossout, and the
/// (c,c) point.
OutcomeCloud outcome_cloud(const Dinner& d, std::optional<Player> vs_crossout, const OracleLimits& limits = {});

/// "score_a,score_b,kind" with kind in {all, vs_crossout, crossout}.
std::string cloud_to_csv(const OutcomeCloud& cloud);

struct ParetoReport {
    bool efficient = true;
    bool weakly_efficient = true;
    std::uint64_t outcomes_checked = 0;
    // Among outcomes at least as good for both players and better for one.
    Rational gain_A;
    Rational gain_B;
    // gain / own score; only for positive own scores.
    Rational relative_gain_A;
    Rational relative_gain_B;
    Rational relative_gain_joint;  // (a' + b') / (a + b) - 1
    std::vector<ScorePoint> dominating_points;  // deduplicated, sorted
};

ParetoReport pareto_analysis(const Dinner& d, const ScorePoint& point, const OracleLimits& limits = {});
inline ParetoReport pareto_analysis(const Dinner& d, const Outcome& o, const OracleLimits& limits = {}) {
    return pareto_analysis(d, o.scores, limits);
}

Json pareto_report_to_json(const ParetoReport& r);

struct Envy {
    Rational A;
    Rational B;
    const Rational& of(Player p) const { return p == Player::A ? A : B; }
};

/// max(0, own utility of the other plate - own utility of own plate).
Envy envy_metrics(const Dinner& d, const Outcome& o);

}  // namespace ethdinner

template <typename Fn>
void ethdinner::for_each_outcome(const Dinner& d, Fn&& fn) {
    const std::size_t n = d.size();
    const std::size_t k = d.moves_of(Player::A);
    const auto& ms = d.morsels();
    Rational bob_total = d.total(Player::B);
    // Depth-first over positions choosing Alice's plate; Bob's score is the
    // complement of the b-values Alice takes.
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left, std::uint64_t mask, const Rational& sa,
                   const Rational& sb_taken) -> void {
        if (left == 0) {
            fn(mask, ScorePoint{sa, bob_total - sb_taken});
            return;
        }
        for (std::size_t i = pos; i + left <= n; ++i)
            self(self, i + 1, left - 1, mask | (std::uint64_t{1} << i), sa + ms[i].a, sb_taken + ms[i].b);
    };
    rec(rec, 0, k, 0, Rational(0), Rational(0));
}
