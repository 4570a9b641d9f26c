#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "crossout.hpp"

namespace ethdinner {
namespace {

constexpr std::size_t kMaxMaskBits = 32;

void check_dp_guard(const Dinner& d, const OracleLimits& limits, const char* what) {
    if (d.size() > limits.max_dp_n || d.size() > kMaxMaskBits)
        throw GuardExceeded(std::string(what) + ": dinner of " + std::to_string(d.size()) +
                            " morsels exceeds the size guard of " +
                            std::to_string(std::min(limits.max_dp_n, kMaxMaskBits)));
}

// Crossout sequence of any subdinner given as a position mask, in O(n)
// from the two sort orders of the full dinner.
class MaskCrossout {
public:
    explicit MaskCrossout(const Dinner& d) : d_(d), by_a_(d.size()), by_b_(d.size()) {
        std::iota(by_a_.begin(), by_a_.end(), std::size_t{0});
        std::iota(by_b_.begin(), by_b_.end(), std::size_t{0});
        std::sort(by_a_.begin(), by_a_.end(), [&](auto x, auto y) { return d[x].a < d[y].a; });
        std::sort(by_b_.begin(), by_b_.end(), [&](auto x, auto y) { return d[x].b < d[y].b; });
    }

    struct Result {
        std::size_t strategy_pos = 0;  // last morsel crossed out
        Rational chi_A;
        Rational chi_B;
        const Rational& chi(Player p) const { return p == Player::A ? chi_A : chi_B; }
    };

    Result run(std::uint32_t mask) const {
        Result r;
        std::uint32_t left = mask;
        std::size_t cursor_a = 0;
        std::size_t cursor_b = 0;
        Player crossing = other(d_.last_mover());
        while (left != 0) {
            const auto& order = crossing == Player::A ? by_a_ : by_b_;
            std::size_t& cursor = crossing == Player::A ? cursor_a : cursor_b;
            while (!(left >> order[cursor] & 1U)) ++cursor;
            std::size_t pos = order[cursor++];
            left &= ~(std::uint32_t{1} << pos);
            // Crossed out by one player, eaten by the other.
            Player eater = other(crossing);
            (eater == Player::A ? r.chi_A : r.chi_B) += d_[pos].utility(eater);
            r.strategy_pos = pos;
            crossing = other(crossing);
        }
        return r;
    }

private:
    const Dinner& d_;
    std::vector<std::size_t> by_a_;
    std::vector<std::size_t> by_b_;
};

std::vector<MorselId> ids_in(const Dinner& d, std::uint64_t mask) {
    std::vector<MorselId> ids;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (mask >> i & 1U) ids.push_back(d[i].id);
    return ids;
}

ScorePoint add_to(ScorePoint p, Player who, const Rational& v) {
    (who == Player::A ? p.a : p.b) += v;
    return p;
}

}  // namespace

Outcome make_outcome(const Dinner& d, std::vector<MorselId> alice) {
    std::sort(alice.begin(), alice.end());
    Outcome o;
    for (const auto& m : d.morsels()) {
        if (std::binary_search(alice.begin(), alice.end(), m.id))
            o.scores.a += m.a;
        else
            o.scores.b += m.b;
    }
    o.alice = std::move(alice);
    return o;
}

Outcome outcome_of(const Transcript& t) {
    Outcome o;
    for (const auto& mv : t.moves)
        if (mv.player == Player::A) o.alice.push_back(mv.morsel.id);
    std::sort(o.alice.begin(), o.alice.end());
    o.scores = ScorePoint{t.score_A, t.score_B};
    return o;
}

BestResponse::BestResponse(Dinner d, Strategy opponent, Player player, const OracleLimits& limits)
    : dinner_(std::move(d)), opponent_(std::move(opponent)), player_(player) {
    check_dp_guard(dinner_, limits, "best response");
}

Rational BestResponse::value(std::uint32_t mask) {
    if (mask == 0) return Rational(0);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Rational result;
    Player mover = dinner_.mover_with(static_cast<std::size_t>(std::popcount(mask)));
    if (mover == player_) {
        bool first = true;
        for (std::size_t i = 0; i < dinner_.size(); ++i) {
            if (!(mask >> i & 1U)) continue;
            Rational v = dinner_[i].utility(player_) + value(mask & ~(std::uint32_t{1} << i));
            if (first || v > result) result = v;
            first = false;
        }
    } else {
        MorselId id = opponent_.choose(dinner_.subset(mask));
        std::size_t pos = dinner_.position_of(id);
        result = value(mask & ~(std::uint32_t{1} << pos));
    }
    memo_.emplace(mask, result);
    return result;
}

std::vector<std::pair<MorselId, Rational>> BestResponse::what_if() {
    std::vector<std::pair<MorselId, Rational>> out;
    const std::uint32_t full = full_mask();
    for (std::size_t i = 0; i < dinner_.size(); ++i)
        out.emplace_back(dinner_[i].id, dinner_[i].utility(player_) + value(full & ~(std::uint32_t{1} << i)));
    return out;
}

Rational best_response_value(const Dinner& d, const Strategy& opponent, Player player, const OracleLimits& limits) {
    BestResponse br(d, opponent, player, limits);
    return br.value();
}

SpeReport verify_spe(const Dinner& d, const OracleLimits& limits) {
    check_dp_guard(d, limits, "verify_spe");
    SpeReport report;
    const std::size_t n = d.size();
    const std::uint32_t full = n == 32 ? UINT32_MAX : (std::uint32_t{1} << n) - 1;
    MaskCrossout scan(d);
    std::vector<Rational> best(static_cast<std::size_t>(full) + 1);
    for (Player p : {Player::A, Player::B}) {
        best[0] = Rational(0);
        for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
            const auto xo = scan.run(mask);
            Rational value;
            if (d.mover_with(static_cast<std::size_t>(std::popcount(mask))) == p) {
                bool first = true;
                for (std::uint32_t left = mask; left != 0; left &= left - 1) {
                    auto i = static_cast<std::size_t>(std::countr_zero(left));
                    Rational v = d[i].utility(p) + best[mask & ~(std::uint32_t{1} << i)];
                    if (first || v > value) value = v;
                    first = false;
                }
            } else {
                value = best[mask & ~(std::uint32_t{1} << xo.strategy_pos)];
            }
            best[mask] = value;
            if (p == Player::A) ++report.subdinners_checked;
            if (value != xo.chi(p) && report.passed) {
                report.passed = false;
                report.counterexample = SpeCounterexample{ids_in(d, mask), p, value, xo.chi(p)};
            }
            if (mask == full) break;
        }
    }
    return report;
}

Json spe_report_to_json(const SpeReport& r) {
    Json j{{"passed", r.passed}, {"subdinners_checked", r.subdinners_checked}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = Json{{"subdinner", c.subdinner},
                                   {"player", std::string(1, to_char(c.player))},
                                   {"best_response", rational_to_json(c.best_response)},
                                   {"crossout_score", rational_to_json(c.crossout_score)}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<Outcome> enumerate_outcomes(const Dinner& d, const OracleLimits& limits) {
    const auto count = binomial(d.size(), d.moves_of(Player::A));
    if (d.size() > 63 || count > limits.max_outcomes)
        throw GuardExceeded("outcome enumeration: C(" + std::to_string(d.size()) + ", " +
                            std::to_string(d.moves_of(Player::A)) + ") exceeds the guard of " +
                            std::to_string(limits.max_outcomes));
    std::vector<Outcome> out;
    out.reserve(count);
    for_each_outcome(d, [&](std::uint64_t mask, const ScorePoint& pt) {
        out.push_back(Outcome{ids_in(d, mask), pt});
    });
    return out;
}

std::vector<ScorePoint> outcomes_vs_crossout(const Dinner& d, Player player, const OracleLimits& limits) {
    check_dp_guard(d, limits, "outcomes vs crossout");
    unsigned __int128 paths = 1;
    for (std::size_t r = d.size(); r >= 1; --r) {
        if (d.mover_with(r) == player) paths *= r;
        if (paths > limits.max_paths)
            throw GuardExceeded("outcomes vs crossout: move sequences exceed the guard of " +
                                std::to_string(limits.max_paths));
    }
    MaskCrossout scan(d);
    std::unordered_map<std::uint32_t, std::vector<ScorePoint>> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> const std::vector<ScorePoint>& {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::vector<ScorePoint> points;
        if (mask == 0) {
            points.push_back(ScorePoint{});
        } else {
            Player mover = d.mover_with(static_cast<std::size_t>(std::popcount(mask)));
            if (mover == player) {
                for (std::uint32_t left = mask; left != 0; left &= left - 1) {
                    auto i = static_cast<std::size_t>(std::countr_zero(left));
                    for (const auto& pt : self(self, mask & ~(std::uint32_t{1} << i)))
                        points.push_back(add_to(pt, mover, d[i].utility(mover)));
                }
                std::sort(points.begin(), points.end());
                points.erase(std::unique(points.begin(), points.end()), points.end());
            } else {
                std::size_t c = scan.run(mask).strategy_pos;
                for (const auto& pt : self(self, mask & ~(std::uint32_t{1} << c)))
                    points.push_back(add_to(pt, mover, d[c].utility(mover)));
            }
        }
        return memo.emplace(mask, std::move(points)).first->second;
    };
    const std::uint32_t full = d.size() == 32 ? UINT32_MAX : (std::uint32_t{1} << d.size()) - 1;
    return rec(rec, full);
}

OutcomeCloud outcome_cloud(const Dinner& d, std::optional<Player> vs_crossout, const OracleLimits& limits) {
    OutcomeCloud cloud;
    for (auto& o : enumerate_outcomes(d, limits)) cloud.all_points.push_back(o.scores);
    if (vs_crossout) cloud.restricted_points = outcomes_vs_crossout(d, *vs_crossout, limits);
    auto chi = crossout_scores(d);
    cloud.crossout_point = ScorePoint{chi.chi_A, chi.chi_B};
    return cloud;
}

std::string cloud_to_csv(const OutcomeCloud& cloud) {
    std::ostringstream out;
    out << "score_a,score_b,kind\n";
    auto row = [&](const ScorePoint& p, const char* kind) {
        out << p.a.to_exact_text() << ',' << p.b.to_exact_text() << ',' << kind << '\n';
    };
    for (const auto& p : cloud.all_points) row(p, "all");
    for (const auto& p : cloud.restricted_points) row(p, "vs_crossout");
    if (cloud.crossout_point) row(*cloud.crossout_point, "crossout");
    return out.str();
}

ParetoReport pareto_analysis(const Dinner& d, const ScorePoint& point, const OracleLimits& limits) {
    const auto count = binomial(d.size(), d.moves_of(Player::A));
    if (d.size() > 63 || count > limits.max_outcomes)
        throw GuardExceeded("pareto analysis: C(" + std::to_string(d.size()) + ", " +
                            std::to_string(d.moves_of(Player::A)) + ") exceeds the guard of " +
                            std::to_string(limits.max_outcomes));
    ParetoReport r;
    const Rational joint = point.a + point.b;
    for_each_outcome(d, [&](std::uint64_t, const ScorePoint& q) {
        ++r.outcomes_checked;
        if (q.a < point.a || q.b < point.b || q == point) return;
        r.efficient = false;
        if (q.a > point.a && q.b > point.b) r.weakly_efficient = false;
        r.dominating_points.push_back(q);
        r.gain_A = std::max(r.gain_A, q.a - point.a);
        r.gain_B = std::max(r.gain_B, q.b - point.b);
        if (joint > 0) r.relative_gain_joint = std::max(r.relative_gain_joint, (q.a + q.b) / joint - 1);
    });
    if (point.a > 0) r.relative_gain_A = r.gain_A / point.a;
    if (point.b > 0) r.relative_gain_B = r.gain_B / point.b;
    std::sort(r.dominating_points.begin(), r.dominating_points.end());
    r.dominating_points.erase(std::unique(r.dominating_points.begin(), r.dominating_points.end()),
                              r.dominating_points.end());
    return r;
}

Json pareto_report_to_json(const ParetoReport& r) {
    Json pts = Json::array();
    for (const auto& p : r.dominating_points) pts.push_back(Json::array({rational_to_json(p.a), rational_to_json(p.b)}));
    return Json{{"efficient", r.efficient},
                {"weakly_efficient", r.weakly_efficient},
                {"outcomes_checked", r.outcomes_checked},
                {"best_improvements", Json{{"A", rational_to_json(r.gain_A)}, {"B", rational_to_json(r.gain_B)}}},
                {"relative_improvements",
                 Json{{"A", rational_to_json(r.relative_gain_A)},
                      {"B", rational_to_json(r.relative_gain_B)},
                      {"joint", rational_to_json(r.relative_gain_joint)}}},
                {"dominating_points", pts}};
}

Envy envy_metrics(const Dinner& d, const Outcome& o) {
    Rational alice_own;
    Rational alice_other;
    Rational bob_own;
    Rational bob_other;
    for (const auto& m : d.morsels()) {
        if (std::binary_search(o.alice.begin(), o.alice.end(), m.id)) {
            alice_own += m.a;
            bob_other += m.b;
        } else {
            bob_own += m.b;
            alice_other += m.a;
        }
    }
    return Envy{std::max(Rational(0), alice_other - alice_own), std::max(Rational(0), bob_other - bob_own)};
}

}  // namespace ethdinner
