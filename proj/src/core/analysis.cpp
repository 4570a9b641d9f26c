#include "analysis.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "crossout.hpp"

namespace ethdinner {
namespace {

// Alice's plate under (c,c), read off the crossout order: whatever one
// player crosses out, the other eats.
std::vector<std::size_t> crossout_plate(const Dinner& d, Player eater) {
    std::vector<std::size_t> plate;
    if (d.empty()) return plate;
    const auto order = crossout_order(d);
    Player crossing = other(d.last_mover());
    for (auto pos : order) {
        if (other(crossing) == eater) plate.push_back(pos);
        crossing = other(crossing);
    }
    return plate;
}

struct SampleResult {
    bool inefficient = false;
    bool weakly_inefficient = false;
    Rational rel_A;
    Rational rel_B;
    Rational rel_joint;
};

}  // namespace

Dinner center(const Dinner& d) {
    if (d.empty()) return d;
    const Rational n(static_cast<std::int64_t>(d.size()));
    const Rational mean_a = d.total(Player::A) / n;
    const Rational mean_b = d.total(Player::B) / n;
    std::vector<Morsel> ms = d.morsels();
    for (auto& m : ms) {
        m.a -= mean_a;
        m.b -= mean_b;
    }
    return Dinner::from_morsels(std::move(ms), d.last_mover());
}

Dinner transform_generalized(const Dinner& d, const PayoffParams& p) {
    std::vector<Morsel> ms = center(d).morsels();
    for (auto& m : ms) {
        Rational a = p.alpha_A * m.a - p.beta_A * m.b;
        Rational b = p.beta_B * m.b - p.alpha_B * m.a;
        m.a = a;
        m.b = b;
    }
    try {
        return Dinner::from_morsels(std::move(ms), d.last_mover());
    } catch (const DuplicateUtility& dup) {
        throw DegenerateTransform(std::string("transformed dinner is degenerate: ") + dup.what());
    }
}

std::pair<Rational, Rational> modified_payoffs(const Dinner& d, const PayoffParams& p, const Transcript& t) {
    const Dinner c = center(d);
    Rational alice_a;
    Rational bob_b;
    for (const auto& mv : t.moves) {
        const Morsel& m = c.by_id(mv.morsel.id);
        if (mv.player == Player::A)
            alice_a += m.a;
        else
            bob_b += m.b;
    }
    return {p.alpha_A * alice_a + p.beta_A * bob_b, p.alpha_B * alice_a + p.beta_B * bob_b};
}

bool check_temperature_order(const Dinner& d) {
    const Dinner hot = transform_generalized(d, PayoffParams::zero_sum());
    const auto t = play(hot, crossout(), crossout());
    for (std::size_t i = 1; i < t.moves.size(); ++i) {
        const Morsel& prev = d.by_id(t.moves[i - 1].morsel.id);
        const Morsel& next = d.by_id(t.moves[i].morsel.id);
        if (!(prev.a + prev.b > next.a + next.b)) return false;
    }
    return true;
}

bool check_cooperative_split(const Dinner& d, const OracleLimits& limits) {
    const Dinner coop = transform_generalized(d, PayoffParams::fully_cooperative());
    const auto t = play(coop, crossout(), crossout());
    const Outcome got = outcome_of(t);

    std::vector<Morsel> by_gap = d.morsels();
    std::sort(by_gap.begin(), by_gap.end(), [](const Morsel& x, const Morsel& y) { return x.a - x.b > y.a - y.b; });
    std::vector<MorselId> expected;
    for (std::size_t i = 0; i < d.moves_of(Player::A); ++i) expected.push_back(by_gap[i].id);
    std::sort(expected.begin(), expected.end());
    if (got.alice != expected) return false;

    const Outcome plain = make_outcome(d, got.alice);
    const Rational welfare = plain.scores.a + plain.scores.b;
    bool first = true;
    Rational best;
    for (const auto& o : enumerate_outcomes(d, limits)) {
        Rational w = o.scores.a + o.scores.b;
        if (first || w > best) best = w;
        first = false;
    }
    return welfare == best;
}

MonteCarloReport monte_carlo_pareto(std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned threads,
                                    const OracleLimits& limits) {
    if (n == 0) throw ValidationError("monte carlo needs n >= 1");
    const auto per_sample = binomial(n, n / 2);
    if (n > 63 || per_sample > limits.max_outcomes)
        throw GuardExceeded("monte carlo: C(" + std::to_string(n) + ", " + std::to_string(n / 2) +
                            ") outcomes per sample exceeds the guard of " + std::to_string(limits.max_outcomes));
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

    std::vector<SampleResult> results(samples);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < samples; i = next++) {
            const Dinner d = random_permutation_dinner(n, seed + i).to_dinner();
            const auto chi = crossout_scores(d);
            const auto rep = pareto_analysis(d, ScorePoint{chi.chi_A, chi.chi_B}, limits);
            results[i] = SampleResult{!rep.efficient, !rep.weakly_efficient, rep.relative_gain_A, rep.relative_gain_B,
                                      rep.relative_gain_joint};
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    MonteCarloReport r;
    r.n = n;
    r.samples = samples;
    r.seed = seed;
    r.rng = std::string(kGeneratorName);
    for (const auto& s : results) {
        r.inefficient += s.inefficient ? 1 : 0;
        r.weakly_inefficient += s.weakly_inefficient ? 1 : 0;
        r.max_relative_improvement_A = std::max(r.max_relative_improvement_A, s.rel_A);
        r.max_relative_improvement_B = std::max(r.max_relative_improvement_B, s.rel_B);
        r.max_relative_improvement_joint = std::max(r.max_relative_improvement_joint, s.rel_joint);
    }
    r.max_relative_improvement = std::max(r.max_relative_improvement_A, r.max_relative_improvement_B);
    return r;
}

Json monte_carlo_to_json(const MonteCarloReport& r) {
    return Json{{"n", r.n},
                {"samples", r.samples},
                {"seed", r.seed},
                {"rng", r.rng},
                {"inefficient", r.inefficient},
                {"weakly_inefficient", r.weakly_inefficient},
                {"max_rel_improvement", rational_to_json(r.max_relative_improvement)},
                {"max_rel_improvement_by_player",
                 Json{{"A", rational_to_json(r.max_relative_improvement_A)},
                      {"B", rational_to_json(r.max_relative_improvement_B)}}},
                {"max_rel_improvement_joint", rational_to_json(r.max_relative_improvement_joint)},
                {"max_rel_improvement_approx", r.max_relative_improvement.to_double()}};
}

std::vector<PermutationDinner> pareto_census(std::size_t n, const OracleLimits& limits) {
    if (n > 10) throw GuardExceeded("pareto census: n! enumeration limited to n <= 10");
    std::vector<PermutationDinner> found;
    for_each_permutation(n, [&](const std::vector<int>& pi) {
        PermutationDinner pd(pi);
        const Dinner d = pd.to_dinner();
        if (d.empty()) return;
        const auto chi = crossout_scores(d);
        if (!pareto_analysis(d, ScorePoint{chi.chi_A, chi.chi_B}, limits).efficient) found.push_back(pd);
    });
    return found;
}

std::pair<std::uint64_t, std::uint64_t> attainable_outcomes_count(std::size_t k) {
    if (k > 4) throw GuardExceeded("attainable outcome count: (2k)! enumeration limited to k <= 4");
    if (k == 0) return {1, 1};
    std::set<std::uint32_t> alice_sets;
    std::set<std::uint32_t> bob_sets;
    for_each_permutation(2 * k, [&](const std::vector<int>& pi) {
        const Dinner d = PermutationDinner(pi).to_dinner();
        std::uint32_t alice = 0;
        std::uint32_t bob = 0;
        for (auto pos : crossout_plate(d, Player::A)) alice |= 1U << (d[pos].a.num() - 1);
        for (auto pos : crossout_plate(d, Player::B)) bob |= 1U << (d[pos].b.num() - 1);
        alice_sets.insert(alice);
        bob_sets.insert(bob);
    });
    return {alice_sets.size(), bob_sets.size()};
}

InversionSets inversions(const PermutationDinner& pd) {
    InversionSets s;
    const auto& pi = pd.pi();
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) {
                s.left.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
                s.right.emplace_back(pi[i], pi[j]);
            }
    std::sort(s.right.begin(), s.right.end());
    return s;
}

MonotonicityReport check_inversion_monotonicity(std::size_t n) {
    if (n > 6) throw GuardExceeded("inversion monotonicity: pairwise enumeration limited to n <= 6");
    struct Entry {
        std::uint32_t left_mask;
        std::int64_t score;
        std::vector<std::int64_t> plate;  // sorted a-values
    };
    std::vector<Entry> all;
    for_each_permutation(n, [&](const std::vector<int>& pi) {
        Entry e{0, 0, {}};
        std::size_t bit = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++bit)
                if (pi[i] > pi[j]) e.left_mask |= 1U << bit;
        const Dinner d = PermutationDinner(pi).to_dinner();
        for (auto pos : crossout_plate(d, Player::A)) e.plate.push_back(d[pos].a.num());
        std::sort(e.plate.begin(), e.plate.end());
        for (auto v : e.plate) e.score += v;
        all.push_back(std::move(e));
    });
    MonotonicityReport r;
    for (const auto& lo : all)
        for (const auto& hi : all) {
            if ((lo.left_mask & ~hi.left_mask) != 0) continue;
            ++r.comparable_pairs;
            if (hi.score < lo.score) ++r.score_violations;
            for (std::size_t i = 0; i < lo.plate.size(); ++i)
                if (hi.plate[i] < lo.plate[i]) {
                    ++r.domination_violations;
                    break;
                }
        }
    return r;
}

bool check_j_of_2j_plus_1(const PermutationDinner& pd) {
    const Dinner d = pd.to_dinner();
    std::vector<std::int64_t> plate;
    for (auto pos : crossout_plate(d, Player::A)) plate.push_back(d[pos].a.num());
    for (std::size_t j = 0; 2 * j + 1 <= d.size() + 1; ++j) {
        auto bound = static_cast<std::int64_t>(2 * j + 1);
        auto eaten = std::count_if(plate.begin(), plate.end(), [&](std::int64_t v) { return v <= bound; });
        if (static_cast<std::size_t>(eaten) > j) return false;
    }
    return true;
}

}  // namespace ethdinner
