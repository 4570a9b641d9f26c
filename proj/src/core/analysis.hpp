// Experiments and combinatorial checks built on the engine and the oracle:
// generalized payoffs, Pareto census and Monte Carlo, Catalan counts,
// inversions.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dinner.hpp"
#include "oracle.hpp"
#include "play.hpp"

namespace ethdinner {

/// p_A = alpha_A * (a on Alice's plate) + beta_A * (b on Bob's plate)
/// p_B = alpha_B * (a on Alice's plate) + beta_B * (b on Bob's plate)
struct PayoffParams {
    Rational alpha_A{1};
    Rational beta_A{0};
    Rational alpha_B{0};
    Rational beta_B{1};

    static PayoffParams plain() { return {}; }
    static PayoffParams zero_sum() { return {Rational(1), Rational(-1), Rational(-1), Rational(1)}; }
    static PayoffParams fully_cooperative() { return {Rational(1), Rational(1), Rational(1), Rational(1)}; }
};

/// Translates each player's utilities so they sum to zero. Ids are kept.
Dinner center(const Dinner& d);

/// Centers d, then maps each morsel (a, b) to
/// (alpha_A a - beta_A b, beta_B b - alpha_B a). Ids and last mover are kept.
/// Throws DegenerateTransform if the result has tied coordinates.
Dinner transform_generalized(const Dinner& d, const PayoffParams& p);

/// Generalized payoffs of a transcript, evaluated on the centered utilities
/// of d (the same centering transform_generalized uses).
std::pair<Rational, Rational> modified_payoffs(const Dinner& d, const PayoffParams& p, const Transcript& t);

/// Both players crossing out on the zero-sum image of d eat morsels in
/// strictly decreasing a + b.
bool check_temperature_order(const Dinner& d);

/// Crossout on the cooperative image of d hands Alice the morsels with the
/// largest a - b, and the resulting joint welfare equals the exhaustive
/// maximum over all outcomes.
bool check_cooperative_split(const Dinner& d, const OracleLimits& limits = {});

struct MonteCarloReport {
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string rng;
    std::uint64_t inefficient = 0;
    std::uint64_t weakly_inefficient = 0;
    Rational max_relative_improvement;  // per player, max over both
    Rational max_relative_improvement_A;
    Rational max_relative_improvement_B;
    Rational max_relative_improvement_joint;
};

/// Sample i uses random_permutation_dinner(n, seed + i). Work is split across
/// `threads` workers; the report is identical for any thread count.
MonteCarloReport monte_carlo_pareto(std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0,
                                    const OracleLimits& limits = {});

Json monte_carlo_to_json(const MonteCarloReport& r);

/// Permutations of size n whose (c,c) outcome is Pareto inefficient.
std::vector<PermutationDinner> pareto_census(std::size_t n, const OracleLimits& limits = {});

/// Distinct (c,c) plates, identified by their utility sets, over all
/// permutation dinners of size 2k: (Alice's count, Bob's count).
std::pair<std::uint64_t, std::uint64_t> attainable_outcomes_count(std::size_t k);

struct InversionSets {
    std::vector<std::pair<int, int>> left;   // index pairs (i, j), 1-based
    std::vector<std::pair<int, int>> right;  // value pairs (pi_i, pi_j)
};

InversionSets inversions(const PermutationDinner& pi);

struct MonotonicityReport {
    std::uint64_t comparable_pairs = 0;
    std::uint64_t score_violations = 0;
    std::uint64_t domination_violations = 0;
    bool holds() const { return score_violations == 0 && domination_violations == 0; }
};

/// For every pair with left-inversions(pi) within left-inversions(pi'):
/// Alice's (c,c) score on pi' is at least that on pi, and her sorted plate
/// on pi' dominates the one on pi elementwise. Guard: n <= 6.
MonotonicityReport check_inversion_monotonicity(std::size_t n);

/// Under (c,c), for every j >= 0 Alice eats at most j of the utilities 1..2j+1.
bool check_j_of_2j_plus_1(const PermutationDinner& pi);

}  // namespace ethdinner
