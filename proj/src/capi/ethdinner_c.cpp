#include "ethdinner/ethdinner.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "../core/analysis.hpp"
#include "../core/crossout.hpp"
#include "../core/service.hpp"

using namespace ethdinner;

struct ed_dinner {
    Dinner value;
};

struct ed_service {
    GameService value;
};

namespace {

thread_local std::string last_error;

ed_status fail(ed_status code, const char* what) {
    last_error = what;
    return code;
}

template <typename Fn>
ed_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const GuardExceeded& ex) {
        return fail(ED_ERR_GUARD, ex.what());
    } catch (const ValidationError& ex) {
        return fail(ED_ERR_VALIDATION, ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(ED_ERR_VALIDATION, ex.what());
    } catch (const std::exception& ex) {
        return fail(ED_ERR_INTERNAL, ex.what());
    } catch (...) {
        return fail(ED_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

ed_status emit(char** out, const std::string& s) {
    *out = dup_string(s);
    return ED_OK;
}

std::optional<Player> player_from_char(char c) {
    if (c == 'A' || c == 'a') return Player::A;
    if (c == 'B' || c == 'b') return Player::B;
    return std::nullopt;
}

OracleLimits to_limits(const ed_limits* l) {
    OracleLimits limits;
    if (l != nullptr) {
        limits.max_dp_n = l->max_dp_n;
        limits.max_outcomes = l->max_outcomes;
        limits.max_paths = l->max_paths;
    }
    return limits;
}

PayoffParams parse_params(std::string_view text) {
    if (text == "zero-sum") return PayoffParams::zero_sum();
    if (text == "cooperative") return PayoffParams::fully_cooperative();
    if (text == "plain") return PayoffParams::plain();
    Rational v[4];
    std::size_t i = 0;
    while (i < 4) {
        auto comma = text.find(',');
        v[i++] = Rational::parse(text.substr(0, comma));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (i != 4 || text.find(',') != std::string_view::npos)
        throw ValidationError("payoff params need four values: alpha_A,beta_A,alpha_B,beta_B");
    return PayoffParams{v[0], v[1], v[2], v[3]};
}

}  // namespace

#define ED_REQUIRE(cond)                                                  \
    do {                                                                  \
        if (!(cond)) return fail(ED_ERR_ARGUMENT, "invalid argument: " #cond); \
    } while (0)

extern "C" {

const char* ed_version(void) { return "1.0.0"; }

const char* ed_last_error(void) { return last_error.c_str(); }

void ed_string_free(char* s) { std::free(s); }

void ed_limits_default(ed_limits* out) {
    if (out == nullptr) return;
    OracleLimits l;
    out->max_dp_n = static_cast<uint32_t>(l.max_dp_n);
    out->max_outcomes = l.max_outcomes;
    out->max_paths = l.max_paths;
}

ed_status ed_dinner_parse(const char* json, ed_dinner** out) {
    ED_REQUIRE(json != nullptr && out != nullptr);
    return guarded([&] {
        *out = new ed_dinner{parse_dinner(json)};
        return ED_OK;
    });
}

ed_status ed_dinner_from_permutation(const int32_t* pi, size_t n, char last_mover, ed_dinner** out) {
    ED_REQUIRE((pi != nullptr || n == 0) && out != nullptr);
    auto last = player_from_char(last_mover);
    ED_REQUIRE(last.has_value());
    return guarded([&] {
        *out = new ed_dinner{PermutationDinner(std::vector<int>(pi, pi + n)).to_dinner(*last)};
        return ED_OK;
    });
}

ed_status ed_dinner_random_permutation(size_t n, uint64_t seed, char last_mover, ed_dinner** out) {
    ED_REQUIRE(out != nullptr);
    auto last = player_from_char(last_mover);
    ED_REQUIRE(last.has_value());
    return guarded([&] {
        *out = new ed_dinner{random_permutation_dinner(n, seed).to_dinner(*last)};
        return ED_OK;
    });
}

ed_status ed_dinner_with_last_mover(const ed_dinner* d, char last_mover, ed_dinner** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    auto last = player_from_char(last_mover);
    ED_REQUIRE(last.has_value());
    return guarded([&] {
        *out = new ed_dinner{d->value.with_last_mover(*last)};
        return ED_OK;
    });
}

void ed_dinner_free(ed_dinner* d) { delete d; }

size_t ed_dinner_size(const ed_dinner* d) { return d == nullptr ? 0 : d->value.size(); }

ed_status ed_dinner_to_json(const ed_dinner* d, char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    return guarded([&] { return emit(out, serialize_dinner(d->value)); });
}

ed_status ed_crossout_json(const ed_dinner* d, int include_board, char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    return guarded([&] {
        const Dinner& dn = d->value;
        const auto chi = crossout_scores(dn);
        Json j{{"scores", Json{{"A", rational_to_json(chi.chi_A)}, {"B", rational_to_json(chi.chi_B)}}}};
        if (dn.empty()) {
            j["sequence"] = nullptr;
            j["strategy"] = nullptr;
        } else {
            Json seq = Json::array();
            for (const auto& m : crossout_sequence(dn)) seq.push_back(m.id);
            j["sequence"] = seq;
            j["strategy"] = crossout_strategy(dn).id;
            if (include_board != 0) j["board"] = board_to_json(crossout_board(dn));
        }
        return emit(out, j.dump());
    });
}

ed_status ed_crossout_board_text(const ed_dinner* d, int play_labels, char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    return guarded([&] { return emit(out, render_board(d->value, play_labels != 0)); });
}

ed_status ed_play_json(const ed_dinner* d, const char* alice, const char* bob, const char* order, char first,
                       char** out) {
    ED_REQUIRE(d != nullptr && alice != nullptr && bob != nullptr && out != nullptr);
    return guarded([&] {
        std::optional<TurnOrder> turns;
        std::string_view kind = order == nullptr ? "alternating" : order;
        if (kind == "thue-morse") {
            auto p = player_from_char(first);
            if (!p) throw ValidationError("thue-morse order needs a first player A or B");
            turns = thue_morse_order(d->value.size(), *p);
        } else if (kind != "alternating") {
            throw ValidationError("unknown turn order '" + std::string(kind) + "'");
        }
        const auto t = play(d->value, builtin_strategy(alice, Player::A), builtin_strategy(bob, Player::B), turns);
        return emit(out, transcript_to_json(t).dump());
    });
}

ed_status ed_best_response(const ed_dinner* d, const char* opponent, char player, const ed_limits* limits,
                           char** out) {
    ED_REQUIRE(d != nullptr && opponent != nullptr && out != nullptr);
    auto p = player_from_char(player);
    ED_REQUIRE(p.has_value());
    return guarded([&] {
        auto v = best_response_value(d->value, builtin_strategy(opponent, other(*p)), *p, to_limits(limits));
        return emit(out, v.to_exact_text());
    });
}

ed_status ed_verify_spe_json(const ed_dinner* d, const ed_limits* limits, int* passed, char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    return guarded([&] {
        const auto report = verify_spe(d->value, to_limits(limits));
        if (passed != nullptr) *passed = report.passed ? 1 : 0;
        return emit(out, spe_report_to_json(report).dump());
    });
}

ed_status ed_outcomes_csv(const ed_dinner* d, char vs_player, const ed_limits* limits, char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    auto vs = player_from_char(vs_player);
    ED_REQUIRE(vs_player == 0 || vs.has_value());
    return guarded([&] { return emit(out, cloud_to_csv(outcome_cloud(d->value, vs, to_limits(limits)))); });
}

ed_status ed_outcomes_json(const ed_dinner* d, char vs_player, const ed_limits* limits, char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    auto vs = player_from_char(vs_player);
    ED_REQUIRE(vs_player == 0 || vs.has_value());
    return guarded([&] {
        const auto cloud = outcome_cloud(d->value, vs, to_limits(limits));
        Json j{{"all_points", cloud.all_points.size()},
               {"crossout_point",
                Json::array({rational_to_json(cloud.crossout_point->a), rational_to_json(cloud.crossout_point->b)})}};
        if (vs) {
            const Player p = *vs;
            Json pts = Json::array();
            bool rightmost = true;
            for (const auto& pt : cloud.restricted_points) {
                pts.push_back(Json::array({rational_to_json(pt.a), rational_to_json(pt.b)}));
                if (pt.of(p) > cloud.crossout_point->of(p)) rightmost = false;
            }
            j["vs_crossout_player"] = std::string(1, to_char(p));
            j["vs_crossout_points"] = pts;
            j["crossout_is_best_vs_crossout"] = rightmost;
        }
        return emit(out, j.dump());
    });
}

ed_status ed_pareto_json(const ed_dinner* d, const char* alice, const char* bob, const ed_limits* limits,
                         char** out) {
    ED_REQUIRE(d != nullptr && out != nullptr);
    return guarded([&] {
        const auto t = play(d->value, builtin_strategy(alice == nullptr ? "crossout" : alice, Player::A),
                            builtin_strategy(bob == nullptr ? "crossout" : bob, Player::B));
        const auto outcome = outcome_of(t);
        const auto report = pareto_analysis(d->value, outcome, to_limits(limits));
        const auto envy = envy_metrics(d->value, outcome);
        Json j = pareto_report_to_json(report);
        j["outcome"] = Json{{"alice", outcome.alice},
                            {"scores", Json::array({rational_to_json(outcome.scores.a),
                                                    rational_to_json(outcome.scores.b)})}};
        j["envy"] = Json{{"A", rational_to_json(envy.A)}, {"B", rational_to_json(envy.B)}};
        return emit(out, j.dump());
    });
}

ed_status ed_experiment_json(uint32_t n, uint64_t samples, uint64_t seed, uint32_t threads, const ed_limits* limits,
                             char** out) {
    ED_REQUIRE(out != nullptr);
    return guarded([&] {
        return emit(out, monte_carlo_to_json(monte_carlo_pareto(n, samples, seed, threads, to_limits(limits))).dump());
    });
}

ed_status ed_pareto_census_json(uint32_t n, char** out) {
    ED_REQUIRE(out != nullptr);
    return guarded([&] {
        Json found = Json::array();
        for (const auto& pd : pareto_census(n)) found.push_back(pd.pi());
        return emit(out, Json{{"n", n}, {"inefficient", found.size()}, {"permutations", found}}.dump());
    });
}

ed_status ed_catalan_json(uint32_t k, char** out) {
    ED_REQUIRE(out != nullptr);
    return guarded([&] {
        auto [alice, bob] = attainable_outcomes_count(k);
        return emit(out, Json{{"k", k}, {"alice", alice}, {"bob", bob}}.dump());
    });
}

ed_status ed_inversions_json(const int32_t* pi, size_t n, char** out) {
    ED_REQUIRE((pi != nullptr || n == 0) && out != nullptr);
    return guarded([&] {
        PermutationDinner pd(std::vector<int>(pi, pi + n));
        const auto inv = inversions(pd);
        Json j{{"permutation", pd.pi()},
               {"left", inv.left},
               {"right", inv.right},
               {"j_of_2j_plus_1", check_j_of_2j_plus_1(pd)}};
        return emit(out, j.dump());
    });
}

ed_status ed_monotonicity_json(uint32_t n, char** out) {
    ED_REQUIRE(out != nullptr);
    return guarded([&] {
        const auto r = check_inversion_monotonicity(n);
        return emit(out, Json{{"n", n},
                              {"comparable_pairs", r.comparable_pairs},
                              {"score_violations", r.score_violations},
                              {"domination_violations", r.domination_violations},
                              {"holds", r.holds()}}
                             .dump());
    });
}

ed_status ed_transform_json(const ed_dinner* d, const char* params, char** out) {
    ED_REQUIRE(d != nullptr && params != nullptr && out != nullptr);
    return guarded([&] { return emit(out, serialize_dinner(transform_generalized(d->value, parse_params(params)))); });
}

ed_status ed_service_create(ed_service** out) {
    ED_REQUIRE(out != nullptr);
    return guarded([&] {
        *out = new ed_service{};
        return ED_OK;
    });
}

void ed_service_free(ed_service* s) { delete s; }

ed_status ed_service_handle(ed_service* s, const char* method, const char* path, const char* body, int* http_status,
                            char** out_body) {
    ED_REQUIRE(s != nullptr && method != nullptr && path != nullptr && http_status != nullptr && out_body != nullptr);
    return guarded([&] {
        auto r = s->value.handle(method, path, body == nullptr ? "" : body);
        *http_status = r.status;
        return emit(out_body, r.body);
    });
}

}  // extern "C"
