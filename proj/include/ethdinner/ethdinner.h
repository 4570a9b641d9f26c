/*
 * ethdinner: C interface to the Ethiopian Dinner engine.
 *
 * All functions return an ed_status. On failure, ed_last_error() returns a
 * message describing the most recent error on the calling thread. Strings
 * returned through char** out-parameters are allocated by the library and
 * must be released with ed_string_free(). Handles are opaque; each *_create
 * or *_parse call is paired with the matching *_free.
 *
 * Utilities are exact rationals. They cross this interface as JSON text:
 * integers as JSON numbers, other values as exact decimal strings ("0.1")
 * or fractions ("1/3").
 */
#ifndef ETHDINNER_H
#define ETHDINNER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ETHDINNER_BUILDING)
#    define ED_API __declspec(dllexport)
#  else
#    define ED_API __declspec(dllimport)
#  endif
#else
#  define ED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ed_status {
  ED_OK = 0,
  ED_ERR_ARGUMENT = 1,   /* null pointer, bad option value */
  ED_ERR_VALIDATION = 2, /* malformed or invalid dinner, unknown strategy, tie */
  ED_ERR_GUARD = 3,      /* an exact computation exceeds its size guard */
  ED_ERR_INTERNAL = 4
} ed_status;

typedef struct ed_dinner ed_dinner;
typedef struct ed_service ed_service;

/* Size guards for exhaustive computations. Pass NULL for the defaults
 * (24 morsels for subset DP, 10^7 outcomes, 10^9 move sequences). */
typedef struct ed_limits {
  uint32_t max_dp_n;
  uint64_t max_outcomes;
  uint64_t max_paths;
} ed_limits;

ED_API const char* ed_version(void);
ED_API const char* ed_last_error(void);
ED_API void ed_string_free(char* s);
ED_API void ed_limits_default(ed_limits* out);

/* ---- dinners ---------------------------------------------------------- */

/* {"last_mover": "A"|"B", "morsels": [[a, b], ...]} */
ED_API ed_status ed_dinner_parse(const char* json, ed_dinner** out);
/* Morsels (i, pi[i-1]) for a permutation pi of 1..n. last_mover is 'A' or 'B'. */
ED_API ed_status ed_dinner_from_permutation(const int32_t* pi, size_t n, char last_mover, ed_dinner** out);
ED_API ed_status ed_dinner_random_permutation(size_t n, uint64_t seed, char last_mover, ed_dinner** out);
ED_API ed_status ed_dinner_with_last_mover(const ed_dinner* d, char last_mover, ed_dinner** out);
ED_API void ed_dinner_free(ed_dinner* d);
ED_API size_t ed_dinner_size(const ed_dinner* d);
ED_API ed_status ed_dinner_to_json(const ed_dinner* d, char** out);

/* ---- crossout --------------------------------------------------------- */

/* {"sequence":[ids], "strategy": id, "scores": {"A": r, "B": r}}
 * plus "board" (the board JSON) when include_board is nonzero. Strategy and
 * sequence are null for an empty dinner. */
ED_API ed_status ed_crossout_json(const ed_dinner* d, int include_board, char** out);
/* Text picture of the crossout board; play_labels selects A_i/B_j labels. */
ED_API ed_status ed_crossout_board_text(const ed_dinner* d, int play_labels, char** out);

/* ---- play ------------------------------------------------------------- */

/* Strategy names: crossout, competitive, greedy, masochistic, cooperative;
 * the last three take the player they are played by unless given
 * explicitly, e.g. "greedy(B)". order: "alternating" (or NULL) or
 * "thue-morse"; `first` is the opening player for thue-morse.
 * Writes the transcript JSON. */
ED_API ed_status ed_play_json(const ed_dinner* d, const char* alice, const char* bob, const char* order, char first,
                              char** out);

/* ---- oracle ----------------------------------------------------------- */

/* Best score `player` can reach against `opponent`, as exact text. */
ED_API ed_status ed_best_response(const ed_dinner* d, const char* opponent, char player, const ed_limits* limits,
                                  char** out);
/* Subgame-perfection report; *passed set to 1 or 0. */
ED_API ed_status ed_verify_spe_json(const ed_dinner* d, const ed_limits* limits, int* passed, char** out);
/* Outcome cloud CSV (score_a,score_b,kind). vs_player 'A'/'B' adds the
 * points reachable against crossout; 0 omits them. */
ED_API ed_status ed_outcomes_csv(const ed_dinner* d, char vs_player, const ed_limits* limits, char** out);
/* Summary counts of the same cloud as JSON. */
ED_API ed_status ed_outcomes_json(const ed_dinner* d, char vs_player, const ed_limits* limits, char** out);
/* Pareto and envy analysis of the outcome of play(alice, bob). */
ED_API ed_status ed_pareto_json(const ed_dinner* d, const char* alice, const char* bob, const ed_limits* limits,
                                char** out);

/* ---- analysis --------------------------------------------------------- */

/* threads = 0 uses all hardware threads. */
ED_API ed_status ed_experiment_json(uint32_t n, uint64_t samples, uint64_t seed, uint32_t threads,
                                    const ed_limits* limits, char** out);
ED_API ed_status ed_pareto_census_json(uint32_t n, char** out);
ED_API ed_status ed_catalan_json(uint32_t k, char** out);
ED_API ed_status ed_inversions_json(const int32_t* pi, size_t n, char** out);
ED_API ed_status ed_monotonicity_json(uint32_t n, char** out);
/* params: four comma-separated rationals "alpha_A,beta_A,alpha_B,beta_B",
 * or one of "zero-sum", "cooperative", "plain". Writes the transformed
 * dinner JSON. */
ED_API ed_status ed_transform_json(const ed_dinner* d, const char* params, char** out);

/* ---- game service ----------------------------------------------------- */

ED_API ed_status ed_service_create(ed_service** out);
ED_API void ed_service_free(ed_service* s);
/* Handles one REST request. body may be NULL. */
ED_API ed_status ed_service_handle(ed_service* s, const char* method, const char* path, const char* body,
                                   int* http_status, char** out_body);

#ifdef __cplusplus
}
#endif

#endif /* ETHDINNER_H */
