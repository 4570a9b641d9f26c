#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "ethdinner/ethdinner.h"

using nlohmann::json;

namespace {

const char* kEight = R"({"last_mover":"B","morsels":[[1,8],[2,3],[3,6],[4,4],[5,1],[6,2],[7,5],[8,7]]})";
const char* kIntro = R"({"last_mover":"A","morsels":[[1,2],[2,3],[3,1]]})";

struct Dinner {
    ed_dinner* p = nullptr;
    explicit Dinner(const char* text) { REQUIRE(ed_dinner_parse(text, &p) == ED_OK); }
    ~Dinner() { ed_dinner_free(p); }
};

json take(char* s) {
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    ed_string_free(s);
    return j;
}

}  // namespace

TEST_CASE("version and defaults") {
    CHECK(std::strlen(ed_version()) > 0);
    ed_limits l;
    ed_limits_default(&l);
    CHECK(l.max_dp_n == 24);
    CHECK(l.max_outcomes == 10'000'000);
}

TEST_CASE("dinner lifecycle") {
    Dinner d(kEight);
    CHECK(ed_dinner_size(d.p) == 8);
    char* out = nullptr;
    REQUIRE(ed_dinner_to_json(d.p, &out) == ED_OK);
    CHECK(take(out) == json::parse(kEight));

    ed_dinner* swapped = nullptr;
    REQUIRE(ed_dinner_with_last_mover(d.p, 'A', &swapped) == ED_OK);
    REQUIRE(ed_dinner_to_json(swapped, &out) == ED_OK);
    CHECK(take(out)["last_mover"] == "A");
    ed_dinner_free(swapped);

    const int32_t pi[] = {3, 1, 2};
    ed_dinner* perm = nullptr;
    REQUIRE(ed_dinner_from_permutation(pi, 3, 'B', &perm) == ED_OK);
    CHECK(ed_dinner_size(perm) == 3);
    ed_dinner_free(perm);

    ed_dinner* random = nullptr;
    REQUIRE(ed_dinner_random_permutation(16, 7, 'B', &random) == ED_OK);
    CHECK(ed_dinner_size(random) == 16);
    ed_dinner_free(random);
    ed_dinner_free(nullptr);
}

TEST_CASE("error codes") {
    ed_dinner* d = nullptr;
    CHECK(ed_dinner_parse("{", &d) == ED_ERR_VALIDATION);
    CHECK(d == nullptr);
    CHECK(std::strlen(ed_last_error()) > 0);
    CHECK(ed_dinner_parse(R"({"morsels":[[1,2],[1,3]]})", &d) == ED_ERR_VALIDATION);
    CHECK(std::string(ed_last_error()).find("duplicate") != std::string::npos);
    CHECK(ed_dinner_parse(nullptr, &d) == ED_ERR_ARGUMENT);
    const int32_t bad[] = {1, 1};
    CHECK(ed_dinner_from_permutation(bad, 2, 'B', &d) == ED_ERR_VALIDATION);
    CHECK(ed_dinner_from_permutation(bad, 2, 'X', &d) == ED_ERR_ARGUMENT);
    CHECK(ed_dinner_random_permutation(0, 1, 'B', &d) == ED_ERR_VALIDATION);

    Dinner big(R"({"morsels":[[1,1],[2,2],[3,3],[4,4],[5,5],[6,6]]})");
    ed_limits l;
    ed_limits_default(&l);
    l.max_dp_n = 4;
    char* out = nullptr;
    int passed = 0;
    CHECK(ed_verify_spe_json(big.p, &l, &passed, &out) == ED_ERR_GUARD);
    CHECK(out == nullptr);
    CHECK(ed_catalan_json(9, &out) == ED_ERR_GUARD);

    Dinner empty(R"({"morsels":[]})");
    CHECK(ed_crossout_board_text(nullptr, 0, &out) == ED_ERR_ARGUMENT);
    REQUIRE(ed_crossout_board_text(empty.p, 0, &out) == ED_OK);
    ed_string_free(out);
}

TEST_CASE("crossout") {
    Dinner d(kEight);
    char* out = nullptr;
    REQUIRE(ed_crossout_json(d.p, 1, &out) == ED_OK);
    const json j = take(out);
    CHECK(j["scores"]["A"] == 23);
    CHECK(j["scores"]["B"] == 22);
    CHECK(j["strategy"] == 7);
    CHECK(j["sequence"] == json::parse("[0,4,1,5,2,3,6,7]"));
    CHECK(j["board"]["b_labels"] == json::parse("[[2,1],[4,2],[6,4],[8,7]]"));

    REQUIRE(ed_crossout_board_text(d.p, 0, &out) == ED_OK);
    CHECK(std::string(out).find('*') != std::string::npos);
    ed_string_free(out);

    Dinner empty(R"({"morsels":[]})");
    REQUIRE(ed_crossout_json(empty.p, 0, &out) == ED_OK);
    const json e = take(out);
    CHECK(e["scores"]["A"] == 0);
    CHECK(e["strategy"].is_null());
}

TEST_CASE("play, best response, verification") {
    Dinner d(kIntro);
    char* out = nullptr;
    REQUIRE(ed_play_json(d.p, "greedy", "crossout", nullptr, 'A', &out) == ED_OK);
    CHECK(take(out)["score_A"] == 4);
    REQUIRE(ed_play_json(d.p, "crossout", "crossout", "alternating", 'A', &out) == ED_OK);
    CHECK(take(out)["score_A"] == 5);
    CHECK(ed_play_json(d.p, "telepathic", "crossout", nullptr, 'A', &out) == ED_ERR_VALIDATION);
    CHECK(ed_play_json(d.p, "crossout", "crossout", "random", 'A', &out) == ED_ERR_VALIDATION);

    Dinner eight(kEight);
    REQUIRE(ed_play_json(eight.p, "greedy", "greedy", "thue-morse", 'A', &out) == ED_OK);
    const json tm = take(out);
    std::string order;
    for (const auto& mv : tm["moves"]) order += mv[1].get<std::string>();
    CHECK(order == "ABBABAAB");

    REQUIRE(ed_best_response(d.p, "crossout", 'A', nullptr, &out) == ED_OK);
    CHECK(std::string(out) == "5");
    ed_string_free(out);

    int passed = 0;
    REQUIRE(ed_verify_spe_json(eight.p, nullptr, &passed, &out) == ED_OK);
    CHECK(passed == 1);
    CHECK(take(out)["passed"] == true);
}

TEST_CASE("outcomes and Pareto") {
    Dinner d(kEight);
    char* out = nullptr;
    REQUIRE(ed_outcomes_json(d.p, 'A', nullptr, &out) == ED_OK);
    const json j = take(out);
    CHECK(j["all_points"] == 70);
    CHECK(j["crossout_is_best_vs_crossout"] == true);

    REQUIRE(ed_outcomes_csv(d.p, 0, nullptr, &out) == ED_OK);
    const std::string csv(out);
    ed_string_free(out);
    CHECK(csv.rfind("score_a,score_b,kind\n", 0) == 0);
    CHECK(csv.find("23,22,crossout") != std::string::npos);

    Dinner d1(R"({"morsels":[[1,5],[2,1],[3,2],[4,4],[5,6],[6,3]]})");
    REQUIRE(ed_pareto_json(d1.p, nullptr, nullptr, nullptr, &out) == ED_OK);
    const json p = take(out);
    CHECK(p["efficient"] == false);
    CHECK(p["best_improvements"]["B"] == 1);
}

TEST_CASE("analysis") {
    char* out = nullptr;
    REQUIRE(ed_catalan_json(3, &out) == ED_OK);
    const json c = take(out);
    CHECK(c["alice"] == 5);
    CHECK(c["bob"] == 14);

    const int32_t pi[] = {3, 1, 2};
    REQUIRE(ed_inversions_json(pi, 3, &out) == ED_OK);
    const json inv = take(out);
    CHECK(inv["left"] == json::parse("[[1,2],[1,3]]"));
    CHECK(inv["right"] == json::parse("[[3,1],[3,2]]"));

    REQUIRE(ed_monotonicity_json(4, &out) == ED_OK);
    CHECK(take(out)["holds"] == true);

    REQUIRE(ed_pareto_census_json(6, &out) == ED_OK);
    CHECK(take(out)["inefficient"] == 2);

    REQUIRE(ed_experiment_json(8, 50, 3, 2, nullptr, &out) == ED_OK);
    const json e = take(out);
    CHECK(e["samples"] == 50);
    CHECK(e["seed"] == 3);

    Dinner d(R"({"morsels":[[3,1],[-3,-1]]})");
    REQUIRE(ed_transform_json(d.p, "zero-sum", &out) == ED_OK);
    CHECK(take(out)["morsels"][0] == json::parse("[4,4]"));
    REQUIRE(ed_transform_json(d.p, "1,1,1,1", &out) == ED_OK);
    CHECK(take(out)["morsels"][0] == json::parse("[2,-2]"));
    CHECK(ed_transform_json(d.p, "1,2", &out) == ED_ERR_VALIDATION);
    CHECK(ed_transform_json(d.p, "1,x,1,1", &out) == ED_ERR_VALIDATION);
}

TEST_CASE("service round trip") {
    ed_service* s = nullptr;
    REQUIRE(ed_service_create(&s) == ED_OK);
    int status = 0;
    char* body = nullptr;
    const std::string create = std::string(R"({"human":"A","ai":"crossout","dinner":)") + kIntro + "}";
    REQUIRE(ed_service_handle(s, "POST", "/games", create.c_str(), &status, &body) == ED_OK);
    CHECK(status == 201);
    const std::string id = take(body)["id"];
    REQUIRE(ed_service_handle(s, "POST", ("/games/" + id + "/moves").c_str(), R"({"morsel_id":1})", &status, &body) ==
            ED_OK);
    CHECK(status == 200);
    ed_string_free(body);
    REQUIRE(ed_service_handle(s, "POST", ("/games/" + id + "/moves").c_str(), R"({"morsel_id":2})", &status, &body) ==
            ED_OK);
    CHECK(take(body)["scores"]["A"] == 5);
    REQUIRE(ed_service_handle(s, "DELETE", ("/games/" + id).c_str(), nullptr, &status, &body) == ED_OK);
    CHECK(status == 204);
    ed_string_free(body);
    ed_service_free(s);
}
