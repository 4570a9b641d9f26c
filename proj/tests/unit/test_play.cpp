#include <doctest.h>

#include <functional>

#include "core/crossout.hpp"
#include "core/play.hpp"
#include "support.hpp"

using namespace ethdinner;
using testing::make;

namespace {

// Direct evaluation of the score recurrence: nothing on an empty dinner,
// otherwise the mover's utility of the chosen morsel plus the value of the rest.
std::pair<Rational, Rational> recurrence(const Dinner& d, const Strategy& s_A, const Strategy& s_B) {
    if (d.empty()) return {Rational(0), Rational(0)};
    const Player mover = d.mover_with(d.size());
    const MorselId id = (mover == Player::A ? s_A : s_B).choose(d);
    auto [a, b] = recurrence(d.without(id), s_A, s_B);
    (mover == Player::A ? a : b) += d.by_id(id).utility(mover);
    return {a, b};
}

std::string letters(const TurnOrder& t) {
    std::string s;
    for (Player p : t.movers()) s += to_char(p);
    return s;
}

}  // namespace

TEST_CASE("built-in strategies on the intro dinner") {
    const Dinner d = make({{1, 2}, {2, 3}, {3, 1}}, Player::A);
    CHECK(greedy(Player::A).choose(d) == 2);
    CHECK(masochistic(Player::A).choose(d) == 0);
    CHECK(competitive().choose(d) == 1);
    CHECK(greedy(Player::B).choose(d) == 1);
    CHECK(cooperative(Player::A).choose(d) == 2);
    CHECK(crossout().choose(d) == 1);
    CHECK(builtin_strategy("greedy(A)").choose(d) == 2);
    CHECK(builtin_strategy("greedy", Player::B).choose(d) == 1);
    CHECK(builtin_strategy("masochistic(b)").choose(d) == 2);
    CHECK_THROWS_AS(builtin_strategy("greedy"), UnknownStrategy);
    CHECK_THROWS_AS(builtin_strategy("random"), UnknownStrategy);
    CHECK_THROWS_AS(builtin_strategy("greedy(C)"), UnknownStrategy);
    CHECK(builtin_strategy("crossout").name() == "crossout");
}

TEST_CASE("ties in sums go to the smallest id") {
    const Dinner d = make({{1, 4}, {2, 3}, {4, 1}});
    CHECK(competitive().choose(d) == 0);
}

TEST_CASE("intro game") {
    const Dinner d = make({{1, 2}, {2, 3}, {3, 1}}, Player::A);
    const auto cc = play(d, crossout(), crossout());
    CHECK(cc.score_A == Rational(5));
    const auto gc = play(d, greedy(Player::A), crossout());
    CHECK(gc.moves[0].morsel.id == 2);
    CHECK(gc.moves[1].morsel.id == 1);
    CHECK(gc.score_A == Rational(4));
}

TEST_CASE("six-morsel dinner from the efficiency discussion") {
    const Dinner d1 = testing::fixture("d1.json");
    const auto gg = play(d1, greedy(Player::A), greedy(Player::B));
    CHECK(gg.score_A == Rational(6 + 4 + 3));
    CHECK(gg.score_B == Rational(6 + 5 + 1));
    const auto cc = play(d1, crossout(), crossout());
    CHECK(cc.score_A == Rational(13));
    CHECK(cc.score_B == Rational(11));
}

TEST_CASE("empty dinner scores nothing") {
    const auto t = play(Dinner{}, crossout(), crossout());
    CHECK(t.moves.empty());
    CHECK(t.score_A == Rational(0));
    CHECK(t.score_B == Rational(0));
}

TEST_CASE("transcripts satisfy the score recurrence") {
    const std::vector<std::string> names{"crossout", "greedy", "masochistic", "competitive", "cooperative"};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Dinner d = random_rational_dinner(1 + seed % 10, seed, seed % 2 ? Player::A : Player::B);
        const Strategy s_A = builtin_strategy(names[seed % names.size()], Player::A);
        const Strategy s_B = builtin_strategy(names[(seed / 5) % names.size()], Player::B);
        const auto t = play(d, s_A, s_B);
        const auto [a, b] = recurrence(d, s_A, s_B);
        CHECK(t.score_A == a);
        CHECK(t.score_B == b);
        CHECK(t.moves.size() == d.size());
        std::vector<MorselId> eaten;
        for (const auto& mv : t.moves) eaten.push_back(mv.morsel.id);
        std::sort(eaten.begin(), eaten.end());
        CHECK(std::adjacent_find(eaten.begin(), eaten.end()) == eaten.end());
    }
}

TEST_CASE("strategies must pick from the dinner") {
    const Strategy rogue("rogue", [](const Dinner&) { return MorselId{99}; });
    CHECK_THROWS_AS(play(make({{1, 2}, {2, 1}}), rogue, rogue), StrategyViolation);
    CHECK_THROWS_AS(crossout().choose(Dinner{}), EmptyDinner);
}

TEST_CASE("Thue-Morse order") {
    CHECK(letters(thue_morse_order(8, Player::A)) == "ABBABAAB");
    CHECK(letters(thue_morse_order(16, Player::A)) == "ABBABAABBAABABBA");
    CHECK(letters(thue_morse_order(1, Player::B)) == "B");
    CHECK(thue_morse_order(0).size() == 0);
    SUBCASE("fixed under A -> AB, B -> BA") {
        for (std::size_t n = 1; n <= 64; ++n) {
            std::string doubled;
            for (char c : letters(thue_morse_order(n))) doubled += c == 'A' ? "AB" : "BA";
            CHECK(doubled == letters(thue_morse_order(2 * n)));
        }
    }
}

TEST_CASE("custom turn orders") {
    const Dinner d = testing::fixture("eight.json");
    const auto order = thue_morse_order(d.size(), Player::A);
    const auto t = play(d, greedy(Player::A), greedy(Player::B), order);
    for (std::size_t i = 0; i < t.moves.size(); ++i) CHECK(t.moves[i].player == order[i]);
    std::size_t alice_moves = 0;
    for (const auto& mv : t.moves) alice_moves += mv.player == Player::A;
    CHECK(alice_moves == order.count(Player::A));
    CHECK(t.moves[0].morsel.a == Rational(8));  // greedy Alice opens with her favourite
    CHECK(TurnOrder::alternating(d) == TurnOrder::alternating(8, Player::B));
    CHECK(letters(TurnOrder::alternating(3, Player::A)) == "ABA");
    CHECK_THROWS_AS(play(d, crossout(), crossout(), thue_morse_order(7)), ValidationError);
}

TEST_CASE("transcript JSON") {
    const Dinner d = make({{1, 2}, {2, 3}, {3, 1}}, Player::A);
    const Json j = transcript_to_json(play(d, crossout(), crossout()));
    CHECK(j["moves"] == Json::parse(R"([[1,"A",1],[2,"B",0],[3,"A",2]])"));
    CHECK(j["score_A"] == 5);
    CHECK(j["score_B"] == 2);
}
