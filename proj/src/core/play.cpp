#include "play.hpp"

#include <bit>

#include "crossout.hpp"

namespace ethdinner {
namespace {

template <typename Better>
MorselId pick(const Dinner& d, Better better) {
    if (d.empty()) throw EmptyDinner("strategy");
    const Morsel* best = &d[0];
    for (const auto& m : d.morsels())
        if (better(m, *best) || (!better(*best, m) && m.id < best->id)) best = &m;
    return best->id;
}

}  // namespace

MorselId Strategy::choose(const Dinner& d) const {
    if (d.empty()) throw EmptyDinner("strategy " + name_);
    MorselId id = choice_(d);
    if (!d.contains(id))
        throw StrategyViolation("strategy " + name_ + " chose morsel " + std::to_string(id) +
                                ", which is not in the remaining dinner");
    return id;
}

Strategy crossout() {
    return Strategy("crossout", [](const Dinner& d) { return crossout_strategy(d).id; });
}

Strategy greedy(Player p) {
    return Strategy(std::string("greedy(") + to_char(p) + ")", [p](const Dinner& d) {
        return pick(d, [p](const Morsel& x, const Morsel& y) { return x.utility(p) > y.utility(p); });
    });
}

Strategy masochistic(Player p) {
    return Strategy(std::string("masochistic(") + to_char(p) + ")", [p](const Dinner& d) {
        return pick(d, [p](const Morsel& x, const Morsel& y) { return x.utility(p) < y.utility(p); });
    });
}

Strategy competitive() {
    return Strategy("competitive", [](const Dinner& d) {
        return pick(d, [](const Morsel& x, const Morsel& y) { return x.a + x.b > y.a + y.b; });
    });
}

Strategy cooperative(Player p) {
    return Strategy(std::string("cooperative(") + to_char(p) + ")", [p](const Dinner& d) {
        Player q = other(p);
        return pick(d, [p, q](const Morsel& x, const Morsel& y) {
            return x.utility(p) - x.utility(q) > y.utility(p) - y.utility(q);
        });
    });
}

Strategy builtin_strategy(std::string_view name, std::optional<Player> role) {
    std::string_view base = name;
    std::optional<Player> who = role;
    if (auto open = name.find('('); open != std::string_view::npos) {
        if (name.back() != ')') throw UnknownStrategy("unknown strategy '" + std::string(name) + "'");
        base = name.substr(0, open);
        who = parse_player(name.substr(open + 1, name.size() - open - 2));
        if (!who) throw UnknownStrategy("unknown player in strategy '" + std::string(name) + "'");
    }
    if (base == "crossout") return crossout();
    if (base == "competitive") return competitive();
    if (base == "greedy" || base == "masochistic" || base == "cooperative") {
        if (!who) throw UnknownStrategy("strategy '" + std::string(name) + "' needs a player, e.g. greedy(A)");
        if (base == "greedy") return greedy(*who);
        if (base == "masochistic") return masochistic(*who);
        return cooperative(*who);
    }
    throw UnknownStrategy("unknown strategy '" + std::string(name) + "'");
}

TurnOrder TurnOrder::alternating(std::size_t n, Player last) {
    std::vector<Player> movers(n);
    for (std::size_t i = 0; i < n; ++i) movers[i] = (n - i) % 2 == 1 ? last : other(last);
    return TurnOrder(std::move(movers));
}

std::size_t TurnOrder::count(Player p) const {
    std::size_t c = 0;
    for (auto m : movers_) c += m == p ? 1 : 0;
    return c;
}

TurnOrder thue_morse_order(std::size_t n, Player first) {
    std::vector<Player> movers(n);
    for (std::size_t k = 0; k < n; ++k) movers[k] = std::popcount(k) % 2 == 0 ? first : other(first);
    return TurnOrder(std::move(movers));
}

Transcript play(const Dinner& d, const Strategy& alice, const Strategy& bob, const std::optional<TurnOrder>& order) {
    const TurnOrder turns = order ? *order : TurnOrder::alternating(d);
    if (turns.size() != d.size())
        throw ValidationError("turn order has " + std::to_string(turns.size()) + " entries for a dinner of " +
                              std::to_string(d.size()));
    Dinner remaining = d;
    if (order && !turns.movers().empty()) remaining = remaining.with_last_mover(turns.movers().back());
    Transcript t;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        Player mover = turns[i];
        MorselId id = (mover == Player::A ? alice : bob).choose(remaining);
        const Morsel m = remaining.by_id(id);
        t.moves.push_back(Move{i + 1, mover, m});
        (mover == Player::A ? t.score_A : t.score_B) += m.utility(mover);
        remaining = remaining.without(id);
    }
    return t;
}

Json transcript_to_json(const Transcript& t) {
    Json moves = Json::array();
    for (const auto& m : t.moves) moves.push_back(Json::array({m.turn, std::string(1, to_char(m.player)), m.morsel.id}));
    return Json{{"moves", moves}, {"score_A", rational_to_json(t.score_A)}, {"score_B", rational_to_json(t.score_B)}};
}

}  // namespace ethdinner
