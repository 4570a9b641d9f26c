// Strategies, turn orders and the score recurrence.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dinner.hpp"
#include "json_io.hpp"

namespace ethdinner {

/// A named deterministic map from nonempty dinners to one of their morsels.
class Strategy {
public:
    using Choice = std::function<MorselId(const Dinner&)>;

    Strategy(std::string name, Choice choice) : name_(std::move(name)), choice_(std::move(choice)) {}

    const std::string& name() const { return name_; }
    /// Throws StrategyViolation if the choice is not a morsel of `d`.
    MorselId choose(const Dinner& d) const;

private:
    std::string name_;
    Choice choice_;
};

Strategy crossout();
Strategy greedy(Player p);       // largest own utility
Strategy masochistic(Player p);  // smallest own utility
Strategy competitive();          // largest a + b, ties to smallest id
Strategy cooperative(Player p);  // largest u_p - u_other, ties to smallest id

/// Names: crossout, competitive, greedy(A|B), masochistic(A|B),
/// cooperative(A|B). The player may be omitted ("greedy") when `role` says
/// who will play the strategy. Throws UnknownStrategy.
Strategy builtin_strategy(std::string_view name, std::optional<Player> role = std::nullopt);

/// Sequence of movers, one per morsel.
class TurnOrder {
public:
    TurnOrder() = default;
    explicit TurnOrder(std::vector<Player> movers) : movers_(std::move(movers)) {}

    /// Strict alternation ending with `last`.
    static TurnOrder alternating(std::size_t n, Player last);
    static TurnOrder alternating(const Dinner& d) { return alternating(d.size(), d.last_mover()); }

    const std::vector<Player>& movers() const { return movers_; }
    std::size_t size() const { return movers_.size(); }
    Player operator[](std::size_t i) const { return movers_[i]; }
    std::size_t count(Player p) const;

    friend bool operator==(const TurnOrder&, const TurnOrder&) = default;

private:
    std::vector<Player> movers_;
};

/// Term k (0-based) is `first` iff the binary digit sum of k is even.
TurnOrder thue_morse_order(std::size_t n, Player first = Player::A);

struct Move {
    std::size_t turn;  // 1-based
    Player player;
    Morsel morsel;
    friend bool operator==(const Move&, const Move&) = default;
};

struct Transcript {
    std::vector<Move> moves;
    Rational score_A;
    Rational score_B;

    const Rational& score(Player p) const { return p == Player::A ? score_A : score_B; }
};

/// Applies the mover's strategy to the remaining dinner until it is empty,
/// crediting each mover with their own utility of the morsel eaten.
///
/// Without an explicit order, play strictly alternates ending with the
/// dinner's last mover. With a custom order, each remaining subdinner
/// handed to a strategy carries order's final player as its last mover.
/// Throws ValidationError if the order length differs from the dinner size.
Transcript play(const Dinner& d, const Strategy& alice, const Strategy& bob,
                const std::optional<TurnOrder>& order = std::nullopt);

/// {"moves":[[turn, "A"|"B", morsel_id]], "score_A": r, "score_B": r}
Json transcript_to_json(const Transcript& t);

}  // namespace ethdinner
