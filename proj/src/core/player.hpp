#pragma once

#include <optional>
#include <string_view>

namespace ethdinner {

enum class Player : unsigned char { A, B };

constexpr Player other(Player p) { return p == Player::A ? Player::B : Player::A; }

constexpr char to_char(Player p) { return p == Player::A ? 'A' : 'B'; }

constexpr int index_of(Player p) { return p == Player::A ? 0 : 1; }

inline std::optional<Player> parse_player(std::string_view s) {
    if (s == "A" || s == "a" || s == "alice" || s == "Alice") return Player::A;
    if (s == "B" || s == "b" || s == "bob" || s == "Bob") return Player::B;
    return std::nullopt;
}

}  // namespace ethdinner
