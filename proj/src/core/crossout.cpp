#include "crossout.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ethdinner {
namespace {

std::vector<std::size_t> sorted_positions(const Dinner& d, Player p) {
    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return d[x].utility(p) < d[y].utility(p); });
    return order;
}

std::vector<std::size_t> order_sorted(const Dinner& d) {
    const std::size_t n = d.size();
    const auto by_a = sorted_positions(d, Player::A);
    const auto by_b = sorted_positions(d, Player::B);
    std::vector<char> removed(n, 0);
    std::size_t next_a = 0;
    std::size_t next_b = 0;
    std::vector<std::size_t> seq;
    seq.reserve(n);
    Player crossing = other(d.last_mover());
    for (std::size_t step = 0; step < n; ++step) {
        const auto& order = crossing == Player::A ? by_a : by_b;
        std::size_t& cursor = crossing == Player::A ? next_a : next_b;
        while (removed[order[cursor]]) ++cursor;
        std::size_t pos = order[cursor++];
        removed[pos] = 1;
        seq.push_back(pos);
        crossing = other(crossing);
    }
    return seq;
}

std::vector<std::size_t> order_naive(const Dinner& d) {
    std::vector<std::size_t> remaining(d.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    std::vector<std::size_t> seq;
    seq.reserve(d.size());
    Player crossing = other(d.last_mover());
    while (!remaining.empty()) {
        auto least = std::min_element(remaining.begin(), remaining.end(), [&](std::size_t x, std::size_t y) {
            return d[x].utility(crossing) < d[y].utility(crossing);
        });
        seq.push_back(*least);
        remaining.erase(least);
        crossing = other(crossing);
    }
    return seq;
}

}  // namespace

std::vector<std::size_t> crossout_order(const Dinner& d, CrossoutMethod method) {
    if (d.empty()) throw EmptyDinner("crossout sequence");
    return method == CrossoutMethod::sorted ? order_sorted(d) : order_naive(d);
}

std::vector<Morsel> crossout_sequence(const Dinner& d, CrossoutMethod method) {
    auto order = crossout_order(d, method);
    std::vector<Morsel> seq;
    seq.reserve(order.size());
    for (auto pos : order) seq.push_back(d[pos]);
    return seq;
}

const Morsel& crossout_strategy(const Dinner& d) {
    if (d.empty()) throw EmptyDinner("crossout strategy");
    return d[crossout_order(d).back()];
}

CrossoutBoard crossout_board(const Dinner& d) {
    if (d.empty()) throw EmptyDinner("crossout board");
    const auto order = crossout_order(d);
    const std::size_t n = order.size();
    CrossoutBoard board;
    board.last_mover = d.last_mover();
    board.sequence.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Morsel& m = d[order[i]];
        board.sequence.push_back(m.id);
        std::size_t label = i + 1;
        Player axis = board.axis_of(label);
        (axis == Player::A ? board.a_labels : board.b_labels).push_back(AxisLabel{label, m.utility(axis)});
    }
    for (std::size_t turn = 1; turn <= n; ++turn) {
        const Morsel& m = d[order[n - turn]];
        Player mover = d.mover_with(n - turn + 1);
        (mover == Player::A ? board.a_play : board.b_play).push_back(PlayLabel{turn, m.utility(mover)});
    }
    return board;
}

CrossoutScores crossout_scores(const Dinner& d) {
    if (d.empty()) return {};
    const auto board = crossout_board(d);
    CrossoutScores scores{d.total(Player::A), d.total(Player::B)};
    for (const auto& l : board.a_labels) scores.chi_A -= l.position;
    for (const auto& l : board.b_labels) scores.chi_B -= l.position;
    return scores;
}

namespace {

std::vector<Rational> label_positions(const CrossoutBoard& board, std::size_t n) {
    std::vector<Rational> pos(n + 1);
    for (const auto& l : board.a_labels) pos[l.label] = l.position;
    for (const auto& l : board.b_labels) pos[l.label] = l.position;
    return pos;
}

}  // namespace

bool labels_move_outward(const Dinner& d, const Dinner& sub) {
    if (sub.empty()) return true;
    if (sub.last_mover() != d.last_mover())
        throw ValidationError("subdinner must keep the dinner's last mover");
    const auto outer = label_positions(crossout_board(d), d.size());
    const auto inner = label_positions(crossout_board(sub), sub.size());
    for (std::size_t k = 1; k <= sub.size(); ++k)
        if (inner[k] < outer[k]) return false;
    return true;
}

bool removal_never_helps_first_mover(const Dinner& d) {
    if (d.empty()) return true;
    const Player p = d.first_mover();
    const Rational chi = crossout_scores(d).of(p);
    for (const auto& m : d.morsels())
        if (m.utility(p) + crossout_scores(d.without(m.id)).of(p) > chi) return false;
    return true;
}

Json board_to_json(const CrossoutBoard& board) {
    Json seq = Json::array();
    for (auto id : board.sequence) seq.push_back(id);
    auto labels = [](const std::vector<AxisLabel>& ls) {
        Json out = Json::array();
        for (const auto& l : ls) out.push_back(Json::array({l.label, rational_to_json(l.position)}));
        return out;
    };
    auto plays = [](const std::vector<PlayLabel>& ls) {
        Json out = Json::array();
        for (const auto& l : ls) out.push_back(Json::array({l.turn, rational_to_json(l.position)}));
        return out;
    };
    return Json{{"sequence", seq},
                {"a_labels", labels(board.a_labels)},
                {"b_labels", labels(board.b_labels)},
                {"play_labels", Json{{"A", plays(board.a_play)}, {"B", plays(board.b_play)}}}};
}

std::string render_board(const Dinner& d, bool play_labels) {
    if (d.empty()) return "(empty dinner)\n";
    const auto board = crossout_board(d);
    const std::size_t n = d.size();
    const auto by_a = sorted_positions(d, Player::A);
    const auto by_b = sorted_positions(d, Player::B);

    // Text written at each rank of each axis.
    std::vector<std::string> a_text(n, "-");
    std::vector<std::string> b_text(n, "-");
    auto rank_of = [&](const std::vector<std::size_t>& order, Player p, const Rational& v) {
        for (std::size_t r = 0; r < order.size(); ++r)
            if (d[order[r]].utility(p) == v) return r;
        return order.size();
    };
    for (const auto& l : board.a_labels) a_text[rank_of(by_a, Player::A, l.position)] = std::to_string(l.label);
    for (const auto& l : board.b_labels) b_text[rank_of(by_b, Player::B, l.position)] = std::to_string(l.label);
    if (play_labels) {
        for (const auto& l : board.a_play) a_text[rank_of(by_a, Player::A, l.position)] = "A" + std::to_string(l.turn);
        for (const auto& l : board.b_play) b_text[rank_of(by_b, Player::B, l.position)] = "B" + std::to_string(l.turn);
    }

    std::size_t width = 1;
    for (const auto& t : a_text) width = std::max(width, t.size());
    std::size_t margin = 1;
    for (const auto& t : b_text) margin = std::max(margin, t.size());

    std::ostringstream out;
    auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    for (std::size_t row = n; row-- > 0;) {
        std::size_t morsel_pos = by_b[row];
        out << pad_left(b_text[row], margin) << " |";
        for (std::size_t col = 0; col < n; ++col)
            out << ' ' << pad_left(by_a[col] == morsel_pos ? "*" : ".", width);
        out << '\n';
    }
    out << std::string(margin, ' ') << " +" << std::string(n * (width + 1), '-') << '\n';
    out << std::string(margin, ' ') << "  ";
    for (std::size_t col = 0; col < n; ++col) out << ' ' << pad_left(a_text[col], width);
    out << '\n';
    return out.str();
}

}  // namespace ethdinner
