// The crossout sequence, strategy, board and scores.
//
// Crossing out alternates between the two players' least favourite
// remaining morsels, starting with the player who does not move last. When
// both players follow the crossout strategy, morsels are eaten in exactly
// the reverse of that order.

#pragma once

#include <string>
#include <vector>

#include "dinner.hpp"
#include "json_io.hpp"

namespace ethdinner {

enum class CrossoutMethod {
    sorted,  // two presorted orders + deletion flags, O(n log n)
    naive,   // rescan remaining morsels at each step, O(n^2); test oracle
};

/// Positions (indices into d.morsels()) in crossout order. Throws EmptyDinner.
std::vector<std::size_t> crossout_order(const Dinner& d, CrossoutMethod method = CrossoutMethod::sorted);

std::vector<Morsel> crossout_sequence(const Dinner& d, CrossoutMethod method = CrossoutMethod::sorted);

/// The morsel the crossout strategy eats: the last one crossed out.
const Morsel& crossout_strategy(const Dinner& d);

struct CrossoutScores {
    Rational chi_A;
    Rational chi_B;

    const Rational& of(Player p) const { return p == Player::A ? chi_A : chi_B; }
    friend bool operator==(const CrossoutScores&, const CrossoutScores&) = default;
};

struct AxisLabel {
    std::size_t label;  // 1-based crossout index
    Rational position;
    friend bool operator==(const AxisLabel&, const AxisLabel&) = default;
};

struct PlayLabel {
    std::size_t turn;  // 1-based turn on which the morsel is eaten
    Rational position;
    friend bool operator==(const PlayLabel&, const PlayLabel&) = default;
};

struct CrossoutBoard {
    Player last_mover = Player::B;
    std::vector<MorselId> sequence;
    std::vector<AxisLabel> a_labels;  // labels written under the a-axis
    std::vector<AxisLabel> b_labels;  // labels written left of the b-axis
    std::vector<PlayLabel> a_play;    // A_i: a-coordinate Alice eats on turn i
    std::vector<PlayLabel> b_play;    // B_j: b-coordinate Bob eats on turn j

    /// Axis (player) on which crossout label `label` sits.
    Player axis_of(std::size_t label) const { return label % 2 == 1 ? other(last_mover) : last_mover; }
    const std::vector<AxisLabel>& labels_on(Player p) const { return p == Player::A ? a_labels : b_labels; }
};

/// Throws EmptyDinner.
CrossoutBoard crossout_board(const Dinner& d);

/// Sum of the unlabeled positions on each axis; (0, 0) for an empty dinner.
CrossoutScores crossout_scores(const Dinner& d);

/// For k = 1..|sub|, label k on sub's board sits at a position at least as
/// large as label k on d's board. sub must be a subdinner of d with the same
/// last mover.
bool labels_move_outward(const Dinner& d, const Dinner& sub);

/// For every morsel m and P the first mover of d:
/// u_P(m) + chi_P(d - m) <= chi_P(d).
bool removal_never_helps_first_mover(const Dinner& d);

/// {"sequence":[ids], "a_labels":[[label, a]], "b_labels":[[label, b]],
///  "play_labels":{"A":[[turn, a]], "B":[[turn, b]]}}
Json board_to_json(const CrossoutBoard& board);

/// Text picture of the board in the style of a plotted crossout board:
/// one column per a-value and one row per b-value (ranked, not to scale),
/// '*' at each morsel, crossout labels under the a-axis and left of the
/// b-axis, '-' at unlabeled positions. With `play_labels` the dashes are
/// replaced by the A_i / B_j turn labels.
std::string render_board(const Dinner& d, bool play_labels = false);

}  // namespace ethdinner
