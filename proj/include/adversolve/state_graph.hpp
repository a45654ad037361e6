#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adversolve/rational.hpp"

namespace adversolve {

// Result of a game from the perspective of the player whose turn it is at the
// labelled state.
enum class Outcome : std::uint8_t { Victory, Draw, Defeat };

inline Outcome flip(Outcome o) {
    if (o == Outcome::Victory) return Outcome::Defeat;
    if (o == Outcome::Defeat) return Outcome::Victory;
    return Outcome::Draw;
}

// Defeat < Draw < Victory in the mover's preference order.
inline int outcome_rank(Outcome o) {
    if (o == Outcome::Defeat) return 0;
    if (o == Outcome::Draw) return 1;
    return 2;
}

inline char outcome_letter(Outcome o) {
    if (o == Outcome::Victory) return 'W';
    if (o == Outcome::Draw) return 'D';
    return 'L';
}

// Explicit two-player game graph. States are dense ids 0..n-1. Either every
// state carries a mover tag in {1,2}, or the graph is impartial with
// alternating moves and the mover vector stays empty (the player index is
// dropped from states entirely).
struct StateGraph {
    int n = 0;
    std::vector<int> mover;                         // empty iff impartial-alternating
    std::vector<std::vector<int>> next;             // successor state ids
    std::vector<std::optional<Outcome>> terminal;   // mover-relative labels

    static StateGraph impartial(int n);
    static StateGraph with_movers(std::vector<int> movers);

    bool impartial_alternating() const { return mover.empty(); }
    // 0 stands for "either player" in impartial-alternating graphs.
    int mover_of(int s) const { return mover.empty() ? 0 : mover[s]; }

    void add_edge(int from, int to);
    void set_terminal(int s, Outcome o);
    std::size_t edge_count() const;

    // True when the two states' movers differ, i.e. the child value must be
    // flipped when folded into the parent.
    bool movers_differ(int from, int to) const {
        return impartial_alternating() || mover[from] != mover[to];
    }
};

struct ScoredEdge {
    int to = 0;
    Rational mover_gain;     // score gained by the player making the move
    Rational opponent_gain;  // score gained by the other player
};

// As StateGraph, but edges carry score deltas and terminal states carry the
// final score difference for the player to move there.
struct ScoredStateGraph {
    int n = 0;
    std::vector<int> mover;  // same convention as StateGraph
    std::vector<std::vector<ScoredEdge>> next;
    std::vector<std::optional<Rational>> terminal_value;

    static ScoredStateGraph impartial(int n);
    static ScoredStateGraph with_movers(std::vector<int> movers);

    bool impartial_alternating() const { return mover.empty(); }
    int mover_of(int s) const { return mover.empty() ? 0 : mover[s]; }

    void add_edge(int from, int to, Rational mover_gain, Rational opponent_gain);
    void set_terminal(int s, Rational max_dif);

    bool movers_differ(int from, int to) const {
        return impartial_alternating() || mover[from] != mover[to];
    }
};

// Topological order of a dag given as adjacency lists; throws
// std::runtime_error("graph not acyclic") when a cycle exists.
std::vector<int> topological_order(const std::vector<std::vector<int>>& next);

}  // namespace adversolve
