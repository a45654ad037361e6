#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "adversolve/rational.hpp"

namespace adversolve {

// Undirected tree on vertices 0..n-1.
struct Tree {
    int n = 0;
    std::vector<std::vector<int>> adj;

    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

// Marking game on a tree: A marks the root, then the players alternately mark
// an unmarked neighbor of the previously marked vertex; whoever cannot move
// loses. True iff the first player wins when starting at `root`.
bool path_game_rooted(const Tree& tree, int root);

// path_game_rooted for every start vertex in one O(n) rerooting pass.
// `operations`, when given, accumulates a machine-independent work count.
std::vector<bool> path_game_all_starts(const Tree& tree, std::size_t* operations = nullptr);

enum class GatherTarget { Even, Odd };
enum class EvenGatherMode { Dp, Fast, Pattern };

// Pile of n objects, take 1..k per move; the winner must gather an even (odd)
// number of objects. True iff the player to move can force their own total to
// the target parity. Dp is the O(N*K) table, Fast the O(N) last[] window,
// Pattern the O(1) closed forms.
bool even_gather(int n, int k, GatherTarget target, EvenGatherMode mode);

struct BoardGatherResult {
    Rational best_score;        // smax(1, n): best total for the first player
    Rational first_player_diff; // 2*smax - total
    Rational parity_guarantee;  // max(SumOdd, SumEven); a guarantee for even n
};

BoardGatherResult board_gather(const std::vector<Rational>& values);

// Full interval table smax(i, j), 0-indexed and valid for i <= j. Used for
// playing the extracted policy.
std::vector<std::vector<Rational>> board_gather_table(const std::vector<Rational>& values);

// First player's optimal pick on the interval [i, j] given the smax table:
// true = take the left end. Ties take the left end.
bool board_gather_pick_left(const std::vector<Rational>& values,
                            const std::vector<std::vector<Rational>>& smax, int i, int j);

// Both players alternately take one end; player 1 builds the lexicographically
// smallest final string, player 2 the largest.
std::string lex_game(const std::string& board);

enum class MultiRoundRule {
    WinnerStarts,  // case 1: the round winner opens the next round
    LoserStarts,   // case 2: the round loser opens the next round
};

struct MultiRoundConfig {
    int pile = 0;
    std::vector<int> moves1;  // S(1), must contain 1
    std::vector<int> moves2;  // S(2), must contain 1
    MultiRoundRule rule = MultiRoundRule::WinnerStarts;
};

struct MultiRoundResult {
    int first_player_total = 0;
    // Victory iff total > pile/2, Draw iff exactly half.
    enum class Verdict { Victory, Draw, Defeat } verdict = Verdict::Defeat;
};

MultiRoundResult multi_round_gather(const MultiRoundConfig& config);

// Treblecross board: positions 1..length, marks pairwise at distance >= 3.
struct TreblecrossBoard {
    int length = 0;
    std::set<int> marked;
};

// Lengths of the maximal runs of positions farther than 2 away from every
// mark. Throws when two marks sit within distance 2 (the mover could win at
// once, or the board is outright invalid).
std::vector<int> treblecross_decompose(const TreblecrossBoard& board);

// Grundy number of an open run of q unmarked positions; memoized process-wide.
int treblecross_grundy(int q);

// First player wins the parallel composition of (board, multiplicity) pairs.
bool parallel_treblecross(const std::vector<std::pair<TreblecrossBoard, int>>& instances);

}  // namespace adversolve
