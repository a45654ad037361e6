#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "adversolve/state_graph.hpp"

namespace adversolve {

struct OutcomeSolution {
    std::vector<Outcome> result;  // mover-relative, per state
    // Lowest-id successor realizing the state's value; -1 at terminals/sinks.
    std::vector<int> best_move;
};

// Retrograde analysis over an acyclic graph: a state is a Victory when some
// move reaches the opponent's Defeat (or the same mover's Victory if the
// mover moves again), else a Draw when some move reaches a Draw, else a
// Defeat. Runs in O(V+E). Throws on cycles and on unlabelled sinks.
OutcomeSolution solve_outcomes(const StateGraph& g);

struct ScoreSolution {
    std::vector<Rational> max_dif;  // best score difference for the mover
    std::vector<int> best_move;
};

// Score-difference maximization over an acyclic scored graph. The child's
// value is negated exactly when the child's mover differs from the current
// mover; exact rational arithmetic throughout.
ScoreSolution solve_scores(const ScoredStateGraph& g);

struct ProductOptions {
    std::size_t state_cap = 10'000'000;
    // Combined terminal rule over tuple coordinates; returning a label makes
    // the tuple state terminal with no outgoing moves. When unset, the
    // last-move-wins default applies: a tuple with no move in any coordinate
    // is a Defeat for the player to move.
    std::function<std::optional<Outcome>(std::span<const int>)> terminal_rule;
};

struct ProductGraph {
    StateGraph graph;
    std::vector<int> sizes;    // per-game state counts
    std::vector<int> strides;  // mixed-radix strides

    int tuple_id(std::span<const int> coords) const;
    std::vector<int> coords_of(int id) const;
};

// Combined graph of K parallel games over tuple states; each edge replaces
// exactly one coordinate by one of its per-game moves. Inputs must all be
// impartial-alternating (the parallel-game construction drops the player
// index from states). Throws "state explosion" when the product exceeds the
// configured cap.
ProductGraph product_graph(const std::vector<StateGraph>& games,
                           const ProductOptions& options = {});

struct TimeExpandedGraph {
    StateGraph graph;  // (tmax+1) layers of the base graph
    int base_states = 0;
    int tmax = 0;

    int id(int state, int layer) const { return layer * base_states + state; }
};

// Horizon-bounded expansion: every base edge (s -> s') is copied as
// (s, t) -> (s', t+1) for t < tmax; non-terminal layer-tmax states take the
// horizon label, terminal states keep their own label at every layer. The
// result is acyclic by construction.
TimeExpandedGraph time_expand(const StateGraph& g, int tmax,
                              const std::vector<std::optional<Outcome>>& horizon);

// Outcome assigned to "the game never ends", per player.
struct InfiniteOutcome {
    Outcome for_player1 = Outcome::Draw;
    Outcome for_player2 = Outcome::Draw;

    static InfiniteOutcome uniform(Outcome o) { return {o, o}; }
    Outcome for_mover(int mover) const { return mover == 2 ? for_player2 : for_player1; }
};

// Two-stage iterative fixpoint for graphs that may contain cycles: stage one
// propagates definite values until stable, stage two lets movers who lose at
// infinity settle for reachable Draws, and every state still undecided gets
// the infinite-game outcome. O(V*(V+E)) worst case.
OutcomeSolution solve_cyclic(const StateGraph& g, const InfiniteOutcome& infinite);

// Sprague-Grundy numbers of an acyclic impartial-alternating last-move-wins
// graph: 0 at sinks, mex of successor values elsewhere. Terminal labels other
// than Defeat are rejected (they would contradict last-move-wins).
std::vector<int> grundy_numbers(const StateGraph& g);

// Grundy value of a parallel composition given (grundy, multiplicity) pairs:
// xor of the values whose multiplicity is odd. The first player wins iff the
// result is nonzero.
int combined_grundy(std::span<const std::pair<int, int>> components);

// Minimum excluded nonnegative integer.
int mex(std::vector<int> values);

}  // namespace adversolve
