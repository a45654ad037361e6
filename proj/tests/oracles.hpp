#pragma once

// Brute-force reference implementations and random instance generators used
// by unit and acceptance tests. Everything here is deliberately independent
// of the solver paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "adversolve/allocation.hpp"
#include "adversolve/coin_search.hpp"
#include "adversolve/game_core.hpp"
#include "adversolve/hotter_colder.hpp"
#include "adversolve/state_graph.hpp"

namespace oracles {

// Plain recursive minimax over an acyclic StateGraph (memoized DFS, no
// topological sort).
adversolve::Outcome minimax_outcome(const adversolve::StateGraph& g, int state);

// Recursive best score difference over an acyclic ScoredStateGraph.
adversolve::Rational minimax_score(const adversolve::ScoredStateGraph& g, int state);

// Random DAG whose edges always point from lower to higher ids; every sink is
// labelled Defeat (last move wins).
adversolve::StateGraph random_impartial_dag(std::mt19937& rng, int max_states,
                                            double edge_prob);

// Random DAG with explicit movers and randomly labelled sinks.
adversolve::StateGraph random_mover_dag(std::mt19937& rng, int max_states, double edge_prob);

// Random digraph that may contain cycles; sinks get random labels.
adversolve::StateGraph random_cyclic_graph(std::mt19937& rng, int max_states,
                                           double edge_prob, bool impartial);

// Random labelled tree on [0, n); edges as (u, v) pairs.
std::vector<std::pair<int, int>> random_tree_edges(std::mt19937& rng, int n);

// Full-state minimax for the even/odd gathering game: player 1 wins iff their
// own final count has parity `target` (0 even, 1 odd), the opponent playing
// to prevent it. Tracks both players' gathered parities explicitly.
bool even_gather_minimax(int n, int k, int target);

// Explicit treblecross move graph over all 2^length mark sets: a state with
// three consecutive marks is terminal (Defeat for the player to move), any
// other state offers every unmarked position. Returns the graph; the state id
// of a board is its mark bitmask (position p -> bit p-1).
adversolve::StateGraph treblecross_move_graph(int length);

// Combined terminal rule for products of such graphs: the whole game ends
// (mover loses) as soon as any coordinate reaches a labelled terminal, or
// when no coordinate has a move left. The referenced graphs must outlive the
// returned options.
adversolve::ProductOptions any_coordinate_terminal_rule(
    const std::vector<const adversolve::StateGraph*>& games);

// Worst case over every secret and every tie decision of the answered
// questions the table's policy needs; candidate sets tracked elementwise,
// independent of the solver's interval algebra.
int hc_exhaustive_worst(adversolve::HcTable& table);

// Best guaranteed uncertainty decrement over all template weighings.
int coin_phase1_brute_best(const adversolve::CoinState& state);
int coin_phase2_brute_best(const adversolve::CoinState& state);

// Minimum-cost-flow value for a tree reallocation instance with integer
// costs (successive shortest paths; tiny instances only).
long long realloc_min_cost_flow(const adversolve::TreeReallocInstance& instance);

}  // namespace oracles
