#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "adversolve/game_core.hpp"
#include "adversolve/state_graph.hpp"

namespace adversolve {

// Directed pursuit game: A cops and B robbers move on a digraph following a
// cyclic schedule; cops win when at least capture_threshold robbers are
// captured (a cop moving onto a robber's vertex), robbers win when at least
// escape_threshold of them reach one of their safe vertices.
struct PursuitConfig {
    int vertices = 0;
    std::vector<std::pair<int, int>> arcs;  // directed edges, loops allowed

    std::vector<int> cop_start;     // per cop, 0-based vertex
    std::vector<int> robber_start;  // per robber

    struct Turn {
        bool cop = true;
        int index = 0;  // 0-based agent index within its side
    };
    std::vector<Turn> schedule;

    int capture_threshold = 1;  // B'
    int escape_threshold = 1;   // B''
    std::vector<std::set<int>> safe;  // per robber, H(j)

    // A robber stepping onto a cop's vertex is not captured unless enabled
    // (capture happens when a cop moves, as written in the source rule).
    bool capture_on_robber_move = false;
    // A scheduled agent with no outgoing arc: the state becomes a Draw
    // terminal by default; strict mode scores it a Defeat for that side.
    bool strict_stuck = false;

    std::size_t state_cap = 10'000'000;
};

struct PursuitGraph {
    StateGraph graph;
    int start_state = 0;

    // Packing parameters, kept for locating alternative start states.
    int vertices = 0;
    int cops = 0;
    int robbers = 0;
    int slots = 0;

    // Robber status values inside a packed state.
    static constexpr int kCaptured = -1;
    static constexpr int kSafe = -2;

    // State id for the given cop vertices and robber statuses at a slot.
    int state_of(const std::vector<int>& cop_pos, const std::vector<int>& robber_status,
                 int slot) const;
};

// Explicit state graph over (cop positions, robber statuses, schedule slot).
PursuitGraph build_pursuit_graph(const PursuitConfig& config);

enum class PursuitOutcome { CopsWin, Draw, RobbersWin };

// Solves via the cyclic fixpoint with Draw at infinity and reports the
// initial state for the cops.
PursuitOutcome solve_pursuit(const PursuitConfig& config);

// Simple undirected graph for the one-cop-one-robber decision and the
// recognition routines.
struct UndirectedGraph {
    int n = 0;
    std::vector<std::set<int>> adj;

    static UndirectedGraph empty(int n);
    void add_edge(int u, int v);  // rejects loops and duplicates
    std::size_t edge_count() const;
};

enum class CopWinMode { Naive, Fast };

// Dominated-vertex elimination: true iff the graph dismantles to a single
// vertex. Naive rescans all pairs each round; Fast maintains NV/NVC counts
// (O(n^3) total). seed 0 removes the lowest dominated vertex each round; any
// other seed removes a pseudo-random dominated vertex (the answer must not
// depend on the order).
bool cop_win(const UndirectedGraph& graph, CopWinMode mode = CopWinMode::Fast,
             std::uint64_t seed = 0);

// Reference decision through the generic pursuit engine under the classical
// rules: both players may stay (loops added), the cop picks the best start,
// the robber answers with the worst, then they alternate cop-first. True iff
// the cops force a capture.
bool cop_win_by_state_search(const UndirectedGraph& graph);

// Every vertex of degree > 1 has at most 2 neighbours of degree > 1. Throws
// if the input is not a tree.
bool is_caterpillar(const UndirectedGraph& graph);

// Every connected component is a tree whose unmarked vertices (after marking
// leaves, then leaf-neighbours) have at most 2 unmarked neighbours.
bool is_extended_caterpillar(const UndirectedGraph& graph);

}  // namespace adversolve
