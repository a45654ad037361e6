#include "adversolve/game_core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace adversolve {

namespace {

// Child value folded into the parent: flipped when the movers differ.
Outcome contribution(const StateGraph& g, int from, int to, Outcome child) {
    return g.movers_differ(from, to) ? flip(child) : child;
}

}  // namespace

OutcomeSolution solve_outcomes(const StateGraph& g) {
    std::vector<int> order = topological_order(g.next);
    OutcomeSolution sol;
    sol.result.assign(g.n, Outcome::Defeat);
    sol.best_move.assign(g.n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int s = *it;
        if (g.terminal[s].has_value()) {
            if (!g.next[s].empty()) {
                throw std::runtime_error("terminal state " + std::to_string(s) +
                                         " has outgoing moves");
            }
            sol.result[s] = *g.terminal[s];
            continue;
        }
        if (g.next[s].empty()) {
            throw std::runtime_error("missing terminal label at state " + std::to_string(s));
        }
        int best_rank = -1;
        int best_succ = -1;
        for (int t : g.next[s]) {
            int rank = outcome_rank(contribution(g, s, t, sol.result[t]));
            if (rank > best_rank || (rank == best_rank && t < best_succ)) {
                best_rank = rank;
                best_succ = t;
            }
        }
        sol.result[s] = best_rank == 2   ? Outcome::Victory
                        : best_rank == 1 ? Outcome::Draw
                                         : Outcome::Defeat;
        sol.best_move[s] = best_succ;
    }
    return sol;
}

ScoreSolution solve_scores(const ScoredStateGraph& g) {
    std::vector<std::vector<int>> plain(g.n);
    for (int s = 0; s < g.n; ++s) {
        for (const ScoredEdge& e : g.next[s]) plain[s].push_back(e.to);
    }
    std::vector<int> order = topological_order(plain);

    ScoreSolution sol;
    sol.max_dif.assign(g.n, Rational(0));
    sol.best_move.assign(g.n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int s = *it;
        if (g.terminal_value[s].has_value()) {
            if (!g.next[s].empty()) {
                throw std::runtime_error("terminal state " + std::to_string(s) +
                                         " has outgoing moves");
            }
            sol.max_dif[s] = *g.terminal_value[s];
            continue;
        }
        if (g.next[s].empty()) {
            throw std::runtime_error("missing terminal value at state " + std::to_string(s));
        }
        bool have = false;
        Rational best;
        int best_succ = -1;
        for (const ScoredEdge& e : g.next[s]) {
            Rational child = sol.max_dif[e.to];
            if (g.movers_differ(s, e.to)) child = -child;
            Rational value = e.mover_gain - e.opponent_gain + child;
            if (!have || value > best || (value == best && e.to < best_succ)) {
                have = true;
                best = value;
                best_succ = e.to;
            }
        }
        sol.max_dif[s] = best;
        sol.best_move[s] = best_succ;
    }
    return sol;
}

int ProductGraph::tuple_id(std::span<const int> coords) const {
    int id = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) id += coords[i] * strides[i];
    return id;
}

std::vector<int> ProductGraph::coords_of(int id) const {
    std::vector<int> coords(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        coords[i] = (id / strides[i]) % sizes[i];
    }
    return coords;
}

ProductGraph product_graph(const std::vector<StateGraph>& games, const ProductOptions& options) {
    if (games.empty()) throw std::invalid_argument("product of zero games");
    const unsigned __int128 cap = std::min<unsigned __int128>(
        options.state_cap, std::numeric_limits<int>::max());
    unsigned __int128 total = 1;
    for (const StateGraph& g : games) {
        if (!g.impartial_alternating()) {
            throw std::invalid_argument(
                "product_graph requires impartial-alternating inputs");
        }
        total *= static_cast<unsigned>(g.n);
        if (total > cap) {
            throw std::runtime_error("state explosion: product exceeds cap of " +
                                     std::to_string(options.state_cap) + " states");
        }
    }

    ProductGraph prod;
    prod.sizes.reserve(games.size());
    prod.strides.reserve(games.size());
    int stride = 1;
    for (const StateGraph& g : games) {
        prod.sizes.push_back(g.n);
        prod.strides.push_back(stride);
        stride *= g.n;
    }
    const int count = static_cast<int>(total);
    prod.graph = StateGraph::impartial(count);

    std::vector<int> coords(games.size(), 0);
    for (int id = 0; id < count; ++id) {
        coords = prod.coords_of(id);
        std::optional<Outcome> label;
        if (options.terminal_rule) {
            label = options.terminal_rule(coords);
        } else {
            bool any_move = false;
            for (std::size_t j = 0; j < games.size() && !any_move; ++j) {
                any_move = !games[j].next[coords[j]].empty();
            }
            if (!any_move) label = Outcome::Defeat;  // last move wins
        }
        if (label.has_value()) {
            prod.graph.set_terminal(id, *label);
            continue;
        }
        for (std::size_t j = 0; j < games.size(); ++j) {
            for (int t : games[j].next[coords[j]]) {
                prod.graph.add_edge(id, id + (t - coords[j]) * prod.strides[j]);
            }
        }
    }
    return prod;
}

TimeExpandedGraph time_expand(const StateGraph& g, int tmax,
                              const std::vector<std::optional<Outcome>>& horizon) {
    if (tmax < 0) throw std::invalid_argument("tmax must be nonnegative");
    if (static_cast<int>(horizon.size()) != g.n) {
        throw std::invalid_argument("horizon must cover every state");
    }
    for (int s = 0; s < g.n; ++s) {
        if (g.terminal[s].has_value()) continue;
        if (g.next[s].empty()) {
            throw std::runtime_error("missing terminal label at state " + std::to_string(s));
        }
        if (!horizon[s].has_value()) {
            throw std::invalid_argument("missing horizon label for state " + std::to_string(s));
        }
    }

    TimeExpandedGraph out;
    out.base_states = g.n;
    out.tmax = tmax;
    const int layers = tmax + 1;
    if (g.impartial_alternating()) {
        out.graph = StateGraph::impartial(g.n * layers);
    } else {
        std::vector<int> movers;
        movers.reserve(static_cast<std::size_t>(g.n) * layers);
        for (int t = 0; t < layers; ++t) {
            movers.insert(movers.end(), g.mover.begin(), g.mover.end());
        }
        out.graph = StateGraph::with_movers(std::move(movers));
    }
    for (int t = 0; t < layers; ++t) {
        for (int s = 0; s < g.n; ++s) {
            int id = out.id(s, t);
            if (g.terminal[s].has_value()) {
                out.graph.set_terminal(id, *g.terminal[s]);
            } else if (t == tmax) {
                out.graph.set_terminal(id, *horizon[s]);
            } else {
                for (int u : g.next[s]) out.graph.add_edge(id, out.id(u, t + 1));
            }
        }
    }
    return out;
}

OutcomeSolution solve_cyclic(const StateGraph& g, const InfiniteOutcome& infinite) {
    if (g.impartial_alternating() && infinite.for_player1 != infinite.for_player2) {
        throw std::invalid_argument(
            "impartial-alternating graph needs a uniform infinite outcome");
    }
    std::vector<std::optional<Outcome>> value(g.n);
    for (int s = 0; s < g.n; ++s) {
        if (g.terminal[s].has_value()) {
            value[s] = g.terminal[s];
        } else if (g.next[s].empty()) {
            throw std::runtime_error("missing terminal label at state " + std::to_string(s));
        }
    }

    // Stage 1 propagates definite values; stage 2 lets movers who lose at
    // infinity settle for a reachable Draw. Stage-2 draws can unlock further
    // definite values (an opponent escaping a cycle into a draw), so the two
    // stages run interleaved until neither changes anything. Under a uniform
    // Draw rule stage 2 never fires and this is the plain two-stage pass.
    auto definite_sweep = [&]() {
        bool changed = false;
        for (int s = 0; s < g.n; ++s) {
            if (value[s].has_value()) continue;
            bool all_known = true;
            bool any_draw = false;
            bool winning = false;
            for (int t : g.next[s]) {
                if (!value[t].has_value()) {
                    all_known = false;
                    continue;
                }
                Outcome c = contribution(g, s, t, *value[t]);
                if (c == Outcome::Victory) {
                    winning = true;
                    break;
                }
                if (c == Outcome::Draw) any_draw = true;
            }
            if (winning) {
                value[s] = Outcome::Victory;
                changed = true;
            } else if (all_known) {
                value[s] = any_draw ? Outcome::Draw : Outcome::Defeat;
                changed = true;
            }
        }
        return changed;
    };
    auto draw_sweep = [&]() {
        bool changed = false;
        for (int s = 0; s < g.n; ++s) {
            if (value[s].has_value()) continue;
            if (infinite.for_mover(g.mover_of(s)) != Outcome::Defeat) continue;
            for (int t : g.next[s]) {
                if (value[t].has_value() && *value[t] == Outcome::Draw) {
                    value[s] = Outcome::Draw;
                    changed = true;
                    break;
                }
            }
        }
        return changed;
    };
    for (;;) {
        if (definite_sweep()) continue;
        if (draw_sweep()) continue;
        break;
    }

    OutcomeSolution sol;
    sol.result.assign(g.n, Outcome::Defeat);
    sol.best_move.assign(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        sol.result[s] = value[s].value_or(infinite.for_mover(g.mover_of(s)));
    }
    for (int s = 0; s < g.n; ++s) {
        if (g.terminal[s].has_value() || g.next[s].empty()) continue;
        int best_rank = -1;
        int best_succ = -1;
        for (int t : g.next[s]) {
            int rank = outcome_rank(contribution(g, s, t, sol.result[t]));
            if (rank > best_rank || (rank == best_rank && t < best_succ)) {
                best_rank = rank;
                best_succ = t;
            }
        }
        sol.best_move[s] = best_succ;
    }
    return sol;
}

std::vector<int> grundy_numbers(const StateGraph& g) {
    if (!g.impartial_alternating()) {
        throw std::invalid_argument("grundy numbers need an impartial-alternating graph");
    }
    std::vector<int> order = topological_order(g.next);
    for (int s = 0; s < g.n; ++s) {
        if (!g.terminal[s].has_value()) continue;
        if (!g.next[s].empty() || *g.terminal[s] != Outcome::Defeat) {
            throw std::invalid_argument(
                "grundy numbers need a last-move-wins graph (Defeat-labelled sinks only)");
        }
    }
    std::vector<int> grundy(g.n, 0);
    std::vector<int> reachable;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int s = *it;
        if (g.next[s].empty()) {
            grundy[s] = 0;
            continue;
        }
        reachable.clear();
        for (int t : g.next[s]) reachable.push_back(grundy[t]);
        grundy[s] = mex(std::move(reachable));
    }
    return grundy;
}

int mex(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    int m = 0;
    for (int v : values) {
        if (v == m) {
            ++m;
        } else if (v > m) {
            break;
        }
    }
    return m;
}

int combined_grundy(std::span<const std::pair<int, int>> components) {
    int acc = 0;
    for (const auto& [grundy, multiplicity] : components) {
        if (multiplicity % 2 != 0) acc ^= grundy;
    }
    return acc;
}

}  // namespace adversolve
