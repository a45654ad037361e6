#include "adversolve/pursuit.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace adversolve {

namespace {

struct StateCodec {
    int n = 0;
    int cops = 0;
    int robbers = 0;
    int slots = 0;

    // robber status radix: vertices plus captured plus safe
    int robber_radix() const { return n + 2; }

    std::size_t state_count() const {
        unsigned __int128 total = slots;
        for (int i = 0; i < cops; ++i) total *= static_cast<unsigned>(n);
        for (int j = 0; j < robbers; ++j) total *= static_cast<unsigned>(robber_radix());
        return static_cast<std::size_t>(total);
    }

    unsigned __int128 state_count_wide() const {
        unsigned __int128 total = slots;
        for (int i = 0; i < cops; ++i) total *= static_cast<unsigned>(n);
        for (int j = 0; j < robbers; ++j) total *= static_cast<unsigned>(robber_radix());
        return total;
    }

    int encode(const std::vector<int>& cop_pos, const std::vector<int>& robber_status,
               int slot) const {
        long long id = 0;
        for (int i = 0; i < cops; ++i) id = id * n + cop_pos[i];
        for (int j = 0; j < robbers; ++j) {
            int status = robber_status[j];
            int digit = status == PursuitGraph::kCaptured ? n
                        : status == PursuitGraph::kSafe   ? n + 1
                                                          : status;
            id = id * robber_radix() + digit;
        }
        return static_cast<int>(id * slots + slot);
    }

    void decode(int id, std::vector<int>& cop_pos, std::vector<int>& robber_status,
                int& slot) const {
        slot = id % slots;
        long long rest = id / slots;
        robber_status.assign(robbers, 0);
        for (int j = robbers - 1; j >= 0; --j) {
            int digit = static_cast<int>(rest % robber_radix());
            rest /= robber_radix();
            robber_status[j] = digit == n ? PursuitGraph::kCaptured
                               : digit == n + 1 ? PursuitGraph::kSafe
                                                : digit;
        }
        cop_pos.assign(cops, 0);
        for (int i = cops - 1; i >= 0; --i) {
            cop_pos[i] = static_cast<int>(rest % n);
            rest /= n;
        }
    }
};

void validate_config(const PursuitConfig& c) {
    if (c.vertices < 1) throw std::invalid_argument("pursuit graph needs vertices");
    for (auto [u, v] : c.arcs) {
        if (u < 0 || u >= c.vertices || v < 0 || v >= c.vertices) {
            throw std::invalid_argument("arc endpoint out of range");
        }
    }
    if (c.cop_start.empty() || c.robber_start.empty()) {
        throw std::invalid_argument("need at least one cop and one robber");
    }
    for (int v : c.cop_start) {
        if (v < 0 || v >= c.vertices) throw std::invalid_argument("cop start out of range");
    }
    for (int v : c.robber_start) {
        if (v < 0 || v >= c.vertices) throw std::invalid_argument("robber start out of range");
    }
    if (c.schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
    for (const auto& turn : c.schedule) {
        int limit = turn.cop ? static_cast<int>(c.cop_start.size())
                             : static_cast<int>(c.robber_start.size());
        if (turn.index < 0 || turn.index >= limit) {
            throw std::invalid_argument("schedule index out of range");
        }
    }
    const int robbers = static_cast<int>(c.robber_start.size());
    if (c.capture_threshold < 1 || c.capture_threshold > robbers ||
        c.escape_threshold < 1 || c.escape_threshold > robbers) {
        throw std::invalid_argument("thresholds must lie in [1, robbers]");
    }
    if (!c.safe.empty() && static_cast<int>(c.safe.size()) != robbers) {
        throw std::invalid_argument("safe sets must cover every robber");
    }
    for (const auto& vertices : c.safe) {
        for (int v : vertices) {
            if (v < 0 || v >= c.vertices) throw std::invalid_argument("safe vertex out of range");
        }
    }
}

}  // namespace

PursuitGraph build_pursuit_graph(const PursuitConfig& config) {
    validate_config(config);
    const int n = config.vertices;
    const int cops = static_cast<int>(config.cop_start.size());
    const int robbers = static_cast<int>(config.robber_start.size());
    StateCodec codec{n, cops, robbers, static_cast<int>(config.schedule.size())};
    const unsigned __int128 cap = std::min<unsigned __int128>(
        config.state_cap, std::numeric_limits<int>::max());
    if (codec.state_count_wide() > cap) {
        throw std::runtime_error("state explosion: pursuit graph exceeds cap of " +
                                 std::to_string(config.state_cap) + " states");
    }
    const int count = static_cast<int>(codec.state_count());

    std::vector<std::vector<int>> out_arcs(n);
    for (auto [u, v] : config.arcs) out_arcs[u].push_back(v);

    std::vector<int> movers(count, 1);
    std::vector<int> cop_pos, robber_status;
    int slot = 0;
    for (int id = 0; id < count; ++id) {
        codec.decode(id, cop_pos, robber_status, slot);
        movers[id] = config.schedule[slot].cop ? 1 : 2;
    }
    PursuitGraph out;
    out.graph = StateGraph::with_movers(std::move(movers));
    out.vertices = n;
    out.cops = cops;
    out.robbers = robbers;
    out.slots = codec.slots;
    out.start_state = codec.encode(config.cop_start, config.robber_start, 0);

    auto safe_contains = [&](int robber, int vertex) {
        return !config.safe.empty() && config.safe[robber].count(vertex) > 0;
    };

    for (int id = 0; id < count; ++id) {
        codec.decode(id, cop_pos, robber_status, slot);
        int captured = 0, safe = 0;
        for (int status : robber_status) {
            captured += status == PursuitGraph::kCaptured;
            safe += status == PursuitGraph::kSafe;
        }
        const bool cop_turn = config.schedule[slot].cop;
        if (captured >= config.capture_threshold) {
            out.graph.set_terminal(id, cop_turn ? Outcome::Victory : Outcome::Defeat);
            continue;
        }
        if (safe >= config.escape_threshold) {
            out.graph.set_terminal(id, cop_turn ? Outcome::Defeat : Outcome::Victory);
            continue;
        }

        const int agent = config.schedule[slot].index;
        const int next_slot = (slot + 1) % codec.slots;
        if (cop_turn) {
            int from = cop_pos[agent];
            if (out_arcs[from].empty()) {
                out.graph.set_terminal(id, config.strict_stuck ? Outcome::Defeat
                                                               : Outcome::Draw);
                continue;
            }
            for (int to : out_arcs[from]) {
                std::vector<int> next_cops = cop_pos;
                next_cops[agent] = to;
                std::vector<int> next_robbers = robber_status;
                for (int j = 0; j < robbers; ++j) {
                    if (next_robbers[j] == to) next_robbers[j] = PursuitGraph::kCaptured;
                }
                out.graph.add_edge(id, codec.encode(next_cops, next_robbers, next_slot));
            }
        } else {
            int status = robber_status[agent];
            if (status == PursuitGraph::kCaptured || status == PursuitGraph::kSafe) {
                // Out of play: the turn passes.
                out.graph.add_edge(id, codec.encode(cop_pos, robber_status, next_slot));
                continue;
            }
            if (out_arcs[status].empty()) {
                out.graph.set_terminal(id, config.strict_stuck ? Outcome::Defeat
                                                               : Outcome::Draw);
                continue;
            }
            for (int to : out_arcs[status]) {
                std::vector<int> next_robbers = robber_status;
                if (safe_contains(agent, to)) {
                    next_robbers[agent] = PursuitGraph::kSafe;
                } else if (config.capture_on_robber_move &&
                           std::find(cop_pos.begin(), cop_pos.end(), to) != cop_pos.end()) {
                    next_robbers[agent] = PursuitGraph::kCaptured;
                } else {
                    next_robbers[agent] = to;
                }
                out.graph.add_edge(id, codec.encode(cop_pos, next_robbers, next_slot));
            }
        }
    }
    return out;
}

int PursuitGraph::state_of(const std::vector<int>& cop_pos,
                           const std::vector<int>& robber_status, int slot) const {
    StateCodec codec{vertices, cops, robbers, slots};
    return codec.encode(cop_pos, robber_status, slot);
}

PursuitOutcome solve_pursuit(const PursuitConfig& config) {
    PursuitGraph built = build_pursuit_graph(config);
    auto sol = solve_cyclic(built.graph, InfiniteOutcome::uniform(Outcome::Draw));
    Outcome at_start = sol.result[built.start_state];
    bool cop_moves_first = config.schedule.front().cop;
    Outcome for_cops = cop_moves_first ? at_start : flip(at_start);
    if (for_cops == Outcome::Victory) return PursuitOutcome::CopsWin;
    if (for_cops == Outcome::Defeat) return PursuitOutcome::RobbersWin;
    return PursuitOutcome::Draw;
}

UndirectedGraph UndirectedGraph::empty(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    UndirectedGraph g;
    g.n = n;
    g.adj.resize(n);
    return g;
}

void UndirectedGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj[u].count(v)) throw std::invalid_argument("duplicate edge");
    adj[u].insert(v);
    adj[v].insert(u);
}

std::size_t UndirectedGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& s : adj) twice += s.size();
    return twice / 2;
}

namespace {

bool cop_win_naive(const UndirectedGraph& graph, std::uint64_t seed) {
    const int n = graph.n;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u) {
        for (int v : graph.adj[u]) adj[u][v] = 1;
    }
    std::vector<char> alive(n, 1);
    int alive_count = n;
    std::mt19937_64 rng(seed);

    while (alive_count >= 2) {
        std::vector<int> dominated;
        for (int y = 0; y < n && (dominated.empty() || seed != 0); ++y) {
            if (!alive[y]) continue;
            bool found = false;
            for (int x = 0; x < n && !found; ++x) {
                if (!alive[x] || !adj[y][x]) continue;
                bool dominates = true;
                for (int z = 0; z < n; ++z) {
                    if (z == x || !alive[z] || !adj[y][z]) continue;
                    if (!adj[x][z]) {
                        dominates = false;
                        break;
                    }
                }
                found = dominates;
            }
            if (found) dominated.push_back(y);
        }
        if (dominated.empty()) break;
        int y = seed == 0 ? dominated.front()
                          : dominated[static_cast<std::size_t>(rng() % dominated.size())];
        alive[y] = 0;
        --alive_count;
        for (int z = 0; z < n; ++z) adj[y][z] = adj[z][y] = 0;
    }
    return alive_count == 1;
}

bool cop_win_fast(const UndirectedGraph& graph, std::uint64_t seed) {
    const int n = graph.n;
    std::vector<std::set<int>> adj = graph.adj;
    std::vector<int> nv(n, 0);
    std::vector<std::vector<int>> nvc(n, std::vector<int>(n, 0));
    for (int z = 0; z < n; ++z) {
        nv[z] = static_cast<int>(adj[z].size());
        for (int x : adj[z]) {
            for (int y : adj[z]) {
                if (x < y) {
                    ++nvc[x][y];
                    ++nvc[y][x];
                }
            }
        }
    }
    std::vector<char> alive(n, 1);
    int alive_count = n;
    std::mt19937_64 rng(seed);

    while (alive_count >= 2) {
        std::vector<int> dominated;
        for (int y = 0; y < n && (dominated.empty() || seed != 0); ++y) {
            if (!alive[y]) continue;
            for (int x : adj[y]) {
                if (nvc[x][y] == nv[y] - 1) {
                    dominated.push_back(y);
                    break;
                }
            }
        }
        if (dominated.empty()) break;
        int y = seed == 0 ? dominated.front()
                          : dominated[static_cast<std::size_t>(rng() % dominated.size())];
        std::vector<int> neighbours(adj[y].begin(), adj[y].end());
        for (int z : neighbours) {
            --nv[z];
            adj[z].erase(y);
        }
        for (std::size_t a = 0; a < neighbours.size(); ++a) {
            for (std::size_t b = a + 1; b < neighbours.size(); ++b) {
                --nvc[neighbours[a]][neighbours[b]];
                --nvc[neighbours[b]][neighbours[a]];
            }
        }
        adj[y].clear();
        nv[y] = 0;
        alive[y] = 0;
        --alive_count;
    }
    return alive_count == 1;
}

}  // namespace

bool cop_win(const UndirectedGraph& graph, CopWinMode mode, std::uint64_t seed) {
    return mode == CopWinMode::Naive ? cop_win_naive(graph, seed) : cop_win_fast(graph, seed);
}

bool cop_win_by_state_search(const UndirectedGraph& graph) {
    PursuitConfig config;
    config.vertices = graph.n;
    for (int u = 0; u < graph.n; ++u) {
        config.arcs.emplace_back(u, u);  // staying is allowed in the classical game
        for (int v : graph.adj[u]) config.arcs.emplace_back(u, v);
    }
    config.cop_start = {0};
    config.robber_start = {0};
    config.schedule = {{true, 0}, {false, 0}};
    config.capture_threshold = 1;
    config.escape_threshold = 1;
    config.safe = {std::set<int>{}};

    PursuitGraph built = build_pursuit_graph(config);
    auto sol = solve_cyclic(built.graph, InfiniteOutcome::uniform(Outcome::Draw));

    // Opening: the cop picks the best start, then the robber the worst reply.
    for (int cop_at = 0; cop_at < graph.n; ++cop_at) {
        bool wins_everywhere = true;
        for (int robber_at = 0; robber_at < graph.n && wins_everywhere; ++robber_at) {
            int start = built.state_of({cop_at}, {robber_at}, 0);
            wins_everywhere = sol.result[start] == Outcome::Victory;
        }
        if (wins_everywhere) return true;
    }
    return false;
}

namespace {

struct Components {
    std::vector<int> label;
    int count = 0;
};

Components split_components(const UndirectedGraph& g) {
    Components out;
    out.label.assign(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (out.label[s] != -1) continue;
        std::vector<int> stack{s};
        out.label[s] = out.count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u]) {
                if (out.label[v] == -1) {
                    out.label[v] = out.count;
                    stack.push_back(v);
                }
            }
        }
        ++out.count;
    }
    return out;
}

}  // namespace

bool is_caterpillar(const UndirectedGraph& graph) {
    if (graph.edge_count() != static_cast<std::size_t>(graph.n) - 1 ||
        split_components(graph).count != 1) {
        throw std::invalid_argument("caterpillar recognition needs a tree");
    }
    for (int v = 0; v < graph.n; ++v) {
        if (graph.adj[v].size() <= 1) continue;
        int big_neighbours = 0;
        for (int u : graph.adj[v]) big_neighbours += graph.adj[u].size() > 1;
        if (big_neighbours > 2) return false;
    }
    return true;
}

bool is_extended_caterpillar(const UndirectedGraph& graph) {
    Components comps = split_components(graph);
    std::vector<std::size_t> comp_vertices(comps.count, 0), comp_edges(comps.count, 0);
    for (int v = 0; v < graph.n; ++v) {
        ++comp_vertices[comps.label[v]];
        comp_edges[comps.label[v]] += graph.adj[v].size();
    }
    for (int c = 0; c < comps.count; ++c) {
        if (comp_edges[c] / 2 != comp_vertices[c] - 1) return false;  // a cycle
    }

    enum : char { Plain, Leaf, LeafNeighbour };
    std::vector<char> mark(graph.n, Plain);
    for (int v = 0; v < graph.n; ++v) {
        if (graph.adj[v].size() == 1) mark[v] = Leaf;
    }
    for (int v = 0; v < graph.n; ++v) {
        if (mark[v] == Leaf) continue;
        int non_leaf = 0;
        for (int u : graph.adj[v]) non_leaf += mark[u] != Leaf;
        if (non_leaf == 1) mark[v] = LeafNeighbour;
    }
    for (int v = 0; v < graph.n; ++v) {
        if (mark[v] != Plain) continue;
        int unmarked_neighbours = 0;
        for (int u : graph.adj[v]) unmarked_neighbours += mark[u] == Plain;
        if (unmarked_neighbours > 2) return false;
    }
    return true;
}

}  // namespace adversolve
