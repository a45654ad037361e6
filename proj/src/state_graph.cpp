#include "adversolve/state_graph.hpp"

#include <stdexcept>
#include <string>

namespace adversolve {

namespace {

void check_state(int s, int n, const char* what) {
    if (s < 0 || s >= n) {
        throw std::out_of_range(std::string(what) + " out of range: " + std::to_string(s));
    }
}

void check_mover_tags(const std::vector<int>& movers) {
    for (int m : movers) {
        if (m != 1 && m != 2) {
            throw std::invalid_argument("mover tag must be 1 or 2, got " + std::to_string(m));
        }
    }
}

}  // namespace

StateGraph StateGraph::impartial(int n) {
    StateGraph g;
    g.n = n;
    g.next.resize(n);
    g.terminal.resize(n);
    return g;
}

StateGraph StateGraph::with_movers(std::vector<int> movers) {
    check_mover_tags(movers);
    StateGraph g;
    g.n = static_cast<int>(movers.size());
    g.mover = std::move(movers);
    g.next.resize(g.n);
    g.terminal.resize(g.n);
    return g;
}

void StateGraph::add_edge(int from, int to) {
    check_state(from, n, "edge source");
    check_state(to, n, "edge target");
    next[from].push_back(to);
}

void StateGraph::set_terminal(int s, Outcome o) {
    check_state(s, n, "terminal state");
    terminal[s] = o;
}

std::size_t StateGraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& e : next) m += e.size();
    return m;
}

ScoredStateGraph ScoredStateGraph::impartial(int n) {
    ScoredStateGraph g;
    g.n = n;
    g.next.resize(n);
    g.terminal_value.resize(n);
    return g;
}

ScoredStateGraph ScoredStateGraph::with_movers(std::vector<int> movers) {
    check_mover_tags(movers);
    ScoredStateGraph g;
    g.n = static_cast<int>(movers.size());
    g.mover = std::move(movers);
    g.next.resize(g.n);
    g.terminal_value.resize(g.n);
    return g;
}

void ScoredStateGraph::add_edge(int from, int to, Rational mover_gain, Rational opponent_gain) {
    check_state(from, n, "edge source");
    check_state(to, n, "edge target");
    next[from].push_back(ScoredEdge{to, std::move(mover_gain), std::move(opponent_gain)});
}

void ScoredStateGraph::set_terminal(int s, Rational max_dif) {
    check_state(s, n, "terminal state");
    terminal_value[s] = std::move(max_dif);
}

std::vector<int> topological_order(const std::vector<std::vector<int>>& next) {
    const int n = static_cast<int>(next.size());
    std::vector<int> indeg(n, 0);
    for (const auto& succ : next) {
        for (int t : succ) ++indeg[t];
    }
    std::vector<int> order;
    order.reserve(n);
    for (int s = 0; s < n; ++s) {
        if (indeg[s] == 0) order.push_back(s);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int t : next[order[head]]) {
            if (--indeg[t] == 0) order.push_back(t);
        }
    }
    if (static_cast<int>(order.size()) != n) {
        throw std::runtime_error("graph not acyclic");
    }
    return order;
}

}  // namespace adversolve
