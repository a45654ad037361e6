#include "doctest.h"

#include <random>
#include <stdexcept>

#include "adversolve/game_core.hpp"
#include "oracles.hpp"

using namespace adversolve;

namespace {

// Subtraction game: states are pile sizes 0..n, a move removes 1..k objects.
StateGraph subtraction_game(int n, int k) {
    StateGraph g = StateGraph::impartial(n + 1);
    for (int pile = 0; pile <= n; ++pile) {
        for (int take = 1; take <= k && take <= pile; ++take) {
            g.add_edge(pile, pile - take);
        }
    }
    g.set_terminal(0, Outcome::Defeat);
    return g;
}

}  // namespace

TEST_CASE("solve_outcomes terminal passthrough") {
    StateGraph g = StateGraph::impartial(1);
    g.set_terminal(0, Outcome::Defeat);
    auto sol = solve_outcomes(g);
    CHECK(sol.result[0] == Outcome::Defeat);
    CHECK(sol.best_move[0] == -1);
}

TEST_CASE("solve_outcomes alternating chain") {
    StateGraph g = StateGraph::with_movers({1, 2, 1});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.set_terminal(2, Outcome::Defeat);
    auto sol = solve_outcomes(g);
    CHECK(sol.result[2] == Outcome::Defeat);
    CHECK(sol.result[1] == Outcome::Victory);
    CHECK(sol.result[0] == Outcome::Defeat);
}

TEST_CASE("solve_outcomes prefers draw over opponent victory") {
    StateGraph g = StateGraph::with_movers({1, 2, 2});
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.set_terminal(1, Outcome::Draw);
    g.set_terminal(2, Outcome::Victory);
    auto sol = solve_outcomes(g);
    CHECK(sol.result[0] == Outcome::Draw);
    CHECK(sol.best_move[0] == 1);
}

TEST_CASE("solve_outcomes rejects bad inputs") {
    StateGraph cyclic = StateGraph::impartial(2);
    cyclic.add_edge(0, 1);
    cyclic.add_edge(1, 0);
    CHECK_THROWS_WITH_AS(solve_outcomes(cyclic), "graph not acyclic", std::runtime_error);

    StateGraph unlabelled = StateGraph::impartial(2);
    unlabelled.add_edge(0, 1);
    CHECK_THROWS_AS(solve_outcomes(unlabelled), std::runtime_error);

    StateGraph labelled_nonsink = StateGraph::impartial(2);
    labelled_nonsink.add_edge(0, 1);
    labelled_nonsink.set_terminal(0, Outcome::Victory);
    labelled_nonsink.set_terminal(1, Outcome::Defeat);
    CHECK_THROWS_AS(solve_outcomes(labelled_nonsink), std::runtime_error);
}

TEST_CASE("solve_outcomes agrees with recursive minimax on random DAGs") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 400; ++iter) {
        StateGraph g = iter % 2 == 0 ? oracles::random_impartial_dag(rng, 9, 0.4)
                                     : oracles::random_mover_dag(rng, 9, 0.4);
        auto sol = solve_outcomes(g);
        for (int s = 0; s < g.n; ++s) {
            CHECK(sol.result[s] == oracles::minimax_outcome(g, s));
        }
    }
}

TEST_CASE("solve_scores single move and zero game") {
    ScoredStateGraph g = ScoredStateGraph::impartial(2);
    g.add_edge(0, 1, Rational(3), Rational(0));
    g.set_terminal(1, Rational(0));
    auto sol = solve_scores(g);
    CHECK(sol.max_dif[0] == Rational(3));

    ScoredStateGraph zero = ScoredStateGraph::impartial(3);
    zero.add_edge(0, 1, Rational(0), Rational(0));
    zero.add_edge(1, 2, Rational(0), Rational(0));
    zero.set_terminal(2, Rational(0));
    auto zsol = solve_scores(zero);
    for (int s = 0; s < 3; ++s) CHECK(zsol.max_dif[s] == Rational(0));
}

TEST_CASE("solve_scores agrees with recursive oracle on random scored DAGs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size_dist(1, 8);
    std::uniform_int_distribution<int> delta(-4, 4);
    std::bernoulli_distribution edge(0.45);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = size_dist(rng);
        ScoredStateGraph g = ScoredStateGraph::impartial(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (edge(rng)) g.add_edge(u, v, Rational(delta(rng)), Rational(delta(rng)));
            }
        }
        for (int s = 0; s < n; ++s) {
            if (g.next[s].empty()) g.set_terminal(s, Rational(delta(rng)));
        }
        auto sol = solve_scores(g);
        for (int s = 0; s < n; ++s) CHECK(sol.max_dif[s] == oracles::minimax_score(g, s));

        // Zero-sum accounting: replaying the extracted policy from any state
        // accumulates exactly the reported difference.
        for (int s = 0; s < n; ++s) {
            Rational acc(0);
            int sign = 1;
            int cur = s;
            while (sol.best_move[cur] != -1) {
                int to = sol.best_move[cur];
                const ScoredEdge* used = nullptr;
                for (const ScoredEdge& e : g.next[cur]) {
                    if (e.to == to) {
                        used = &e;
                        break;
                    }
                }
                REQUIRE(used != nullptr);
                Rational gain = used->mover_gain - used->opponent_gain;
                acc += sign > 0 ? gain : -gain;
                sign = g.movers_differ(cur, to) ? -sign : sign;
                cur = to;
            }
            Rational tail = *g.terminal_value[cur];
            acc += sign > 0 ? tail : -tail;
            CHECK(acc == sol.max_dif[s]);
        }
    }
}

TEST_CASE("product_graph identity for one game") {
    StateGraph g = subtraction_game(3, 2);
    auto prod = product_graph({g});
    CHECK(prod.graph.n == g.n);
    CHECK(prod.graph.edge_count() == g.edge_count());
    for (int s = 0; s < g.n; ++s) {
        CHECK(prod.graph.terminal[s].has_value() == g.terminal[s].has_value());
        CHECK(prod.graph.next[s] == g.next[s]);
    }
}

TEST_CASE("product_graph of two take-1 piles") {
    StateGraph pile = StateGraph::impartial(2);  // state 1 = one object, 0 = empty
    pile.add_edge(1, 0);
    pile.set_terminal(0, Outcome::Defeat);
    auto prod = product_graph({pile, pile});
    CHECK(prod.graph.n == 4);
    auto sol = solve_outcomes(prod.graph);
    int start = prod.tuple_id(std::vector<int>{1, 1});
    // First player loses: 1 xor 1 == 0.
    CHECK(sol.result[start] == Outcome::Defeat);
}

TEST_CASE("product_graph state and edge counts") {
    StateGraph chain = StateGraph::impartial(2);
    chain.add_edge(0, 1);
    chain.set_terminal(1, Outcome::Defeat);
    auto prod = product_graph({chain, chain});
    CHECK(prod.graph.n == 4);
    CHECK(prod.graph.edge_count() == 4);
}

TEST_CASE("product_graph state explosion cap") {
    StateGraph g = subtraction_game(19, 3);  // 20 states
    ProductOptions opts;
    opts.state_cap = 100;
    CHECK_THROWS_AS(product_graph({g, g}, opts), std::runtime_error);
}

TEST_CASE("product_graph solve matches xor rule on random impartial pairs") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 300; ++iter) {
        StateGraph a = oracles::random_impartial_dag(rng, 6, 0.5);
        StateGraph b = oracles::random_impartial_dag(rng, 6, 0.5);
        auto ga = grundy_numbers(a);
        auto gb = grundy_numbers(b);
        auto prod = product_graph({a, b});
        auto sol = solve_outcomes(prod.graph);
        std::uniform_int_distribution<int> sa(0, a.n - 1), sb(0, b.n - 1);
        for (int probe = 0; probe < 4; ++probe) {
            int qa = sa(rng), qb = sb(rng);
            int id = prod.tuple_id(std::vector<int>{qa, qb});
            bool first_wins = sol.result[id] == Outcome::Victory;
            CHECK(first_wins == ((ga[qa] ^ gb[qb]) != 0));
        }
    }
}

TEST_CASE("time_expand layered construction") {
    StateGraph loop = StateGraph::impartial(1);
    loop.add_edge(0, 0);
    std::vector<std::optional<Outcome>> horizon{Outcome::Draw};
    auto expanded = time_expand(loop, 2, horizon);
    CHECK(expanded.graph.n == 3);
    CHECK(expanded.graph.edge_count() == 2);
    CHECK(expanded.graph.terminal[expanded.id(0, 2)] == Outcome::Draw);

    auto degenerate = time_expand(loop, 0, horizon);
    CHECK(degenerate.graph.n == 1);
    for (int s = 0; s < degenerate.graph.n; ++s) {
        CHECK(degenerate.graph.terminal[s].has_value());
    }
}

TEST_CASE("solve_cyclic forced infinite play is a draw") {
    StateGraph g = StateGraph::impartial(2);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    auto sol = solve_cyclic(g, InfiniteOutcome::uniform(Outcome::Draw));
    CHECK(sol.result[0] == Outcome::Draw);
    CHECK(sol.result[1] == Outcome::Draw);
}

TEST_CASE("solve_cyclic escape from a cycle") {
    StateGraph g = StateGraph::impartial(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(0, 2);
    g.set_terminal(2, Outcome::Defeat);
    auto sol = solve_cyclic(g, InfiniteOutcome::uniform(Outcome::Draw));
    CHECK(sol.result[0] == Outcome::Victory);
    // Both successors win (1 is a Defeat for the opponent too); ties break to
    // the lowest state id.
    CHECK(sol.best_move[0] == 1);
    CHECK(sol.result[1] == Outcome::Defeat);
}

TEST_CASE("solve_cyclic equals solve_outcomes on random DAGs") {
    std::mt19937 rng(555);
    for (int iter = 0; iter < 300; ++iter) {
        StateGraph g = iter % 2 == 0 ? oracles::random_impartial_dag(rng, 8, 0.4)
                                     : oracles::random_mover_dag(rng, 8, 0.4);
        auto direct = solve_outcomes(g);
        auto iterative = solve_cyclic(g, InfiniteOutcome::uniform(Outcome::Draw));
        for (int s = 0; s < g.n; ++s) CHECK(direct.result[s] == iterative.result[s]);
    }
}

TEST_CASE("time_expand with tmax = V+1 matches solve_cyclic on cyclic graphs") {
    std::mt19937 rng(777);
    int checked = 0;
    for (int iter = 0; iter < 250; ++iter) {
        bool impartial = iter % 2 == 0;
        StateGraph g = oracles::random_cyclic_graph(rng, 8, 0.3, impartial);
        InfiniteOutcome inf = InfiniteOutcome::uniform(Outcome::Draw);
        if (!impartial && iter % 4 == 1) {
            inf = InfiniteOutcome{Outcome::Victory, Outcome::Defeat};
        }
        std::vector<std::optional<Outcome>> horizon(g.n);
        for (int s = 0; s < g.n; ++s) horizon[s] = inf.for_mover(g.mover_of(s));
        auto iterative = solve_cyclic(g, inf);
        auto expanded = time_expand(g, g.n + 1, horizon);
        auto layered = solve_outcomes(expanded.graph);
        for (int s = 0; s < g.n; ++s) {
            CHECK(iterative.result[s] == layered.result[expanded.id(s, 0)]);
        }
        ++checked;
    }
    CHECK(checked == 250);
}

TEST_CASE("grundy numbers of subtraction games follow n mod (k+1)") {
    for (int k = 1; k <= 10; ++k) {
        StateGraph g = subtraction_game(200, k);
        auto grundy = grundy_numbers(g);
        for (int pile = 0; pile <= 200; ++pile) {
            CHECK(grundy[pile] == pile % (k + 1));
        }
    }
}

TEST_CASE("grundy positive iff first player wins") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        StateGraph g = oracles::random_impartial_dag(rng, 9, 0.45);
        auto grundy = grundy_numbers(g);
        auto sol = solve_outcomes(g);
        for (int s = 0; s < g.n; ++s) {
            CHECK((grundy[s] > 0) == (sol.result[s] == Outcome::Victory));
        }
    }
}

TEST_CASE("grundy rejects cyclic and partizan inputs") {
    StateGraph cyclic = StateGraph::impartial(2);
    cyclic.add_edge(0, 1);
    cyclic.add_edge(1, 0);
    CHECK_THROWS_AS(grundy_numbers(cyclic), std::runtime_error);

    StateGraph partizan = StateGraph::with_movers({1, 2});
    partizan.add_edge(0, 1);
    partizan.set_terminal(1, Outcome::Defeat);
    CHECK_THROWS_AS(grundy_numbers(partizan), std::invalid_argument);

    // Last-move-wins demands Defeat at the sinks.
    StateGraph draw_sink = StateGraph::impartial(2);
    draw_sink.add_edge(0, 1);
    draw_sink.set_terminal(1, Outcome::Draw);
    CHECK_THROWS_AS(grundy_numbers(draw_sink), std::invalid_argument);
}

TEST_CASE("mex and combined grundy") {
    CHECK(mex({0, 1, 3}) == 2);
    CHECK(mex({}) == 0);
    CHECK(mex({1, 2}) == 0);
    CHECK(mex({0, 0, 1, 1, 2}) == 3);

    std::vector<std::pair<int, int>> parity{{5, 4}, {3, 1}};
    CHECK(combined_grundy(parity) == 3);
    std::vector<std::pair<int, int>> single{{7, 1}};
    CHECK(combined_grundy(single) == 7);
    std::vector<std::pair<int, int>> pair35{{3, 1}, {5, 1}};
    CHECK(combined_grundy(pair35) == 6);
}

TEST_CASE("combined grundy agrees with explicit product on subtraction piles") {
    StateGraph pile3 = subtraction_game(3, 3);
    StateGraph pile5 = subtraction_game(5, 5);
    auto prod = product_graph({pile3, pile5});
    auto sol = solve_outcomes(prod.graph);
    int start = prod.tuple_id(std::vector<int>{3, 5});
    CHECK(grundy_numbers(pile3)[3] == 3);
    CHECK(grundy_numbers(pile5)[5] == 5);
    CHECK(sol.result[start] == Outcome::Victory);  // 3 xor 5 = 6 > 0
}
