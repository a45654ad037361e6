#include "doctest.h"

#include <random>
#include <sstream>

#include "adversolve/game_core.hpp"

#include "adversolve/text_formats.hpp"

using namespace adversolve;

namespace {

std::istringstream stream(const char* text) { return std::istringstream(text); }

}  // namespace

TEST_CASE("state graph parsing") {
    auto in = stream("# comment\nstates 1\nstate 1 -\nterminal 1 L\n");
    StateGraph g = parse_state_graph(in);
    CHECK(g.n == 1);
    CHECK(g.impartial_alternating());
    CHECK(g.terminal[0] == Outcome::Defeat);

    auto partizan = stream("states 2\nstate 1 1\nstate 2 2\nedge 1 2\nterminal 2 W\n");
    StateGraph p = parse_state_graph(partizan);
    CHECK(p.mover_of(0) == 1);
    CHECK(p.mover_of(1) == 2);
    CHECK(p.next[0] == std::vector<int>{1});

    // Optional score deltas are tolerated by the plain parser.
    auto with_deltas = stream("states 2\nedge 1 2 3 1/2\nterminal 2 L\n");
    CHECK(parse_state_graph(with_deltas).edge_count() == 1);
}

TEST_CASE("state graph parse errors carry line and column") {
    auto dangling = stream("states 1\nedge 1 2\n");
    try {
        parse_state_graph(dangling);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
        CHECK(std::string(e.what()).find("dangling edge endpoint 2") != std::string::npos);
    }

    auto duplicate = stream("states 2\nstate 1 1\nstate 1 2\n");
    CHECK_THROWS_AS(parse_state_graph(duplicate), ParseError);

    auto mixed = stream("states 2\nstate 1 -\nstate 2 1\nedge 1 2\n");
    CHECK_THROWS_AS(parse_state_graph(mixed), ParseError);

    auto missing = stream("states 2\nstate 1 1\nedge 1 2\n");
    CHECK_THROWS_AS(parse_state_graph(missing), ParseError);

    auto junk = stream("states 1\nwibble 1\n");
    CHECK_THROWS_AS(parse_state_graph(junk), ParseError);
}

TEST_CASE("scored graph parsing requires deltas and rational terminals") {
    auto in = stream("states 2\nedge 1 2 3 0\nterminal 2 -5/4\n");
    ScoredStateGraph g = parse_scored_state_graph(in);
    CHECK(g.next[0][0].mover_gain == Rational(3));
    CHECK(*g.terminal_value[1] == Rational(-5, 4));

    auto plain_edge = stream("states 2\nedge 1 2\nterminal 2 0\n");
    CHECK_THROWS_AS(parse_scored_state_graph(plain_edge), ParseError);

    auto letter_terminal = stream("states 1\nterminal 1 L\n");
    CHECK_THROWS_AS(parse_scored_state_graph(letter_terminal), ParseError);
}

TEST_CASE("graph list parsing splits on headers") {
    auto in = stream("states 2\nedge 1 2\nterminal 2 L\nstates 1\nterminal 1 D\n");
    auto graphs = parse_state_graph_list(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].n == 2);
    CHECK(graphs[1].terminal[0] == Outcome::Draw);
}

TEST_CASE("tree parsing") {
    auto in = stream("tree 3\nedge 1 2\nedge 2 3\n");
    Tree t = parse_tree(in);
    CHECK(t.n == 3);
    CHECK(t.adj[1].size() == 2);

    auto not_tree = stream("tree 3\nedge 1 2\n");
    CHECK_THROWS_AS(parse_tree(not_tree), ParseError);
}

TEST_CASE("board parsing") {
    auto numeric = stream("board 3\n1 5/2 2\n");
    BoardInput b = parse_board(numeric);
    REQUIRE(b.values.size() == 3);
    CHECK(b.values[1] == Rational(5, 2));

    auto letters = stream("board 4\n\"abca\"\n");
    BoardInput s = parse_board(letters);
    CHECK(s.letters == "abca");

    auto wrong_len = stream("board 3\n\"ab\"\n");
    CHECK_THROWS_AS(parse_board(wrong_len), ParseError);
    auto wrong_count = stream("board 3\n1 2\n");
    CHECK_THROWS_AS(parse_board(wrong_count), ParseError);
}

TEST_CASE("treblecross and multiround parsing") {
    auto in = stream("treblecross 7\nmarked 4\nmult 3\ntreblecross 3\n");
    auto instances = parse_treblecross(in);
    REQUIRE(instances.size() == 2);
    CHECK(instances[0].first.length == 7);
    CHECK(instances[0].first.marked.count(4) == 1);
    CHECK(instances[0].second == 3);
    CHECK(instances[1].second == 1);

    auto mr = stream("multiround 7 | s1: 1 2 | s2: 1 3 | rule: case2\n");
    MultiRoundConfig config = parse_multiround(mr);
    CHECK(config.pile == 7);
    CHECK(config.moves1 == std::vector<int>{1, 2});
    CHECK(config.moves2 == std::vector<int>{1, 3});
    CHECK(config.rule == MultiRoundRule::LoserStarts);

    auto bad_rule = stream("multiround 7 | s1: 1 | s2: 1 | rule: case3\n");
    CHECK_THROWS_AS(parse_multiround(bad_rule), ParseError);
}

TEST_CASE("pursuit parsing") {
    auto in = stream(
        "digraph 3 4\narc 1 2\narc 2 1\narc 2 3\narc 3 2\n"
        "cops 1\nrobbers 3\nschedule (c,1)(r,1)\nsafe 1: 1\nBprime 1\nBsecond 1\n");
    PursuitConfig config = parse_pursuit(in);
    CHECK(config.vertices == 3);
    CHECK(config.arcs.size() == 4);
    CHECK(config.cop_start == std::vector<int>{0});
    CHECK(config.robber_start == std::vector<int>{2});
    REQUIRE(config.schedule.size() == 2);
    CHECK(config.schedule[0].cop);
    CHECK_FALSE(config.schedule[1].cop);
    REQUIRE(config.safe.size() == 1);
    CHECK(config.safe[0].count(0) == 1);

    auto missing = stream("digraph 2 1\narc 1 2\ncops 1\nschedule (c,1)\n");
    CHECK_THROWS_AS(parse_pursuit(missing), ParseError);
}

TEST_CASE("parsers survive random garbage") {
    std::mt19937 rng(123456);
    const char alphabet[] = "abz0129/-|:()\"# \n\tstateedgrphumlq";
    for (int iter = 0; iter < 3000; ++iter) {
        int length = std::uniform_int_distribution<int>(0, 60)(rng);
        std::string text;
        for (int i = 0; i < length; ++i) {
            text.push_back(alphabet[std::uniform_int_distribution<std::size_t>(
                0, sizeof alphabet - 2)(rng)]);
        }
        // Any outcome but a crash is fine; inputs that happen to parse are
        // legitimate.
        auto feed = [&](auto parser) {
            std::istringstream in(text);
            try {
                parser(in);
            } catch (const std::exception&) {
            }
        };
        feed([](std::istream& in) { parse_state_graph(in); });
        feed([](std::istream& in) { parse_scored_state_graph(in); });
        feed([](std::istream& in) { parse_tree(in); });
        feed([](std::istream& in) { parse_board(in); });
        feed([](std::istream& in) { parse_treblecross(in); });
        feed([](std::istream& in) { parse_multiround(in); });
        feed([](std::istream& in) { parse_pursuit(in); });
        feed([](std::istream& in) { parse_undirected_graph(in); });
        feed([](std::istream& in) { parse_amounts(in); });
        feed([](std::istream& in) { parse_line_instance(in); });
        feed([](std::istream& in) { parse_tree_realloc(in); });
    }
}

TEST_CASE("time expansion input validation") {
    StateGraph g = StateGraph::with_movers({1, 2});
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    std::vector<std::optional<Outcome>> horizon(2, Outcome::Draw);
    CHECK_THROWS_AS(time_expand(g, 1, {Outcome::Draw}), std::invalid_argument);
    std::vector<std::optional<Outcome>> partial(2);
    partial[0] = Outcome::Draw;
    CHECK_THROWS_AS(time_expand(g, 1, partial), std::invalid_argument);
    CHECK(time_expand(g, 1, horizon).graph.n == 4);
}

TEST_CASE("undirected graph and allocation parsing") {
    auto g = stream("graph 3 2\ne 1 2\ne 2 3\n");
    UndirectedGraph u = parse_undirected_graph(g);
    CHECK(u.edge_count() == 2);

    auto dup = stream("graph 2 2\ne 1 2\ne 2 1\n");
    CHECK_THROWS_AS(parse_undirected_graph(dup), ParseError);

    auto amounts = stream("1 2 5/2\n");
    auto parsed = parse_amounts(amounts);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[2] == Rational(5, 2));

    auto line = stream("r: 10 0 0\nq: 1 1\n");
    LineInstance inst = parse_line_instance(line);
    CHECK(inst.amounts.size() == 3);
    CHECK(inst.losses.size() == 2);
    auto bad = stream("r: 1 2\nq: 1 1\n");
    CHECK_THROWS_AS(parse_line_instance(bad), ParseError);

    auto tr = stream("edge 1 2 3 4\nb: 1 0\nq: 0 1\n");
    TreeReallocInstance realloc = parse_tree_realloc(tr);
    CHECK(realloc.n == 2);
    CHECK(realloc.edges[0].cost_vu == Rational(4));
}
