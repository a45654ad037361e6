#include "adversolve/text_formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <tuple>

namespace adversolve {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

using TokenLine = std::vector<Token>;

std::vector<TokenLine> tokenize(std::istream& in) {
    std::vector<TokenLine> lines;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        TokenLine tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#') break;
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
                   raw[i] != '#') {
                ++i;
            }
            tokens.push_back(Token{raw.substr(start, i - start), line_no,
                                   static_cast<int>(start) + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

[[noreturn]] void fail(const Token& at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
}

[[noreturn]] void fail_eof(const std::string& message) { throw ParseError(0, 0, message); }

long long parse_int(const Token& t, long long lo, long long hi, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
    }
    if (value < lo || value > hi) {
        fail(t, std::string(what) + " out of range: " + t.text);
    }
    return value;
}

Rational parse_rational(const Token& t) {
    try {
        return Rational::parse(t.text);
    } catch (const std::exception&) {
        fail(t, "expected a rational, got '" + t.text + "'");
    }
}

void expect_size(const TokenLine& line, std::size_t count) {
    if (line.size() > count) fail(line[count], "unexpected token '" + line[count].text + "'");
    if (line.size() < count) {
        fail(line.back(), "missing token after '" + line.back().text + "'");
    }
}

Outcome parse_outcome_letter(const Token& t) {
    if (t.text == "W") return Outcome::Victory;
    if (t.text == "D") return Outcome::Draw;
    if (t.text == "L") return Outcome::Defeat;
    fail(t, "expected W, D or L, got '" + t.text + "'");
}

// Shared machinery for plain and scored state-graph blocks.
struct GraphBlock {
    int n = 0;
    std::vector<std::optional<int>> mover;  // -1 impartial tag, 1, 2
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<Rational, Rational>> deltas;  // scored only
    std::vector<std::pair<int, Outcome>> terminals;
    std::vector<std::pair<int, Rational>> terminal_values;  // scored only
};

GraphBlock parse_graph_block(const std::vector<TokenLine>& lines, std::size_t& at, bool scored) {
    if (at >= lines.size()) fail_eof("expected a 'states N' header");
    const TokenLine& header = lines[at];
    if (header[0].text != "states") fail(header[0], "expected 'states N'");
    expect_size(header, 2);
    GraphBlock block;
    block.n = static_cast<int>(parse_int(header[1], 1, 50'000'000, "state count"));
    block.mover.assign(block.n, std::nullopt);
    ++at;

    std::vector<char> has_terminal(block.n, 0);
    auto state_id = [&](const Token& t, const char* what) {
        long long id = parse_int(t, std::numeric_limits<long long>::min(),
                                 std::numeric_limits<long long>::max(), what);
        if (id < 1 || id > block.n) {
            fail(t, std::string("dangling ") + what + " " + t.text);
        }
        return static_cast<int>(id - 1);
    };

    for (; at < lines.size(); ++at) {
        const TokenLine& line = lines[at];
        const std::string& kind = line[0].text;
        if (kind == "states") break;  // next block
        if (kind == "state") {
            expect_size(line, 3);
            int id = state_id(line[1], "state id");
            if (block.mover[id].has_value()) fail(line[1], "duplicate state declaration");
            if (line[2].text == "-") {
                block.mover[id] = -1;
            } else if (line[2].text == "1" || line[2].text == "2") {
                block.mover[id] = line[2].text[0] - '0';
            } else {
                fail(line[2], "mover must be 1, 2 or -");
            }
        } else if (kind == "terminal") {
            expect_size(line, 3);
            int id = state_id(line[1], "terminal state id");
            if (has_terminal[id]) fail(line[1], "duplicate terminal declaration");
            has_terminal[id] = 1;
            if (scored) {
                block.terminal_values.emplace_back(id, parse_rational(line[2]));
            } else {
                block.terminals.emplace_back(id, parse_outcome_letter(line[2]));
            }
        } else if (kind == "edge") {
            // Score deltas are optional in the shared grammar; the plain
            // solvers validate and ignore them.
            if (scored || line.size() == 5) {
                expect_size(line, 5);
            } else {
                expect_size(line, 3);
            }
            int from = state_id(line[1], "edge endpoint");
            int to = state_id(line[2], "edge endpoint");
            block.edges.emplace_back(from, to);
            if (line.size() == 5) {
                block.deltas.emplace_back(parse_rational(line[3]), parse_rational(line[4]));
            }
        } else {
            fail(line[0], "unknown directive '" + kind + "'");
        }
    }

    // Mover convention: all '-' (or nothing) is impartial; otherwise every
    // state needs an explicit 1/2 tag.
    bool any_partizan = false, any_impartial = false;
    for (const auto& m : block.mover) {
        if (!m.has_value()) continue;
        (*m == -1 ? any_impartial : any_partizan) = true;
    }
    if (any_partizan && any_impartial) {
        fail(header[0], "cannot mix '-' movers with explicit 1/2 movers");
    }
    if (any_partizan) {
        for (int s = 0; s < block.n; ++s) {
            if (!block.mover[s].has_value()) {
                fail(header[0], "state " + std::to_string(s + 1) + " is missing a mover");
            }
        }
    }
    return block;
}

StateGraph block_to_graph(const GraphBlock& block) {
    bool partizan = false;
    for (const auto& m : block.mover) partizan = partizan || (m.has_value() && *m != -1);
    StateGraph g;
    if (partizan) {
        std::vector<int> movers(block.n);
        for (int s = 0; s < block.n; ++s) movers[s] = *block.mover[s];
        g = StateGraph::with_movers(std::move(movers));
    } else {
        g = StateGraph::impartial(block.n);
    }
    for (auto [from, to] : block.edges) g.add_edge(from, to);
    for (auto [id, outcome] : block.terminals) g.set_terminal(id, outcome);
    return g;
}

}  // namespace

StateGraph parse_state_graph(std::istream& in) {
    auto lines = tokenize(in);
    std::size_t at = 0;
    GraphBlock block = parse_graph_block(lines, at, false);
    if (at < lines.size()) fail(lines[at][0], "unexpected second graph block");
    return block_to_graph(block);
}

std::vector<StateGraph> parse_state_graph_list(std::istream& in) {
    auto lines = tokenize(in);
    std::size_t at = 0;
    std::vector<StateGraph> graphs;
    while (at < lines.size()) {
        graphs.push_back(block_to_graph(parse_graph_block(lines, at, false)));
    }
    if (graphs.empty()) fail_eof("expected at least one 'states N' block");
    return graphs;
}

ScoredStateGraph parse_scored_state_graph(std::istream& in) {
    auto lines = tokenize(in);
    std::size_t at = 0;
    GraphBlock block = parse_graph_block(lines, at, true);
    if (at < lines.size()) fail(lines[at][0], "unexpected second graph block");

    bool partizan = false;
    for (const auto& m : block.mover) partizan = partizan || (m.has_value() && *m != -1);
    ScoredStateGraph g;
    if (partizan) {
        std::vector<int> movers(block.n);
        for (int s = 0; s < block.n; ++s) movers[s] = *block.mover[s];
        g = ScoredStateGraph::with_movers(std::move(movers));
    } else {
        g = ScoredStateGraph::impartial(block.n);
    }
    for (std::size_t e = 0; e < block.edges.size(); ++e) {
        g.add_edge(block.edges[e].first, block.edges[e].second, block.deltas[e].first,
                   block.deltas[e].second);
    }
    for (const auto& [id, value] : block.terminal_values) g.set_terminal(id, value);
    return g;
}

Tree parse_tree(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) fail_eof("expected 'tree N'");
    const TokenLine& header = lines[0];
    if (header[0].text != "tree") fail(header[0], "expected 'tree N'");
    expect_size(header, 2);
    int n = static_cast<int>(parse_int(header[1], 1, 10'000'000, "vertex count"));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t at = 1; at < lines.size(); ++at) {
        const TokenLine& line = lines[at];
        if (line[0].text != "edge") fail(line[0], "expected 'edge u v'");
        expect_size(line, 3);
        int u = static_cast<int>(parse_int(line[1], 1, n, "vertex"));
        int v = static_cast<int>(parse_int(line[2], 1, n, "vertex"));
        edges.emplace_back(u - 1, v - 1);
    }
    try {
        return Tree::from_edges(n, edges);
    } catch (const std::exception& e) {
        fail(header[0], e.what());
    }
}

BoardInput parse_board(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) fail_eof("expected 'board N'");
    const TokenLine& header = lines[0];
    if (header[0].text != "board") fail(header[0], "expected 'board N'");
    expect_size(header, 2);
    int n = static_cast<int>(parse_int(header[1], 1, 1'000'000, "board size"));

    std::vector<Token> rest;
    for (std::size_t at = 1; at < lines.size(); ++at) {
        rest.insert(rest.end(), lines[at].begin(), lines[at].end());
    }
    if (rest.empty()) fail(header[1], "board contents missing");

    BoardInput out;
    if (rest[0].text.front() == '"') {
        if (rest.size() > 1) fail(rest[1], "unexpected token after the board string");
        const std::string& quoted = rest[0].text;
        if (quoted.size() < 2 || quoted.back() != '"') {
            fail(rest[0], "unterminated board string");
        }
        out.letters = quoted.substr(1, quoted.size() - 2);
        if (static_cast<int>(out.letters.size()) != n) {
            fail(rest[0], "board string length disagrees with the declared size");
        }
        return out;
    }
    if (static_cast<int>(rest.size()) != n) {
        fail(rest.back(), "expected exactly " + std::to_string(n) + " board values");
    }
    for (const Token& t : rest) out.values.push_back(parse_rational(t));
    return out;
}

std::vector<std::pair<TreblecrossBoard, int>> parse_treblecross(std::istream& in) {
    auto lines = tokenize(in);
    std::vector<std::pair<TreblecrossBoard, int>> out;
    std::size_t at = 0;
    while (at < lines.size()) {
        const TokenLine& header = lines[at];
        if (header[0].text != "treblecross") fail(header[0], "expected 'treblecross N'");
        expect_size(header, 2);
        TreblecrossBoard board;
        board.length = static_cast<int>(parse_int(header[1], 3, 1'000'000, "board length"));
        int multiplicity = 1;
        ++at;
        while (at < lines.size() && lines[at][0].text != "treblecross") {
            const TokenLine& line = lines[at];
            if (line[0].text == "marked") {
                for (std::size_t i = 1; i < line.size(); ++i) {
                    int p = static_cast<int>(parse_int(line[i], 1, board.length, "position"));
                    if (!board.marked.insert(p).second) {
                        fail(line[i], "duplicate marked position");
                    }
                }
            } else if (line[0].text == "mult") {
                expect_size(line, 2);
                multiplicity = static_cast<int>(parse_int(line[1], 0, 1'000'000'000,
                                                          "multiplicity"));
            } else {
                fail(line[0], "unknown directive '" + line[0].text + "'");
            }
            ++at;
        }
        out.emplace_back(std::move(board), multiplicity);
    }
    if (out.empty()) fail_eof("expected at least one 'treblecross N' block");
    return out;
}

MultiRoundConfig parse_multiround(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) fail_eof("expected a 'multiround' line");
    const TokenLine& line = lines[0];
    if (lines.size() > 1) fail(lines[1][0], "multiround input is a single line");
    if (line[0].text != "multiround") fail(line[0], "expected 'multiround'");

    // multiround N | s1: a b c | s2: a b | rule: case1
    MultiRoundConfig config;
    std::size_t i = 1;
    if (i >= line.size()) fail(line.back(), "missing pile size");
    config.pile = static_cast<int>(parse_int(line[i++], 1, 200, "pile size"));

    auto expect = [&](const std::string& text) {
        if (i >= line.size() || line[i].text != text) {
            fail(i < line.size() ? line[i] : line.back(), "expected '" + text + "'");
        }
        ++i;
    };
    auto read_moves = [&](std::vector<int>& into) {
        while (i < line.size() && line[i].text != "|") {
            into.push_back(static_cast<int>(parse_int(line[i++], 1, config.pile, "move")));
        }
        if (into.empty()) fail(line[i - 1], "empty move set");
    };
    expect("|");
    expect("s1:");
    read_moves(config.moves1);
    expect("|");
    expect("s2:");
    read_moves(config.moves2);
    expect("|");
    expect("rule:");
    if (i >= line.size()) fail(line.back(), "missing rule");
    if (line[i].text == "case1") {
        config.rule = MultiRoundRule::WinnerStarts;
    } else if (line[i].text == "case2") {
        config.rule = MultiRoundRule::LoserStarts;
    } else {
        fail(line[i], "rule must be case1 or case2");
    }
    if (i + 1 < line.size()) fail(line[i + 1], "unexpected trailing token");
    return config;
}

PursuitConfig parse_pursuit(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) fail_eof("expected 'digraph n m'");
    const TokenLine& header = lines[0];
    if (header[0].text != "digraph") fail(header[0], "expected 'digraph n m'");
    expect_size(header, 3);
    PursuitConfig config;
    config.vertices = static_cast<int>(parse_int(header[1], 1, 10'000, "vertex count"));
    int arc_count = static_cast<int>(parse_int(header[2], 0, 10'000'000, "arc count"));

    std::size_t at = 1;
    for (int e = 0; e < arc_count; ++e, ++at) {
        if (at >= lines.size()) fail_eof("missing arc lines");
        const TokenLine& line = lines[at];
        if (line[0].text != "arc") fail(line[0], "expected 'arc u v'");
        expect_size(line, 3);
        int u = static_cast<int>(parse_int(line[1], 1, config.vertices, "vertex"));
        int v = static_cast<int>(parse_int(line[2], 1, config.vertices, "vertex"));
        config.arcs.emplace_back(u - 1, v - 1);
    }

    bool saw_cops = false, saw_robbers = false, saw_schedule = false;
    for (; at < lines.size(); ++at) {
        const TokenLine& line = lines[at];
        const std::string& kind = line[0].text;
        if (kind == "cops") {
            saw_cops = true;
            for (std::size_t i = 1; i < line.size(); ++i) {
                config.cop_start.push_back(
                    static_cast<int>(parse_int(line[i], 1, config.vertices, "vertex")) - 1);
            }
        } else if (kind == "robbers") {
            saw_robbers = true;
            for (std::size_t i = 1; i < line.size(); ++i) {
                config.robber_start.push_back(
                    static_cast<int>(parse_int(line[i], 1, config.vertices, "vertex")) - 1);
            }
        } else if (kind == "schedule") {
            saw_schedule = true;
            std::string joined;
            for (std::size_t i = 1; i < line.size(); ++i) joined += line[i].text;
            std::size_t p = 0;
            while (p < joined.size()) {
                if (joined[p] != '(') fail(line[1], "schedule entries look like (c,1)");
                std::size_t close = joined.find(')', p);
                std::size_t comma = joined.find(',', p);
                if (close == std::string::npos || comma == std::string::npos || comma > close) {
                    fail(line[1], "schedule entries look like (c,1)");
                }
                std::string type = joined.substr(p + 1, comma - p - 1);
                std::string idx = joined.substr(comma + 1, close - comma - 1);
                if (type != "c" && type != "r") fail(line[1], "schedule type must be c or r");
                int index = 0;
                auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
                if (ec != std::errc() || ptr != idx.data() + idx.size() || index < 1) {
                    fail(line[1], "bad schedule index '" + idx + "'");
                }
                config.schedule.push_back(PursuitConfig::Turn{type == "c", index - 1});
                p = close + 1;
            }
        } else if (kind == "safe") {
            if (line.size() < 2) fail(line[0], "safe needs a robber index");
            std::string j_text = line[1].text;
            if (!j_text.empty() && j_text.back() == ':') j_text.pop_back();
            int robber = 0;
            auto [ptr, ec] = std::from_chars(j_text.data(), j_text.data() + j_text.size(),
                                             robber);
            if (ec != std::errc() || ptr != j_text.data() + j_text.size() || robber < 1) {
                fail(line[1], "bad robber index '" + line[1].text + "'");
            }
            if (config.safe.empty()) config.safe.resize(config.robber_start.size());
            if (robber > static_cast<int>(config.safe.size())) {
                fail(line[1], "safe set for an undeclared robber");
            }
            for (std::size_t i = 2; i < line.size(); ++i) {
                config.safe[robber - 1].insert(
                    static_cast<int>(parse_int(line[i], 1, config.vertices, "vertex")) - 1);
            }
        } else if (kind == "Bprime") {
            expect_size(line, 2);
            config.capture_threshold =
                static_cast<int>(parse_int(line[1], 1, 1'000'000, "threshold"));
        } else if (kind == "Bsecond") {
            expect_size(line, 2);
            config.escape_threshold =
                static_cast<int>(parse_int(line[1], 1, 1'000'000, "threshold"));
        } else {
            fail(line[0], "unknown directive '" + kind + "'");
        }
    }
    if (!saw_cops || !saw_robbers || !saw_schedule) {
        fail_eof("pursuit input needs cops, robbers and a schedule");
    }
    return config;
}

UndirectedGraph parse_undirected_graph(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) fail_eof("expected 'graph n m'");
    const TokenLine& header = lines[0];
    if (header[0].text != "graph") fail(header[0], "expected 'graph n m'");
    expect_size(header, 3);
    int n = static_cast<int>(parse_int(header[1], 1, 100'000, "vertex count"));
    int m = static_cast<int>(parse_int(header[2], 0, 10'000'000, "edge count"));
    UndirectedGraph g = UndirectedGraph::empty(n);
    if (static_cast<int>(lines.size()) - 1 != m) {
        fail(header[2], "edge count disagrees with the edge lines");
    }
    for (int e = 0; e < m; ++e) {
        const TokenLine& line = lines[e + 1];
        if (line[0].text != "e") fail(line[0], "expected 'e u v'");
        expect_size(line, 3);
        int u = static_cast<int>(parse_int(line[1], 1, n, "vertex"));
        int v = static_cast<int>(parse_int(line[2], 1, n, "vertex"));
        try {
            g.add_edge(u - 1, v - 1);
        } catch (const std::exception& ex) {
            fail(line[0], ex.what());
        }
    }
    return g;
}

std::vector<Rational> parse_amounts(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) fail_eof("expected one line of amounts");
    if (lines.size() > 1) fail(lines[1][0], "expected a single line of amounts");
    std::vector<Rational> out;
    for (const Token& t : lines[0]) out.push_back(parse_rational(t));
    return out;
}

LineInstance parse_line_instance(std::istream& in) {
    auto lines = tokenize(in);
    LineInstance instance;
    bool saw_r = false, saw_q = false;
    for (const TokenLine& line : lines) {
        if (line[0].text == "r:") {
            saw_r = true;
            for (std::size_t i = 1; i < line.size(); ++i) {
                instance.amounts.push_back(parse_rational(line[i]));
            }
        } else if (line[0].text == "q:") {
            saw_q = true;
            for (std::size_t i = 1; i < line.size(); ++i) {
                instance.losses.push_back(parse_rational(line[i]));
            }
        } else {
            fail(line[0], "expected 'r:' or 'q:' lines");
        }
    }
    if (!saw_r || instance.amounts.empty()) fail_eof("missing 'r:' amounts");
    if (!saw_q && instance.amounts.size() > 1) fail_eof("missing 'q:' losses");
    if (instance.losses.size() + 1 != instance.amounts.size()) {
        fail_eof("need exactly one loss per segment (" +
                 std::to_string(instance.amounts.size() - 1) + ")");
    }
    return instance;
}

TreeReallocInstance parse_tree_realloc(std::istream& in) {
    auto lines = tokenize(in);
    TreeReallocInstance instance;
    std::vector<std::tuple<int, int, Rational, Rational>> raw_edges;
    std::vector<long long> have, want;
    bool saw_b = false, saw_q = false;
    int max_vertex = 0;
    for (const TokenLine& line : lines) {
        if (line[0].text == "edge") {
            expect_size(line, 5);
            int u = static_cast<int>(parse_int(line[1], 1, 10'000'000, "vertex"));
            int v = static_cast<int>(parse_int(line[2], 1, 10'000'000, "vertex"));
            max_vertex = std::max({max_vertex, u, v});
            raw_edges.emplace_back(u - 1, v - 1, parse_rational(line[3]),
                                   parse_rational(line[4]));
        } else if (line[0].text == "b:") {
            saw_b = true;
            for (std::size_t i = 1; i < line.size(); ++i) {
                have.push_back(parse_int(line[i], 0, 1'000'000'000'000LL, "amount"));
            }
        } else if (line[0].text == "q:") {
            saw_q = true;
            for (std::size_t i = 1; i < line.size(); ++i) {
                want.push_back(parse_int(line[i], 0, 1'000'000'000'000LL, "amount"));
            }
        } else {
            fail(line[0], "expected 'edge', 'b:' or 'q:' lines");
        }
    }
    if (!saw_b || !saw_q) fail_eof("missing 'b:' or 'q:' line");
    if (have.size() != want.size()) fail_eof("'b:' and 'q:' must have the same length");
    if (max_vertex > static_cast<int>(have.size())) {
        fail_eof("edge endpoint beyond the container count");
    }
    instance.n = static_cast<int>(have.size());
    instance.have = std::move(have);
    instance.want = std::move(want);
    for (auto& [u, v, cuv, cvu] : raw_edges) {
        instance.edges.push_back(TreeEdgeCost{u, v, cuv, cvu});
    }
    return instance;
}

}  // namespace adversolve
