#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "adversolve/allocation.hpp"
#include "adversolve/board_games.hpp"
#include "adversolve/pursuit.hpp"
#include "adversolve/state_graph.hpp"

namespace adversolve {

// Parse failure with the 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// `states N` / `state <id> <1|2|->` / `terminal <id> <W|D|L>` /
// `edge <from> <to>`; ids are 1-based in the text, 0-based in the result.
// `#` starts a comment. Duplicate declarations and dangling ids are rejected.
StateGraph parse_state_graph(std::istream& in);

// Same grammar with `edge <from> <to> <dm> <do>` score deltas (rationals) and
// rational `terminal <id> <value>` lines.
ScoredStateGraph parse_scored_state_graph(std::istream& in);

// One or more `states ...` blocks; every block must be a plain state graph.
std::vector<StateGraph> parse_state_graph_list(std::istream& in);

// `tree N` + `edge u v` lines (1-based).
Tree parse_tree(std::istream& in);

// `board N` followed by N whitespace-separated rationals, or by one
// double-quoted character string of length N.
struct BoardInput {
    std::vector<Rational> values;  // empty when the board is a string
    std::string letters;
};
BoardInput parse_board(std::istream& in);

// One or more blocks of `treblecross N` / `marked p1 p2 ...` / `mult m`.
std::vector<std::pair<TreblecrossBoard, int>> parse_treblecross(std::istream& in);

// `multiround N | s1: a b c | s2: a b | rule: case1`.
MultiRoundConfig parse_multiround(std::istream& in);

// `digraph n m` + `arc u v` + `cops ...` + `robbers ...` +
// `schedule (c,1)(r,1)...` + optional `safe j: v1 v2` + `Bprime x` +
// `Bsecond x`.
PursuitConfig parse_pursuit(std::istream& in);

// `graph n m` + `e u v` lines (1-based).
UndirectedGraph parse_undirected_graph(std::istream& in);

// One line of whitespace-separated rationals.
std::vector<Rational> parse_amounts(std::istream& in);

// `r: ...` and `q: ...` lines.
LineInstance parse_line_instance(std::istream& in);

// `edge u v c_uv c_vu` lines, then `b: ...` and `q: ...` (n inferred).
TreeReallocInstance parse_tree_realloc(std::istream& in);

}  // namespace adversolve
