#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "adversolve/rational.hpp"

namespace adversolve {

struct Move {
    int from = 0;
    int to = 0;
    Rational amount;
};

// Equalizes container amounts to their mean with at most n-1 moves: a sorted
// two-pointer sweep pairing the emptiest container with the fullest.
std::vector<Move> equalize(const std::vector<Rational>& amounts);

// Containers on a line; moving anything across the segment between i and i+1
// consumes losses[i] resource units, once per traversal direction-agnostic.
struct LineInstance {
    std::vector<Rational> amounts;
    std::vector<Rational> losses;  // size amounts.size() - 1
    // Optional per-container requirement f_i(X), nondecreasing in X; the
    // uniform problem uses f_i(X) = X.
    std::function<Rational(int, const Rational&)> requirement;
};

// Single left-to-right surplus sweep: E += r(i) - f_i(X); crossing segment i
// costs q(i) (a nonnegative surplus is clamped at zero). True iff the final
// surplus is nonnegative.
bool line_feasible(const LineInstance& instance, const Rational& x);

// Largest X with line_feasible(X): exact integer binary search in integer
// mode, rational bisection to within eps otherwise. Throws when no value is
// feasible (possible only with a custom requirement).
Rational line_maximin(const LineInstance& instance, bool integer_mode,
                      const Rational& eps = Rational(1, 1000000));

struct TreeEdgeCost {
    int u = 0;
    int v = 0;
    Rational cost_uv;  // per unit moved u -> v
    Rational cost_vu;
};

struct TreeReallocInstance {
    int n = 0;
    std::vector<TreeEdgeCost> edges;  // exactly n-1, forming a tree
    std::vector<long long> have;     // b(i) >= 0
    std::vector<long long> want;     // q(i) >= 0, same total as have
};

struct EdgeFlow {
    int from = 0;
    int to = 0;
    long long amount = 0;
};

struct TreeReallocResult {
    Rational total_cost;
    std::vector<EdgeFlow> flows;  // one entry per edge with nonzero flow
};

// Minimum-cost reallocation on a tree: a post-order pass accumulates each
// subtree's surplus and charges it across the parent edge in the required
// direction. The root choice does not affect the cost.
TreeReallocResult tree_realloc_cost(const TreeReallocInstance& instance, int root = 0);

}  // namespace adversolve
