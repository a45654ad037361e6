#include "adversolve/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace adversolve {

std::vector<Move> equalize(const std::vector<Rational>& amounts) {
    const int n = static_cast<int>(amounts.size());
    if (n < 1) throw std::invalid_argument("need at least one container");
    Rational total(0);
    for (const Rational& r : amounts) {
        if (r.sign() < 0) throw std::invalid_argument("amounts must be nonnegative");
        total += r;
    }
    Rational mean = total / Rational(n);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return amounts[a] < amounts[b]; });

    std::vector<Rational> current = amounts;
    std::vector<Move> moves;
    int left = 0, right = n - 1;
    while (left < right) {
        if (current[order[left]] == mean) {
            ++left;
        } else if (current[order[right]] == mean) {
            --right;
        } else {
            Rational need = mean - current[order[left]];
            Rational spare = current[order[right]] - mean;
            Rational x = Rational::min(need, spare);
            current[order[left]] += x;
            current[order[right]] -= x;
            moves.push_back(Move{order[right], order[left], x});
        }
    }
    return moves;
}

bool line_feasible(const LineInstance& instance, const Rational& x) {
    const int n = static_cast<int>(instance.amounts.size());
    if (n < 1) throw std::invalid_argument("need at least one container");
    if (static_cast<int>(instance.losses.size()) != n - 1) {
        throw std::invalid_argument("need one transport loss per segment");
    }
    Rational surplus(0);
    for (int i = 0; i < n; ++i) {
        Rational required = instance.requirement ? instance.requirement(i, x) : x;
        surplus += instance.amounts[i] - required;
        if (i + 1 < n) {
            if (surplus >= Rational(0)) {
                surplus = Rational::max(surplus - instance.losses[i], Rational(0));
            } else {
                surplus -= instance.losses[i];
            }
        }
    }
    return surplus >= Rational(0);
}

Rational line_maximin(const LineInstance& instance, bool integer_mode, const Rational& eps) {
    Rational total(0);
    for (const Rational& r : instance.amounts) total += r;
    Rational mean = total / Rational(static_cast<std::int64_t>(instance.amounts.size()));

    Rational lo(0);
    if (!line_feasible(instance, lo)) {
        // Only a custom requirement can make X = 0 infeasible.
        throw std::runtime_error("no feasible allocation target");
    }
    // An upper bound: without a custom requirement nothing above the mean is
    // reachable; with one, grow until infeasible.
    Rational hi = mean + Rational(1);
    while (line_feasible(instance, hi)) {
        if (!instance.requirement) {
            throw std::logic_error("feasibility above the mean contradicts conservation");
        }
        hi = hi * Rational(2) + Rational(1);
        if (hi > Rational(std::int64_t{1} << 40)) {
            throw std::runtime_error("no finite maximin value");
        }
    }

    if (integer_mode) {
        std::int64_t ilo = 0;
        std::int64_t ihi = hi.floor();
        while (ilo < ihi) {
            std::int64_t mid = ilo + (ihi - ilo + 1) / 2;
            if (line_feasible(instance, Rational(mid))) {
                ilo = mid;
            } else {
                ihi = mid - 1;
            }
        }
        return Rational(ilo);
    }
    if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / Rational(2);
        if (line_feasible(instance, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

TreeReallocResult tree_realloc_cost(const TreeReallocInstance& instance, int root) {
    const int n = instance.n;
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    if (static_cast<int>(instance.edges.size()) != n - 1) {
        throw std::invalid_argument("a tree on n vertices needs n-1 edges");
    }
    if (static_cast<int>(instance.have.size()) != n ||
        static_cast<int>(instance.want.size()) != n) {
        throw std::invalid_argument("have/want must cover every vertex");
    }
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    long long total_have = 0, total_want = 0;
    for (int i = 0; i < n; ++i) {
        if (instance.have[i] < 0 || instance.want[i] < 0) {
            throw std::invalid_argument("amounts must be nonnegative");
        }
        total_have += instance.have[i];
        total_want += instance.want[i];
    }
    if (total_have != total_want) {
        throw std::invalid_argument("total supply must equal total demand");
    }

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge idx)
    for (std::size_t e = 0; e < instance.edges.size(); ++e) {
        const TreeEdgeCost& edge = instance.edges[e];
        if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n || edge.u == edge.v) {
            throw std::invalid_argument("bad tree edge");
        }
        if (edge.cost_uv.sign() < 0 || edge.cost_vu.sign() < 0) {
            throw std::invalid_argument("edge costs must be nonnegative");
        }
        adj[edge.u].emplace_back(edge.v, static_cast<int>(e));
        adj[edge.v].emplace_back(edge.u, static_cast<int>(e));
    }

    std::vector<int> parent(n, -1), parent_edge(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (auto [v, e] : adj[u]) {
            if (parent[v] == -1) {
                parent[v] = u;
                parent_edge[v] = e;
                stack.push_back(v);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("edges do not form a tree");
    }

    TreeReallocResult result;
    result.total_cost = Rational(0);
    std::vector<long long> surplus(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        surplus[v] += instance.have[v] - instance.want[v];
        if (v == root) continue;
        const TreeEdgeCost& edge = instance.edges[parent_edge[v]];
        long long s = surplus[v];
        surplus[parent[v]] += s;
        if (s == 0) continue;
        bool upward = s > 0;  // from v towards its parent
        long long amount = upward ? s : -s;
        int from = upward ? v : parent[v];
        int to = upward ? parent[v] : v;
        const Rational& unit = (from == edge.u) ? edge.cost_uv : edge.cost_vu;
        result.total_cost += Rational(amount) * unit;
        result.flows.push_back(EdgeFlow{from, to, amount});
    }
    if (surplus[root] != 0) throw std::logic_error("root surplus must vanish");
    return result;
}

}  // namespace adversolve
