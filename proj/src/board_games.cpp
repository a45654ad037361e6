#include "adversolve/board_games.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "adversolve/game_core.hpp"

namespace adversolve {

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1) {
        throw std::invalid_argument("tree on " + std::to_string(n) + " vertices needs " +
                                    std::to_string(n - 1) + " edges, got " +
                                    std::to_string(edges.size()));
    }
    Tree t;
    t.n = n;
    t.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("tree edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("tree has a self-loop");
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : t.adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++visited;
                stack.push_back(v);
            }
        }
    }
    if (visited != n) throw std::invalid_argument("tree is not connected");
    return t;
}

namespace {

// Bottom-up pass rooted at `root`: win[i] = no son of i wins; ntwin[i] counts
// winning sons. parent[] and a DFS order come along for the rerooting pass.
struct RootedPass {
    std::vector<char> win;
    std::vector<int> ntwin;
    std::vector<int> parent;
    std::vector<int> preorder;
};

RootedPass rooted_pass(const Tree& tree, int root, std::size_t* operations) {
    RootedPass out;
    out.win.assign(tree.n, 0);
    out.ntwin.assign(tree.n, 0);
    out.parent.assign(tree.n, -1);
    out.preorder.reserve(tree.n);

    std::vector<int> stack{root};
    out.parent[root] = root;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.preorder.push_back(u);
        for (int v : tree.adj[u]) {
            if (operations) ++*operations;
            if (out.parent[v] == -1) {
                out.parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    for (auto it = out.preorder.rbegin(); it != out.preorder.rend(); ++it) {
        int u = *it;
        if (operations) ++*operations;
        out.win[u] = out.ntwin[u] == 0;
        if (u != root && out.win[u]) ++out.ntwin[out.parent[u]];
    }
    out.parent[root] = -1;
    return out;
}

}  // namespace

bool path_game_rooted(const Tree& tree, int root) {
    if (root < 0 || root >= tree.n) throw std::invalid_argument("root out of range");
    RootedPass pass = rooted_pass(tree, root, nullptr);
    return pass.win[root];
}

std::vector<bool> path_game_all_starts(const Tree& tree, std::size_t* operations) {
    const int root = 0;
    RootedPass pass = rooted_pass(tree, root, operations);

    std::vector<int> ntrwin(tree.n, 0);
    std::vector<bool> rwin(tree.n, false);
    ntrwin[root] = pass.ntwin[root];
    rwin[root] = ntrwin[root] == 0;
    for (int u : pass.preorder) {
        for (int v : tree.adj[u]) {
            if (operations) ++*operations;
            if (v == pass.parent[u]) continue;
            int without_son = ntrwin[u] - (pass.win[v] ? 1 : 0);
            ntrwin[v] = pass.ntwin[v] + (without_son == 0 ? 1 : 0);
            rwin[v] = ntrwin[v] == 0;
        }
    }
    return rwin;
}

namespace {

void check_even_gather_args(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("even_gather needs n >= 1 and k >= 1");
}

bool even_gather_dp(int n, int k, int target) {
    std::vector<std::array<char, 2>> win(n + 1);
    win[0][0] = 1;
    win[0][1] = 0;
    for (int i = 1; i <= n; ++i) {
        for (int x = 0; x < 2; ++x) {
            int x_next = (i + x + 1) & 1;
            char w = 0;
            for (int c = 1; c <= std::min(i, k); ++c) {
                if (win[i - c][x_next] == 0) {
                    w = 1;
                    break;
                }
            }
            win[i][x] = w;
        }
    }
    return win[n][target] != 0;
}

bool even_gather_fast(int n, int k, int target) {
    constexpr long long kNegInf = std::numeric_limits<long long>::min() / 2;
    // last[x][y][z]: largest i with win[x][i] == z and i mod 2 == y.
    long long last[2][2][2];
    for (auto& plane : last)
        for (auto& row : plane) row[0] = row[1] = kNegInf;
    char win0 = 1, win1 = 0;
    last[0][0][win0] = 0;
    last[1][0][win1] = 0;
    for (int i = 1; i <= n; ++i) {
        int y = i & 1;
        // x = 0: the opponent-side target parity is (i+1) mod 2.
        int x0 = (i + 1) & 1;
        win0 = (i - last[x0][0][0] <= k) || (i - last[x0][1][0] <= k);
        // x = 1: it is i mod 2.
        int x1 = i & 1;
        win1 = (i - last[x1][0][0] <= k) || (i - last[x1][1][0] <= k);
        last[0][y][win0] = i;
        last[1][y][win1] = i;
    }
    return (target == 0 ? win0 : win1) != 0;
}

bool even_gather_pattern(int n, int k, int target) {
    bool lose;
    if (target == 0) {
        if (n % 2 != 0) {
            lose = (k % 2 == 0) ? n % (k + 2) == 1 : n % (2 * k + 2) == 1;
        } else {
            lose = (k % 2 == 0) ? false : n % (2 * k + 2) == k + 1;
        }
    } else {
        if (n % 2 != 0) {
            lose = (k % 2 == 0) ? n % (k + 2) == k + 1 : n % (2 * k + 2) == k + 2;
        } else {
            lose = (k % 2 == 0) ? n % (k + 2) == 0 : n % (2 * k + 2) == 0;
        }
    }
    return !lose;
}

}  // namespace

bool even_gather(int n, int k, GatherTarget target, EvenGatherMode mode) {
    check_even_gather_args(n, k);
    int x = target == GatherTarget::Even ? 0 : 1;
    switch (mode) {
        case EvenGatherMode::Dp:
            return even_gather_dp(n, k, x);
        case EvenGatherMode::Fast:
            return even_gather_fast(n, k, x);
        case EvenGatherMode::Pattern:
            return even_gather_pattern(n, k, x);
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<Rational>> board_gather_table(const std::vector<Rational>& values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw std::invalid_argument("board must be nonempty");
    std::vector<Rational> prefix(n + 1, Rational(0));
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + values[i];
    auto sum = [&](int a, int b) { return prefix[b + 1] - prefix[a]; };

    std::vector<std::vector<Rational>> smax(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) smax[i][i] = values[i];
    for (int len = 1; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            int j = i + len;
            Rational left = values[i] + sum(i + 1, j) - smax[i + 1][j];
            Rational right = values[j] + sum(i, j - 1) - smax[i][j - 1];
            smax[i][j] = Rational::max(left, right);
        }
    }
    return smax;
}

bool board_gather_pick_left(const std::vector<Rational>& values,
                            const std::vector<std::vector<Rational>>& smax, int i, int j) {
    if (i == j) return true;
    Rational inside_left(0), inside_right(0);
    for (int t = i + 1; t <= j; ++t) inside_left += values[t];
    for (int t = i; t <= j - 1; ++t) inside_right += values[t];
    Rational left = values[i] + inside_left - smax[i + 1][j];
    Rational right = values[j] + inside_right - smax[i][j - 1];
    return left >= right;
}

BoardGatherResult board_gather(const std::vector<Rational>& values) {
    const int n = static_cast<int>(values.size());
    auto smax = board_gather_table(values);
    Rational total(0);
    for (const Rational& v : values) total += v;
    Rational odd_sum(0), even_sum(0);
    for (int i = 0; i < n; ++i) {
        // 1-indexed parity, as the strategy is phrased over object numbers.
        if (i % 2 == 0) {
            odd_sum += values[i];
        } else {
            even_sum += values[i];
        }
    }
    BoardGatherResult out;
    out.best_score = smax[0][n - 1];
    out.first_player_diff = out.best_score + out.best_score - total;
    out.parity_guarantee = Rational::max(odd_sum, even_sum);
    return out;
}

std::string lex_game(const std::string& board) {
    const int n = static_cast<int>(board.size());
    if (n == 0) throw std::invalid_argument("board must be nonempty");
    std::vector<std::vector<std::string>> res(n, std::vector<std::string>(n));
    for (int i = 0; i < n; ++i) res[i][i] = std::string(1, board[i]);
    for (int len = 1; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            int j = i + len;
            std::string take_left = board[i] + res[i + 1][j];
            std::string take_right = board[j] + res[i][j - 1];
            // 0-indexed form of (i-1 + n-j): objects already removed.
            bool first_player = (i + (n - 1 - j)) % 2 == 0;
            res[i][j] = first_player ? std::min(take_left, take_right)
                                     : std::max(take_left, take_right);
        }
    }
    return res[0][n - 1];
}

MultiRoundResult multi_round_gather(const MultiRoundConfig& config) {
    const int n = config.pile;
    if (n < 1) throw std::invalid_argument("multi-round pile must be positive");
    auto check_moves = [&](std::vector<int> moves) {
        std::sort(moves.begin(), moves.end());
        moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
        if (moves.empty() || moves.front() != 1) {
            throw std::invalid_argument("move set must contain 1");
        }
        if (moves.back() > n) throw std::invalid_argument("move exceeds pile size");
        return moves;
    };
    std::array<std::vector<int>, 2> moves{check_moves(config.moves1), check_moves(config.moves2)};

    // gmax[p][i][j][q], filled in increasing i+j+q, ties in increasing q.
    auto idx = [&](int i, int j, int q) {
        return (static_cast<std::size_t>(i) * (n + 1) + j) * (n + 1) + q;
    };
    std::array<std::vector<int>, 2> gmax;
    gmax[0].assign(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), 0);
    gmax[1] = gmax[0];

    const bool winner_starts = config.rule == MultiRoundRule::WinnerStarts;
    for (int sum = 0; sum <= n; ++sum) {
        for (int q = 0; q <= sum; ++q) {
            for (int i = 0; sum - q - i >= 0; ++i) {
                int j = sum - q - i;
                for (int p = 0; p < 2; ++p) {
                    int value;
                    if (q == 0) {
                        if (i == 0) {
                            value = 0;  // the opponent keeps j; nothing returns
                        } else if (j == 0) {
                            continue;  // unreachable: the last taker has j >= 1
                        } else if (winner_starts) {
                            value = i - gmax[1 - p][idx(0, 0, i)];
                        } else {
                            value = gmax[p][idx(0, 0, i)];
                        }
                    } else {
                        value = std::numeric_limits<int>::min();
                        for (int k : moves[p]) {
                            if (k > q) break;
                            value = std::max(value,
                                             (i + j + q) - gmax[1 - p][idx(j, i + k, q - k)]);
                        }
                    }
                    gmax[p][idx(i, j, q)] = value;
                }
            }
        }
    }

    MultiRoundResult out;
    out.first_player_total = gmax[0][idx(0, 0, n)];
    int doubled = 2 * out.first_player_total;
    out.verdict = doubled > n   ? MultiRoundResult::Verdict::Victory
                  : doubled == n ? MultiRoundResult::Verdict::Draw
                                 : MultiRoundResult::Verdict::Defeat;
    return out;
}

std::vector<int> treblecross_decompose(const TreblecrossBoard& board) {
    if (board.length < 3) throw std::invalid_argument("treblecross board needs length >= 3");
    int prev = std::numeric_limits<int>::min() / 2;
    for (int pos : board.marked) {
        if (pos < 1 || pos > board.length) {
            throw std::invalid_argument("marked position out of range");
        }
        if (pos - prev <= 2) {
            throw std::runtime_error("immediate win exists or invalid initial board");
        }
        prev = pos;
    }
    std::vector<char> blocked(board.length + 1, 0);
    for (int pos : board.marked) {
        for (int d = -2; d <= 2; ++d) {
            int at = pos + d;
            if (at >= 1 && at <= board.length) blocked[at] = 1;
        }
    }
    std::vector<int> lengths;
    int run = 0;
    for (int pos = 1; pos <= board.length; ++pos) {
        if (!blocked[pos]) {
            ++run;
        } else if (run > 0) {
            lengths.push_back(run);
            run = 0;
        }
    }
    if (run > 0) lengths.push_back(run);
    return lengths;
}

int treblecross_grundy(int q) {
    if (q < 0) throw std::invalid_argument("treblecross grundy of negative length");
    static std::mutex memo_mutex;
    static std::vector<int> memo{0};  // G(0) = 0
    std::lock_guard<std::mutex> lock(memo_mutex);
    for (int next = static_cast<int>(memo.size()); next <= q; ++next) {
        std::vector<int> reached;
        reached.reserve(next);
        for (int i = 1; i <= next; ++i) {
            reached.push_back(memo[std::max(i - 3, 0)] ^ memo[std::max(next - i - 2, 0)]);
        }
        memo.push_back(mex(std::move(reached)));
    }
    return memo[q];
}

bool parallel_treblecross(const std::vector<std::pair<TreblecrossBoard, int>>& instances) {
    std::vector<std::pair<int, int>> components;
    components.reserve(instances.size());
    for (const auto& [board, multiplicity] : instances) {
        if (multiplicity < 0) throw std::invalid_argument("multiplicity must be nonnegative");
        int grundy = 0;
        for (int len : treblecross_decompose(board)) grundy ^= treblecross_grundy(len);
        components.emplace_back(grundy, multiplicity);
    }
    return combined_grundy(components) != 0;
}

}  // namespace adversolve
