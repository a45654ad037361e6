#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "adversolve/allocation.hpp"
#include "adversolve/bet_strategy.hpp"
#include "adversolve/board_games.hpp"
#include "adversolve/coin_search.hpp"
#include "adversolve/game_core.hpp"
#include "adversolve/guess_string.hpp"
#include "adversolve/hotter_colder.hpp"
#include "adversolve/power_sum.hpp"
#include "adversolve/pursuit.hpp"
#include "adversolve/text_formats.hpp"

namespace {

using namespace adversolve;

constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct Options {
    std::string input = "-";
    bool trace = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::ios_base::failure("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* outcome_word(Outcome o) {
    switch (o) {
        case Outcome::Victory: return "WIN";
        case Outcome::Draw: return "DRAW";
        case Outcome::Defeat: return "LOSE";
    }
    return "?";
}

// key=value field on a simulation line, e.g. N=12.
std::string kv_field(const std::vector<std::string>& tokens, const std::string& key,
                     bool required, const std::string& fallback = "") {
    for (const std::string& t : tokens) {
        if (t.rfind(key, 0) == 0) return t.substr(key.size());
    }
    if (required) throw std::runtime_error("missing field '" + key + "'");
    return fallback;
}

std::vector<std::string> simulation_line(const std::string& text, const std::string& head) {
    std::istringstream in(text);
    std::string token;
    std::vector<std::string> tokens;
    while (in >> token) {
        if (token[0] == '#') break;
        tokens.push_back(token);
    }
    if (tokens.empty() || tokens[0] != head) {
        throw std::runtime_error("expected a '" + head + " ...' line");
    }
    return tokens;
}

long long to_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("bad " + what + ": '" + text + "'");
    }
}

void print_policy_trace(const StateGraph& g, const std::vector<int>& best_move, int from) {
    std::cout << "trace line";
    int at = from;
    std::vector<char> seen(g.n, 0);
    while (at != -1 && !seen[at]) {
        seen[at] = 1;
        std::cout << " " << at + 1;
        at = best_move[at];
    }
    std::cout << "\n";
}

int run_solve_graph(const Options& opt, const std::string& infinite, int state, bool all) {
    std::istringstream in(read_input(opt.input));
    StateGraph g = parse_state_graph(in);
    OutcomeSolution sol;
    if (infinite.empty()) {
        sol = solve_outcomes(g);
    } else {
        Outcome inf = infinite == "W"   ? Outcome::Victory
                      : infinite == "D" ? Outcome::Draw
                                        : Outcome::Defeat;
        sol = solve_cyclic(g, InfiniteOutcome::uniform(inf));
    }
    if (state < 1 || state > g.n) throw std::runtime_error("state out of range");
    if (all) {
        for (int s = 0; s < g.n; ++s) {
            std::cout << "state " << s + 1 << " result=" << outcome_word(sol.result[s]) << "\n";
        }
    }
    std::cout << "result=" << outcome_word(sol.result[state - 1]) << "\n";
    if (opt.trace) print_policy_trace(g, sol.best_move, state - 1);
    return 0;
}

int run_solve_scores(const Options& opt, int state) {
    std::istringstream in(read_input(opt.input));
    ScoredStateGraph g = parse_scored_state_graph(in);
    auto sol = solve_scores(g);
    if (state < 1 || state > g.n) throw std::runtime_error("state out of range");
    std::cout << "value=" << sol.max_dif[state - 1].to_string() << "\n";
    if (opt.trace) {
        std::cout << "trace line";
        int at = state - 1;
        while (at != -1) {
            std::cout << " " << at + 1;
            at = sol.best_move[at];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_product(const Options& opt, std::size_t cap) {
    std::istringstream in(read_input(opt.input));
    std::vector<StateGraph> games = parse_state_graph_list(in);
    ProductOptions popts;
    popts.state_cap = cap;
    ProductGraph prod = product_graph(games, popts);
    auto sol = solve_outcomes(prod.graph);
    std::cout << "states=" << prod.graph.n << " edges=" << prod.graph.edge_count()
              << " result=" << outcome_word(sol.result[0]) << "\n";
    return 0;
}

int run_grundy(const Options& opt, bool all) {
    std::istringstream in(read_input(opt.input));
    StateGraph g = parse_state_graph(in);
    auto grundy = grundy_numbers(g);
    if (all) {
        for (int s = 0; s < g.n; ++s) {
            std::cout << "state " << s + 1 << " grundy=" << grundy[s] << "\n";
        }
    }
    std::cout << "grundy=" << grundy[0] << "\n";
    return 0;
}

int run_treblecross(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    auto instances = parse_treblecross(in);
    if (opt.trace) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            auto lengths = treblecross_decompose(instances[i].first);
            int grundy = 0;
            std::cout << "trace instance " << i + 1 << " intervals";
            for (int len : lengths) {
                std::cout << " " << len;
                grundy ^= treblecross_grundy(len);
            }
            std::cout << " grundy=" << grundy << " mult=" << instances[i].second << "\n";
        }
    }
    std::cout << "result=" << (parallel_treblecross(instances) ? "WIN" : "LOSE") << "\n";
    return 0;
}

int run_tree_path(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    Tree tree = parse_tree(in);
    auto wins = path_game_all_starts(tree);
    std::cout << "wins=";
    for (bool w : wins) std::cout << (w ? '1' : '0');
    std::cout << "\n";
    return 0;
}

int run_gather_even(int n, int k, const std::string& target, const std::string& mode) {
    GatherTarget t = target == "odd" ? GatherTarget::Odd : GatherTarget::Even;
    EvenGatherMode m = mode == "dp"     ? EvenGatherMode::Dp
                       : mode == "fast" ? EvenGatherMode::Fast
                                        : EvenGatherMode::Pattern;
    std::cout << "result=" << (even_gather(n, k, t, m) ? "WIN" : "LOSE") << "\n";
    return 0;
}

int run_gather_board(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    BoardInput board = parse_board(in);
    if (board.values.empty()) throw std::runtime_error("gather-board needs numeric values");
    auto res = board_gather(board.values);
    std::cout << "smax=" << res.best_score.to_string()
              << " diff=" << res.first_player_diff.to_string()
              << " parity_guarantee=" << res.parity_guarantee.to_string() << "\n";
    return 0;
}

int run_gather_lex(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    BoardInput board = parse_board(in);
    if (board.letters.empty()) throw std::runtime_error("gather-lex needs a quoted string");
    if (board.letters.size() > 500) {
        throw std::runtime_error("gather-lex boards are limited to 500 characters");
    }
    std::cout << "result=" << lex_game(board.letters) << "\n";
    return 0;
}

int run_gather_rounds(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    MultiRoundConfig config = parse_multiround(in);
    auto res = multi_round_gather(config);
    const char* verdict = res.verdict == MultiRoundResult::Verdict::Victory ? "WIN"
                          : res.verdict == MultiRoundResult::Verdict::Draw ? "DRAW"
                                                                           : "LOSE";
    std::cout << "total=" << res.first_player_total << " result=" << verdict << "\n";
    return 0;
}

int run_guess_string(const Options& opt) {
    auto tokens = simulation_line(read_input(opt.input), "secret");
    // secret <digits|""> over K=<k>
    if (tokens.size() != 4 || tokens[2] != "over") {
        throw std::runtime_error("expected: secret <digits> over K=<k>");
    }
    int alphabet = static_cast<int>(to_int(kv_field(tokens, "K=", true), "alphabet size"));
    if (alphabet < 1 || alphabet > 10) {
        throw std::runtime_error("alphabet size must be in [1, 10] for digit secrets");
    }
    std::string digits = tokens[1];
    if (digits == "\"\"") digits.clear();
    std::vector<int> secret;
    for (char c : digits) {
        if (c < '0' || c >= '0' + alphabet) {
            throw std::runtime_error("secret symbol out of the alphabet");
        }
        secret.push_back(c - '0');
    }
    FixedSecretOracle oracle(secret);
    std::vector<GuessTraceEntry> trace;
    auto res = guess_secret_string(oracle, alphabet, &trace);
    if (opt.trace) {
        for (const auto& entry : trace) {
            std::cout << "trace ask ";
            for (int s : entry.asked) std::cout << static_cast<char>('0' + s);
            std::cout << " -> " << (entry.answer ? "yes" : "no") << "\n";
        }
    }
    std::cout << "secret=";
    for (int s : res.secret) std::cout << static_cast<char>('0' + s);
    std::cout << " questions=" << res.questions
              << " bound=" << (alphabet + 1) * (static_cast<int>(secret.size()) + 1) << "\n";
    return 0;
}

int run_hotter_colder(const Options& opt) {
    auto tokens = simulation_line(read_input(opt.input), "hc");
    int n = static_cast<int>(to_int(kv_field(tokens, "N=", true), "N"));
    int d = static_cast<int>(to_int(kv_field(tokens, "D=", false, "1"), "D"));
    if (n > 64 || d > 4) {
        throw std::runtime_error("hotter-colder tables are limited to N<=64, D<=4");
    }
    std::string mode_text = kv_field(tokens, "mode=", false, "valid");
    HcMode mode;
    if (mode_text == "valid") {
        mode = HcMode::ValidOnly;
    } else if (mode_text == "any") {
        mode = HcMode::Unrestricted;
    } else {
        throw std::runtime_error("mode must be valid or any");
    }
    HcTable table = hc_min_questions(n, d, mode);
    std::cout << "questions=" << table.count()
              << " total_asks=" << (n == 1 ? 0 : table.count() + d) << "\n";
    std::string secret_text = kv_field(tokens, "S=", false);
    if (!secret_text.empty()) {
        int secret = static_cast<int>(to_int(secret_text, "secret"));
        if (secret < 1 || secret > n) throw std::runtime_error("secret out of range");
        std::vector<std::pair<int, int>> asked;
        auto res = hc_play(table, [&](int y, int x) {
            asked.emplace_back(y, x);
            long long dy = std::llabs(static_cast<long long>(secret) - y);
            long long dx = std::llabs(static_cast<long long>(secret) - x);
            return dy <= dx;
        });
        if (opt.trace) {
            for (auto [y, x] : asked) {
                std::cout << "trace ask " << y << " versus " << x << "\n";
            }
        }
        std::cout << "secret=" << res.secret << " used=" << res.answered_questions << "\n";
    }
    return 0;
}

const char* outcome_text(CoinOutcome o) {
    switch (o) {
        case CoinOutcome::Balanced: return "balanced";
        case CoinOutcome::LeftLight: return "left_light";
        case CoinOutcome::LeftHeavy: return "left_heavy";
    }
    return "?";
}

int run_coins(const Options& opt) {
    auto tokens = simulation_line(read_input(opt.input), "coins");
    int n = static_cast<int>(to_int(kv_field(tokens, "n=", true), "coin count"));
    std::string assign = kv_field(tokens, "assign=", false);

    std::unique_ptr<CoinAnswerer> answerer;
    AdaptiveWorstCaseAnswerer* adaptive = nullptr;
    if (assign.empty()) {
        auto owned = std::make_unique<AdaptiveWorstCaseAnswerer>(n);
        adaptive = owned.get();
        answerer = std::move(owned);
    } else {
        auto comma = assign.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("assign looks like assign=<idx>,<L|H>");
        }
        int coin = static_cast<int>(to_int(assign.substr(0, comma), "coin index"));
        std::string dir = assign.substr(comma + 1);
        if (coin < 1 || coin > n || (dir != "L" && dir != "H")) {
            throw std::runtime_error("assign looks like assign=<idx>,<L|H>");
        }
        answerer = std::make_unique<FixedAssignmentAnswerer>(coin - 1, dir == "L");
    }

    std::vector<CoinTraceEntry> trace;
    auto res = coin_run(n, *answerer, opt.trace ? &trace : nullptr);
    if (opt.trace) {
        for (const auto& entry : trace) {
            std::cout << "trace weigh left";
            for (int c : entry.left) std::cout << " " << c + 1;
            std::cout << " right";
            for (int c : entry.right) std::cout << " " << c + 1;
            std::cout << " -> " << outcome_text(entry.outcome)
                      << " uncertainty=" << entry.uncertainty_after << "\n";
        }
    }
    if (adaptive) {
        auto survivors = adaptive->survivors();
        if (survivors.size() != 1 || survivors[0].first != res.coin ||
            survivors[0].second != res.lighter) {
            throw std::runtime_error("adaptive adversary left an ambiguous assignment");
        }
    }
    std::cout << "coin=" << res.coin + 1 << " type=" << (res.lighter ? "lighter" : "heavier")
              << " questions=" << res.questions << "\n";
    return 0;
}

int run_bets(const Options& opt) {
    auto tokens = simulation_line(read_input(opt.input), "bets");
    int blacks = static_cast<int>(to_int(kv_field(tokens, "N=", true), "black count"));
    int reds = static_cast<int>(to_int(kv_field(tokens, "R=", true), "red count"));
    BetTable table(blacks, reds);
    const Rational& best = table.pmax(blacks, reds);
    std::cout << "pmax=" << best.to_string() << " pmax_float=" << fmt_double(best.to_double());
    if (blacks + reds >= 1) {
        BetDecision d = table.decision(blacks, reds);
        std::cout << " color=" << (d.bet_black ? "black" : "red")
                  << " fraction=" << d.fraction.to_string();
    }
    std::cout << "\n";
    if (opt.trace) {
        for (int i = 0; i <= blacks; ++i) {
            for (int j = 0; j <= reds; ++j) {
                std::cout << "trace pmax " << i << " " << j << " = "
                          << table.pmax(i, j).to_string() << "\n";
            }
        }
    }
    return 0;
}

int run_powersum(const Options& opt, const std::string& mode) {
    std::istringstream in(read_input(opt.input));
    std::string line;
    bool any = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string p_text, q_text, n_text;
        if (!(fields >> p_text)) continue;  // blank line
        if (p_text[0] == '#') continue;
        if (!(fields >> q_text >> n_text)) {
            throw ParseError(line_no, 1, "expected 'P Q N'");
        }
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, 1, "unexpected token '" + extra + "'");
        Rational p = Rational::parse(p_text);
        Rational q = Rational::parse(q_text);
        int n = static_cast<int>(to_int(n_text, "exponent"));
        any = true;
        if (mode == "fast") {
            auto res = power_sum_fast(p, q, n);
            std::cout << fmt_double(res.value);
            if (opt.trace) std::cout << " multiplications=" << res.multiplications;
            std::cout << "\n";
        } else {
            auto res = power_sum_linear(p, q, n);
            if (res.denominator == BigInt(1)) {
                std::cout << res.to_string() << "\n";
            } else {
                std::cout << fmt_double(res.to_double()) << "\n";
            }
        }
    }
    if (!any) throw std::runtime_error("no 'P Q N' triples in the input");
    return 0;
}

int run_pursuit(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    PursuitConfig config = parse_pursuit(in);
    PursuitOutcome outcome = solve_pursuit(config);
    const char* text = outcome == PursuitOutcome::CopsWin    ? "COPS_WIN"
                       : outcome == PursuitOutcome::RobbersWin ? "ROBBERS_WIN"
                                                               : "DRAW";
    std::cout << "result=" << text << "\n";
    return 0;
}

int run_copwin(const Options& opt, const std::string& mode) {
    std::istringstream in(read_input(opt.input));
    UndirectedGraph g = parse_undirected_graph(in);
    CopWinMode m = mode == "naive" ? CopWinMode::Naive : CopWinMode::Fast;
    std::cout << "result=" << (cop_win(g, m) ? "COP_WINS" : "ROBBER_ESCAPES") << "\n";
    return 0;
}

int run_caterpillar(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    UndirectedGraph g = parse_undirected_graph(in);
    bool extended = is_extended_caterpillar(g);
    bool tree = true;
    bool caterpillar = false;
    try {
        caterpillar = is_caterpillar(g);
    } catch (const std::exception&) {
        tree = false;
    }
    std::cout << "tree=" << (tree ? "yes" : "no")
              << " caterpillar=" << (caterpillar ? "yes" : "no")
              << " extended=" << (extended ? "yes" : "no") << "\n";
    return 0;
}

int run_alloc_equalize(const Options& opt) {
    std::istringstream in(read_input(opt.input));
    auto amounts = parse_amounts(in);
    auto moves = equalize(amounts);
    Rational total(0);
    for (const Rational& r : amounts) total += r;
    Rational mean = total / Rational(static_cast<std::int64_t>(amounts.size()));
    std::cout << "target=" << mean.to_string() << " moves=" << moves.size() << "\n";
    for (const Move& m : moves) {
        std::cout << "move from=" << m.from + 1 << " to=" << m.to + 1
                  << " amount=" << m.amount.to_string() << "\n";
    }
    return 0;
}

int run_alloc_line(const Options& opt, bool integer_mode, const std::string& eps_text) {
    std::istringstream in(read_input(opt.input));
    LineInstance instance = parse_line_instance(in);
    Rational eps = Rational::parse(eps_text);
    Rational best = line_maximin(instance, integer_mode, eps);
    std::cout << "xopt=" << best.to_string() << "\n";
    return 0;
}

int run_alloc_tree(const Options& opt, int root) {
    std::istringstream in(read_input(opt.input));
    TreeReallocInstance instance = parse_tree_realloc(in);
    if (root < 1 || root > instance.n) throw std::runtime_error("root out of range");
    auto result = tree_realloc_cost(instance, root - 1);
    std::cout << "cost=" << result.total_cost.to_string() << "\n";
    if (opt.trace) {
        for (const EdgeFlow& f : result.flows) {
            std::cout << "flow from=" << f.from + 1 << " to=" << f.to + 1
                      << " amount=" << f.amount << "\n";
        }
    }
    return 0;
}

int run_selftest(std::uint64_t seed) {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << "selftest " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
        failures += !ok;
    };

    {
        bool ok = true;
        std::mt19937 rng(static_cast<std::uint32_t>(seed + 1));
        for (int iter = 0; iter < 100 && ok; ++iter) {
            int n = std::uniform_int_distribution<int>(1, 9)(rng);
            StateGraph g = StateGraph::impartial(n);
            std::bernoulli_distribution edge(0.4);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (edge(rng)) g.add_edge(u, v);
                }
            }
            for (int s = 0; s < n; ++s) {
                if (g.next[s].empty()) g.set_terminal(s, Outcome::Defeat);
            }
            auto grundy = grundy_numbers(g);
            auto sol = solve_outcomes(g);
            for (int s = 0; s < n; ++s) {
                ok = ok && ((grundy[s] > 0) == (sol.result[s] == Outcome::Victory));
            }
        }
        report("grundy-vs-outcomes", ok);
    }
    {
        bool ok = true;
        for (int k = 1; k <= 8 && ok; ++k) {
            for (int n = 1; n <= 200 && ok; ++n) {
                for (GatherTarget t : {GatherTarget::Even, GatherTarget::Odd}) {
                    bool dp = even_gather(n, k, t, EvenGatherMode::Dp);
                    ok = ok && dp == even_gather(n, k, t, EvenGatherMode::Fast) &&
                         dp == even_gather(n, k, t, EvenGatherMode::Pattern);
                }
            }
        }
        report("gather-even-modes", ok);
    }
    {
        auto res = board_gather({Rational(1), Rational(5), Rational(2)});
        report("board-152", res.first_player_diff == Rational(-2));
    }
    {
        bool ok = true;
        for (int total = 0; total <= 12 && ok; ++total) {
            for (int i = 0; i <= total; ++i) {
                BetTable t(i, total - i);
                Rational binom(1);
                for (int x = 1; x <= i; ++x) binom *= Rational(total - i + x, x);
                Rational pow2(1);
                for (int x = 0; x < total; ++x) pow2 *= Rational(2);
                ok = ok && t.pmax(i, total - i) * binom == pow2;
            }
        }
        report("bets-closed-form", ok);
    }
    {
        bool ok = true;
        for (int p = -6; p <= 6 && ok; ++p) {
            for (int q = -6; q <= 6 && ok; ++q) {
                if (p * p - 4 * q < 0) continue;
                auto exact = power_sum_linear(Rational(p), Rational(q), 20);
                auto fast = power_sum_fast(Rational(p), Rational(q), 20);
                double reference = exact.to_double();
                ok = std::abs(fast.value - reference) <=
                     1e-6 * std::max(1.0, std::abs(reference));
            }
        }
        report("powersum-modes", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(static_cast<std::uint32_t>(seed + 7));
        for (int iter = 0; iter < 50 && ok; ++iter) {
            int n = std::uniform_int_distribution<int>(1, 15)(rng);
            UndirectedGraph g = UndirectedGraph::empty(n);
            std::bernoulli_distribution edge(0.4);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (edge(rng)) g.add_edge(u, v);
                }
            }
            ok = cop_win(g, CopWinMode::Naive) == cop_win(g, CopWinMode::Fast);
        }
        report("copwin-modes", ok);
    }
    {
        bool ok = true;
        std::mt19937 rng(static_cast<std::uint32_t>(seed + 11));
        for (int iter = 0; iter < 100 && ok; ++iter) {
            int n = std::uniform_int_distribution<int>(1, 40)(rng);
            std::vector<Rational> amounts;
            std::uniform_int_distribution<int> v(0, 30);
            for (int i = 0; i < n; ++i) amounts.emplace_back(v(rng));
            auto moves = equalize(amounts);
            ok = moves.size() <= static_cast<std::size_t>(std::max(n - 1, 0));
            Rational total(0);
            for (const Rational& r : amounts) total += r;
            Rational mean = total / Rational(n);
            std::vector<Rational> replay = amounts;
            for (const Move& m : moves) {
                replay[m.from] -= m.amount;
                replay[m.to] += m.amount;
            }
            for (int i = 0; i < n && ok; ++i) ok = replay[i] == mean;
        }
        report("equalize-replay", ok);
    }
    return failures == 0 ? 0 : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adversolve: two-player game solving and adversarial decision toolkit"};
    app.require_subcommand(1);

    Options opt;
    int state = 1;
    bool all = false;
    std::string infinite;
    std::size_t cap = 10'000'000;
    int gather_n = 0, gather_k = 0;
    std::string gather_target = "even", gather_mode = "pattern";
    std::string power_mode = "linear";
    std::string copwin_mode = "fast";
    bool alloc_integer = false;
    std::string eps_text = "1/1000000";
    int tree_root = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "input file, or - for stdin");
        cmd->add_flag("--trace", opt.trace, "print a transcript");
    };

    auto* solve_graph = app.add_subcommand("solve-graph", "solve a state graph");
    add_input(solve_graph);
    solve_graph->add_option("--state", state, "1-based state to report");
    solve_graph->add_flag("--all", all, "report every state");
    solve_graph->add_option("--infinite", infinite, "W|D|L: use the cyclic solver")
        ->check(CLI::IsMember({"W", "D", "L"}));

    auto* solve_scores_cmd = app.add_subcommand("solve-scores", "maximize the score difference");
    add_input(solve_scores_cmd);
    solve_scores_cmd->add_option("--state", state, "1-based state to report");

    auto* product = app.add_subcommand("product", "combine parallel games");
    add_input(product);
    product->add_option("--cap", cap, "state-count cap");

    auto* grundy = app.add_subcommand("grundy", "Grundy numbers of an impartial graph");
    add_input(grundy);
    grundy->add_flag("--all", all, "print the whole table");

    auto* treblecross = app.add_subcommand("treblecross", "parallel treblecross");
    add_input(treblecross);

    auto* tree_path = app.add_subcommand("tree-path", "tree path game, all starts");
    add_input(tree_path);

    auto* gather_even_cmd = app.add_subcommand("gather-even", "even/odd-count gathering");
    gather_even_cmd->add_option("--n", gather_n, "pile size")->required();
    gather_even_cmd->add_option("--k", gather_k, "largest take")->required();
    gather_even_cmd->add_option("--target", gather_target, "even|odd")
        ->check(CLI::IsMember({"even", "odd"}));
    gather_even_cmd->add_option("--mode", gather_mode, "dp|fast|pattern")
        ->check(CLI::IsMember({"dp", "fast", "pattern"}));

    auto* gather_board = app.add_subcommand("gather-board", "value gathering from both ends");
    add_input(gather_board);

    auto* gather_lex = app.add_subcommand("gather-lex", "lexicographic character gathering");
    add_input(gather_lex);

    auto* gather_rounds = app.add_subcommand("gather-rounds", "multi-round pile gathering");
    add_input(gather_rounds);

    auto* guess = app.add_subcommand("guess-string", "subsequence-query string guessing");
    add_input(guess);

    auto* hc = app.add_subcommand("hotter-colder", "hotter/colder question counts");
    add_input(hc);

    auto* coins = app.add_subcommand("coins", "counterfeit coin search");
    add_input(coins);

    auto* bets = app.add_subcommand("bets", "worst-case bet multiplication factors");
    add_input(bets);

    auto* powersum = app.add_subcommand("powersum", "a^N + b^N from P = a+b, Q = a*b");
    add_input(powersum);
    powersum->add_option("--mode", power_mode, "linear|fast")
        ->check(CLI::IsMember({"linear", "fast"}));

    auto* pursuit = app.add_subcommand("pursuit", "cops and robbers on a digraph");
    add_input(pursuit);

    auto* copwin = app.add_subcommand("copwin", "one-cop-one-robber decision");
    add_input(copwin);
    copwin->add_option("--mode", copwin_mode, "naive|fast")
        ->check(CLI::IsMember({"naive", "fast"}));

    auto* caterpillar = app.add_subcommand("caterpillar", "caterpillar recognition");
    add_input(caterpillar);

    auto* alloc_equalize = app.add_subcommand("alloc-equalize", "equalize containers");
    add_input(alloc_equalize);

    auto* alloc_line = app.add_subcommand("alloc-line", "maximin allocation on a line");
    add_input(alloc_line);
    alloc_line->add_flag("--integer", alloc_integer, "integer targets");
    alloc_line->add_option("--eps", eps_text, "bisection tolerance (rational)");

    auto* alloc_tree = app.add_subcommand("alloc-tree", "min-cost tree reallocation");
    add_input(alloc_tree);
    alloc_tree->add_option("--root", tree_root, "1-based root vertex");

    std::uint64_t seed = 0;
    auto* selftest = app.add_subcommand("selftest", "run built-in cross-checks");
    selftest->add_option("--seed", seed, "seed for the fuzz instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_graph->parsed()) return run_solve_graph(opt, infinite, state, all);
        if (solve_scores_cmd->parsed()) return run_solve_scores(opt, state);
        if (product->parsed()) return run_product(opt, cap);
        if (grundy->parsed()) return run_grundy(opt, all);
        if (treblecross->parsed()) return run_treblecross(opt);
        if (tree_path->parsed()) return run_tree_path(opt);
        if (gather_even_cmd->parsed()) {
            return run_gather_even(gather_n, gather_k, gather_target, gather_mode);
        }
        if (gather_board->parsed()) return run_gather_board(opt);
        if (gather_lex->parsed()) return run_gather_lex(opt);
        if (gather_rounds->parsed()) return run_gather_rounds(opt);
        if (guess->parsed()) return run_guess_string(opt);
        if (hc->parsed()) return run_hotter_colder(opt);
        if (coins->parsed()) return run_coins(opt);
        if (bets->parsed()) return run_bets(opt);
        if (powersum->parsed()) return run_powersum(opt, power_mode);
        if (pursuit->parsed()) return run_pursuit(opt);
        if (copwin->parsed()) return run_copwin(opt, copwin_mode);
        if (caterpillar->parsed()) return run_caterpillar(opt);
        if (alloc_equalize->parsed()) return run_alloc_equalize(opt);
        if (alloc_line->parsed()) return run_alloc_line(opt, alloc_integer, eps_text);
        if (alloc_tree->parsed()) return run_alloc_tree(opt, tree_root);
        if (selftest->parsed()) return run_selftest(seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return 0;
}
