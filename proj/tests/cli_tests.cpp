// End-to-end checks of the adversolve binary: pinned outputs, byte-identical
// reruns, trace round-trips and error exit codes. argv[1] is the binary path.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adversolve/guess_string.hpp"

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string binary;
int temp_counter = 0;

RunResult run(const std::string& args, const std::string& input) {
    std::string in_path;
    if (!input.empty()) {
        in_path = "/tmp/adversolve_cli_" + std::to_string(++temp_counter) + ".in";
        std::ofstream out(in_path);
        out << input;
    }
    std::string command = binary + " " + args + (in_path.empty() ? "" : " " + in_path) +
                          " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    RunResult result;
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!in_path.empty()) std::remove(in_path.c_str());
    return result;
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++failures;
    }
}

void expect_output(const std::string& args, const std::string& input,
                   const std::string& expected) {
    RunResult r = run(args, input);
    check(r.exit_code == 0, args + ": exit code " + std::to_string(r.exit_code));
    check(r.output == expected, args + ": got \"" + r.output + "\", want \"" + expected + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-adversolve>\n";
        return 2;
    }
    binary = argv[1];

    const std::string chain =
        "states 3\nstate 1 1\nstate 2 2\nstate 3 1\nedge 1 2\nedge 2 3\nterminal 3 L\n";
    expect_output("solve-graph", chain, "result=LOSE\n");
    expect_output("solve-graph --state 2", chain, "result=WIN\n");

    // Subtraction game with pile 7 and takes 1..3, pile p encoded as state 8-p.
    std::ostringstream sub;
    sub << "states 8\n";
    for (int id = 1; id <= 8; ++id) {
        for (int take = 1; take <= 3 && id + take <= 8; ++take) {
            sub << "edge " << id << " " << id + take << "\n";
        }
    }
    sub << "terminal 8 L\n";
    expect_output("grundy", sub.str(), "grundy=3\n");

    expect_output("solve-scores",
                  "states 2\nedge 1 2 3 0\nterminal 2 0\n", "value=3\n");

    expect_output("product", "states 2\nedge 1 2\nterminal 2 L\nstates 2\nedge 1 2\nterminal 2 L\n",
                  "states=4 edges=4 result=LOSE\n");

    expect_output("tree-path", "tree 3\nedge 1 2\nedge 2 3\n", "wins=101\n");
    expect_output("gather-even --n 5 --k 2 --target even --mode pattern", "",
                  "result=LOSE\n");
    expect_output("gather-even --n 1 --k 1 --target odd --mode dp", "", "result=WIN\n");
    expect_output("gather-board", "board 3\n1 5 2\n",
                  "smax=3 diff=-2 parity_guarantee=5\n");
    expect_output("gather-lex", "board 2\n\"ba\"\n", "result=ab\n");
    expect_output("gather-rounds", "multiround 2 | s1: 1 | s2: 1 | rule: case1\n",
                  "total=0 result=LOSE\n");
    expect_output("guess-string", "secret 10 over K=2\n",
                  "secret=10 questions=7 bound=9\n");
    expect_output("hotter-colder", "hc N=3 D=1 mode=valid\n",
                  "questions=2 total_asks=3\n");
    expect_output("powersum", "5 6 3\n2 1 10\n", "35\n2\n");
    expect_output("copwin", "graph 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n",
                  "result=ROBBER_ESCAPES\n");
    expect_output("copwin --mode naive", "graph 3 3\ne 1 2\ne 2 3\ne 1 3\n",
                  "result=COP_WINS\n");
    expect_output("caterpillar", "graph 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n",
                  "tree=yes caterpillar=yes extended=yes\n");
    expect_output("alloc-line --integer", "r: 10 0 0\nq: 1 1\n", "xopt=2\n");
    expect_output("alloc-tree", "edge 1 2 7 3\nb: 0 1\nq: 1 0\n", "cost=3\n");
    expect_output("pursuit",
                  "digraph 2 2\narc 1 2\narc 2 1\ncops 1\nrobbers 2\nschedule (c,1)(r,1)\n",
                  "result=COPS_WIN\n");
    expect_output("treblecross", "treblecross 3\n", "result=WIN\n");
    expect_output("treblecross", "treblecross 4\nmult 2\n", "result=LOSE\n");

    // Determinism: repeated runs are byte-identical.
    for (int i = 0; i < 2; ++i) {
        RunResult a = run("coins --trace", "coins n=12\n");
        RunResult b = run("coins --trace", "coins n=12\n");
        check(a.exit_code == 0 && a.output == b.output, "coins runs must be byte-identical");
    }
    {
        RunResult a = run("hotter-colder --trace", "hc N=9 D=2 mode=any S=5\n");
        RunResult b = run("hotter-colder --trace", "hc N=9 D=2 mode=any S=5\n");
        check(a.exit_code == 0 && a.output == b.output,
              "hotter-colder runs must be byte-identical");
    }

    // Trace round-trip: every guess-string question/answer line must agree
    // with a subsequence check against the reported secret.
    {
        RunResult r = run("guess-string --trace", "secret 0210 over K=3\n");
        check(r.exit_code == 0, "guess-string trace run");
        std::istringstream lines(r.output);
        std::string line;
        std::string final_secret;
        std::vector<std::pair<std::string, bool>> transcript;
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string head;
            fields >> head;
            if (head == "trace") {
                std::string ask, word, arrow, answer;
                fields >> ask >> word >> arrow >> answer;
                transcript.emplace_back(word, answer == "yes");
            } else {
                final_secret = line.substr(line.find("secret=") + 7,
                                           line.find(' ') - 7);
            }
        }
        check(final_secret == "0210", "guess-string recovered " + final_secret);
        auto to_symbols = [](const std::string& digits) {
            std::vector<int> out;
            for (char c : digits) out.push_back(c - '0');
            return out;
        };
        std::vector<int> secret = to_symbols(final_secret);
        for (const auto& [word, yes] : transcript) {
            bool really = adversolve::is_subsequence(to_symbols(word), secret);
            check(really == yes, "trace line claims " + word + " -> " + (yes ? "yes" : "no"));
        }
        check(!transcript.empty(), "guess-string trace must list the questions");
    }

    // Trace round-trip: replaying the coin weighings against the candidate
    // sets must leave exactly the reported coin and direction.
    {
        RunResult r = run("coins --trace", "coins n=12 assign=7,H\n");
        check(r.exit_code == 0, "coins trace run");
        const int n = 12;
        std::vector<int> may(n, 3);  // bit 0: may be light, bit 1: may be heavy
        std::istringstream lines(r.output);
        std::string line;
        std::string verdict;
        while (std::getline(lines, line)) {
            if (line.rfind("coin=", 0) == 0) {
                verdict = line;
                continue;
            }
            std::istringstream fields(line);
            std::string word;
            fields >> word >> word;  // "trace weigh"
            std::vector<int> left, right;
            std::vector<int>* side = nullptr;
            std::string outcome;
            while (fields >> word) {
                if (word == "left") {
                    side = &left;
                } else if (word == "right") {
                    side = &right;
                } else if (word == "->") {
                    fields >> outcome;
                    break;
                } else if (side) {
                    side->push_back(std::stoi(word) - 1);
                }
            }
            std::vector<int> pan(n, 0);
            for (int c : left) pan[c] = 1;
            for (int c : right) pan[c] = 2;
            for (int c = 0; c < n; ++c) {
                int light_ok, heavy_ok;
                if (outcome == "balanced") {
                    light_ok = heavy_ok = pan[c] == 0;
                } else if (outcome == "left_light") {
                    light_ok = pan[c] == 1;
                    heavy_ok = pan[c] == 2;
                } else {
                    light_ok = pan[c] == 2;
                    heavy_ok = pan[c] == 1;
                }
                may[c] &= (light_ok ? 1 : 0) | (heavy_ok ? 2 : 0);
            }
        }
        int suspects = 0;
        std::string replayed;
        for (int c = 0; c < n; ++c) {
            if (may[c] != 0) {
                ++suspects;
                replayed = "coin=" + std::to_string(c + 1) +
                           " type=" + (may[c] == 1 ? "lighter" : "heavier");
            }
        }
        check(suspects == 1, "coins trace must pin a single assignment");
        check(!verdict.empty() && verdict.rfind(replayed, 0) == 0,
              "coins trace replay gives " + replayed + ", report says " + verdict);
        check(verdict.rfind("coin=7 type=heavier", 0) == 0,
              "coins must identify the fixed assignment");
    }

    // Equalize: replay the emitted moves over the input amounts.
    {
        RunResult r = run("alloc-equalize", "0 0 6\n");
        check(r.exit_code == 0, "alloc-equalize run");
        std::istringstream lines(r.output);
        std::string line;
        std::getline(lines, line);
        check(line == "target=2 moves=2", "alloc-equalize header, got " + line);
        double amounts[3] = {0, 0, 6};
        while (std::getline(lines, line)) {
            int from = 0, to = 0;
            double amount = 0;
            if (std::sscanf(line.c_str(), "move from=%d to=%d amount=%lf", &from, &to,
                            &amount) == 3) {
                amounts[from - 1] -= amount;
                amounts[to - 1] += amount;
            }
        }
        check(amounts[0] == 2 && amounts[1] == 2 && amounts[2] == 2,
              "alloc-equalize replay must hit the mean");
    }

    // Error exit codes: parse error 2, solver error 3, io error 4.
    {
        RunResult r = run("solve-graph", "states 1\nedge 1 2\n");
        check(r.exit_code == 2, "dangling edge must exit with 2, got " +
                                    std::to_string(r.exit_code));
        r = run("solve-graph", "states 2\nedge 1 2\nedge 2 1\n");
        check(r.exit_code == 3, "cyclic input must exit with 3, got " +
                                    std::to_string(r.exit_code));
        std::string command = binary + " solve-graph /no/such/file 2>/dev/null";
        int status = std::system(command.c_str());
        check(WIFEXITED(status) && WEXITSTATUS(status) == 4, "missing file must exit with 4");
        command = binary + " no-such-subcommand 2>/dev/null";
        status = std::system(command.c_str());
        check(WIFEXITED(status) && WEXITSTATUS(status) != 0,
              "unknown subcommand must exit nonzero");
    }

    if (failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << failures << " failures\n";
    return 1;
}
