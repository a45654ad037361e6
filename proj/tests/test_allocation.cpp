#include "doctest.h"

#include <limits>
#include <random>
#include <stdexcept>

#include "adversolve/allocation.hpp"
#include "oracles.hpp"

using namespace adversolve;

namespace {

}  // namespace

TEST_CASE("equalize pinned examples") {
    CHECK(equalize({Rational(2), Rational(2)}).empty());

    auto one = equalize({Rational(1), Rational(2), Rational(3)});
    REQUIRE(one.size() == 1);
    CHECK(one[0].from == 2);
    CHECK(one[0].to == 0);
    CHECK(one[0].amount == Rational(1));

    auto two = equalize({Rational(0), Rational(0), Rational(6)});
    REQUIRE(two.size() == 2);
    CHECK(two[0].from == 2);
    CHECK(two[0].amount == Rational(2));
    CHECK(two[1].from == 2);
    CHECK(two[1].amount == Rational(2));
}

TEST_CASE("equalize replay is exact with at most n-1 moves") {
    std::mt19937 rng(24601);
    for (int iter = 0; iter < 400; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 100)(rng);
        std::vector<Rational> amounts;
        std::uniform_int_distribution<int> num(0, 60);
        std::uniform_int_distribution<int> den(1, 4);
        for (int i = 0; i < n; ++i) amounts.emplace_back(num(rng), den(rng));

        Rational total(0);
        for (const Rational& r : amounts) total += r;
        Rational mean = total / Rational(n);

        auto moves = equalize(amounts);
        CHECK(moves.size() <= static_cast<std::size_t>(n - 1 > 0 ? n - 1 : 0));
        std::vector<Rational> replay = amounts;
        for (const Move& m : moves) {
            CHECK(m.amount.sign() > 0);
            replay[m.from] -= m.amount;
            replay[m.to] += m.amount;
        }
        Rational after(0);
        for (int i = 0; i < n; ++i) {
            CHECK(replay[i] == mean);
            after += replay[i];
        }
        CHECK(after == total);
    }
}

TEST_CASE("line feasibility pinned traces") {
    LineInstance inst;
    inst.amounts = {Rational(5), Rational(1)};
    inst.losses = {Rational(1)};
    CHECK(line_feasible(inst, Rational(2)));
    CHECK_FALSE(line_feasible(inst, Rational(3)));

    LineInstance even;
    even.amounts = {Rational(4), Rational(4)};
    even.losses = {Rational(5)};
    CHECK(line_feasible(even, Rational(4)));
}

TEST_CASE("line maximin pinned values") {
    LineInstance inst;
    inst.amounts = {Rational(10), Rational(0), Rational(0)};
    inst.losses = {Rational(1), Rational(1)};
    CHECK(line_maximin(inst, true) == Rational(2));

    Rational eps(1, 1000000);
    Rational x = line_maximin(inst, false, eps);
    CHECK((x - Rational(8, 3)).abs() <= eps);
    CHECK(line_feasible(inst, x));
    CHECK_FALSE(line_feasible(inst, x + eps));

    LineInstance constant;
    constant.amounts = {Rational(7), Rational(7), Rational(7), Rational(7)};
    constant.losses = {Rational(3), Rational(0), Rational(9)};
    CHECK(line_maximin(constant, true) == Rational(7));
}

TEST_CASE("line feasibility is monotone and matches exhaustive scan") {
    std::mt19937 rng(55555);
    std::uniform_int_distribution<int> value(0, 20);
    for (int iter = 0; iter < 300; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        LineInstance inst;
        for (int i = 0; i < n; ++i) inst.amounts.emplace_back(value(rng));
        for (int i = 0; i + 1 < n; ++i) inst.losses.emplace_back(value(rng) / 4);

        bool previous = true;
        int best = -1;
        for (int x = 0; x <= 20; ++x) {
            bool feasible = line_feasible(inst, Rational(x));
            if (feasible) {
                CHECK(previous);  // no feasibility gaps
                best = x;
            }
            previous = feasible;
        }
        CHECK(line_maximin(inst, true) == Rational(best));
    }
}

TEST_CASE("line maximin with per-container requirements") {
    LineInstance inst;
    inst.amounts = {Rational(6), Rational(2)};
    inst.losses = {Rational(1)};
    inst.requirement = [](int i, const Rational& x) { return x + Rational(i); };
    Rational x = line_maximin(inst, true);
    CHECK(line_feasible(inst, x));
    CHECK_FALSE(line_feasible(inst, x + Rational(1)));

    LineInstance hopeless;
    hopeless.amounts = {Rational(1)};
    hopeless.losses = {};
    hopeless.requirement = [](int, const Rational&) { return Rational(5); };
    CHECK_THROWS_AS(line_maximin(hopeless, true), std::runtime_error);
}

TEST_CASE("tree reallocation pinned examples") {
    TreeReallocInstance same;
    same.n = 3;
    same.edges = {{0, 1, Rational(2), Rational(2)}, {1, 2, Rational(5), Rational(1)}};
    same.have = {4, 5, 6};
    same.want = {4, 5, 6};
    auto zero = tree_realloc_cost(same);
    CHECK(zero.total_cost == Rational(0));
    CHECK(zero.flows.empty());

    TreeReallocInstance pair;
    pair.n = 2;
    pair.edges = {{0, 1, Rational(7), Rational(3)}};  // 0->1 costs 7, 1->0 costs 3
    pair.have = {0, 1};
    pair.want = {1, 0};
    auto up = tree_realloc_cost(pair);
    CHECK(up.total_cost == Rational(3));
    REQUIRE(up.flows.size() == 1);
    CHECK(up.flows[0].from == 1);
    CHECK(up.flows[0].to == 0);
    CHECK(up.flows[0].amount == 1);

    TreeReallocInstance path;
    path.n = 3;
    path.edges = {{0, 1, Rational(1), Rational(1)}, {1, 2, Rational(1), Rational(1)}};
    path.have = {2, 0, 0};
    path.want = {0, 1, 1};
    CHECK(tree_realloc_cost(path).total_cost == Rational(3));

    TreeReallocInstance bad = path;
    bad.want = {0, 1, 2};
    CHECK_THROWS_AS(tree_realloc_cost(bad), std::invalid_argument);
}

TEST_CASE("tree reallocation equals min-cost flow and is root-invariant") {
    std::mt19937 rng(86420);
    std::uniform_int_distribution<int> cost(0, 9);
    for (int iter = 0; iter < 250; ++iter) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        TreeReallocInstance inst;
        inst.n = n;
        for (auto [u, v] : oracles::random_tree_edges(rng, n)) {
            inst.edges.push_back({u, v, Rational(cost(rng)), Rational(cost(rng))});
        }
        int total = std::uniform_int_distribution<int>(0, 6)(rng);
        inst.have.assign(n, 0);
        inst.want.assign(n, 0);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < total; ++t) ++inst.have[pick(rng)];
        for (int t = 0; t < total; ++t) ++inst.want[pick(rng)];

        auto result = tree_realloc_cost(inst, 0);
        CHECK(result.total_cost == Rational(oracles::realloc_min_cost_flow(inst)));
        for (int root = 1; root < n; ++root) {
            CHECK(tree_realloc_cost(inst, root).total_cost == result.total_cost);
        }

        // Replaying the flows turns have into want.
        std::vector<long long> replay = inst.have;
        for (const EdgeFlow& f : result.flows) {
            replay[f.from] -= f.amount;
            replay[f.to] += f.amount;
        }
        for (int v = 0; v < n; ++v) CHECK(replay[v] == inst.want[v]);
    }
}
