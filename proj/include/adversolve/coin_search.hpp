#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace adversolve {

// Counting state of the counterfeit-coin search. Coins fall into four
// candidate classes: {normal,lighter,heavier}, {normal,lighter},
// {normal,heavier}, {normal}.
struct CoinState {
    std::array<int, 4> num{0, 0, 0, 0};  // num[0] = type 1, ..., num[3] = type 4

    static CoinState initial(int n) { return CoinState{{n, 0, 0, 0}}; }
    int total() const { return num[0] + num[1] + num[2] + num[3]; }
    bool phase1() const { return num[1] == 0 && num[2] == 0; }
    bool phase2() const { return num[0] == 0; }
    bool solved() const;
    friend bool operator==(const CoinState&, const CoinState&) = default;
};

// U(S) = -1 + sum(|C(i)| - 1) = 2*num1 + num2 + num3 - 1.
int coin_uncertainty(const CoinState& state);

enum class CoinOutcome { Balanced, LeftLight, LeftHeavy };

struct CoinQuestion {
    bool phase1 = true;
    int k = 0;  // coins per pan
    // Phase 1: left pan = x type-1 + (k-x) type-4, right pan = k type-1.
    // Phase 2: left pan = x type-2 + y type-3 + (k-x-y) type-4,
    //          right pan = z type-2 + (k-z) type-3.
    int x = 0;
    int y = 0;
    int z = 0;
    int guaranteed_decrement = 0;  // min over the outcome decrement formulas
};

// Chooses the next weighing: phase 1 targets S = k+x near 2/3*num1 (even S
// forced while no reference coins exist); phase 2 binary-searches the largest
// worst-case uncertainty decrement W, testing (k, x) pairs by intersecting
// the constraint half-planes in the (y, z) plane and accepting when the
// polygon is nonempty and has an integer vertex. Throws when no legal
// weighing exists.
CoinQuestion coin_next_question(const CoinState& state);

// Uncertainty decrement formula for one outcome of a question.
int coin_decrement_formula(const CoinState& state, const CoinQuestion& q, CoinOutcome outcome);

// Applies the set-reduction rules. Throws when the outcome is impossible
// (it would leave every coin normal).
CoinState coin_apply_answer(const CoinState& state, const CoinQuestion& q, CoinOutcome outcome);

// Exposed for the brute-force cross-checks: the polygon test for one (k, x)
// pair at decrement target w.
bool coin_phase2_pair_feasible(const CoinState& state, int k, int x, int w);

// Answers weighings of concrete coin index sets (0-based).
class CoinAnswerer {
public:
    virtual ~CoinAnswerer() = default;
    virtual CoinOutcome outcome(const std::vector<int>& left, const std::vector<int>& right) = 0;
};

// The counterfeit is `coin` (0-based), lighter or heavier.
class FixedAssignmentAnswerer final : public CoinAnswerer {
public:
    FixedAssignmentAnswerer(int coin, bool lighter) : coin_(coin), lighter_(lighter) {}
    CoinOutcome outcome(const std::vector<int>& left, const std::vector<int>& right) override;

private:
    int coin_;
    bool lighter_;
};

// Keeps every assignment consistent with its answers and always picks the
// outcome that leaves the most uncertainty (ties: balanced, then left-light).
class AdaptiveWorstCaseAnswerer final : public CoinAnswerer {
public:
    explicit AdaptiveWorstCaseAnswerer(int n);
    CoinOutcome outcome(const std::vector<int>& left, const std::vector<int>& right) override;

    // The surviving (coin, lighter) assignments.
    std::vector<std::pair<int, bool>> survivors() const;

private:
    std::vector<bool> may_be_light_;
    std::vector<bool> may_be_heavy_;
};

struct CoinTraceEntry {
    CoinQuestion question;
    std::vector<int> left;   // 0-based coin indices
    std::vector<int> right;
    CoinOutcome outcome = CoinOutcome::Balanced;
    int uncertainty_after = 0;
};

struct CoinRunResult {
    int coin = 0;  // 0-based index of the counterfeit
    bool lighter = false;
    int questions = 0;
};

// Full driver: asks coin_next_question until the uncertainty reaches zero,
// assigning the lowest-indexed coins of each class to the pan slots.
CoinRunResult coin_run(int n, CoinAnswerer& answerer,
                       std::vector<CoinTraceEntry>* trace = nullptr);

}  // namespace adversolve
