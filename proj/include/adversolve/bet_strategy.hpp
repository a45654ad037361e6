#pragma once

#include <vector>

#include "adversolve/rational.hpp"

namespace adversolve {

struct BetDecision {
    bool bet_black = true;
    Rational fraction;  // share of the current sum to stake, in [0, 1]
};

// Worst-case guaranteed multiplication factors for betting on draws from a
// box of black and red objects. pmax(i, j) is the factor guaranteed from a
// box with i black and j red objects left; exact rationals throughout.
class BetTable {
public:
    BetTable(int blacks, int reds);

    int blacks() const { return blacks_; }
    int reds() const { return reds_; }

    const Rational& pmax(int i, int j) const;
    // Decision at a state with i black and j red objects left (i + j >= 1).
    BetDecision decision(int i, int j) const;

private:
    int blacks_;
    int reds_;
    std::vector<Rational> table_;  // (blacks+1) x (reds+1)
    std::size_t index(int i, int j) const;
};

inline BetTable bet_pmax(int blacks, int reds) { return BetTable(blacks, reds); }

}  // namespace adversolve
