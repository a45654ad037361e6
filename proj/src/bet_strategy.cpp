#include "adversolve/bet_strategy.hpp"

#include <stdexcept>

namespace adversolve {

std::size_t BetTable::index(int i, int j) const {
    return static_cast<std::size_t>(i) * (reds_ + 1) + j;
}

BetTable::BetTable(int blacks, int reds) : blacks_(blacks), reds_(reds) {
    if (blacks < 0 || reds < 0) throw std::invalid_argument("object counts must be nonnegative");
    table_.assign(static_cast<std::size_t>(blacks + 1) * (reds + 1), Rational(1));
    for (int j = 1; j <= reds; ++j) table_[index(0, j)] = table_[index(0, j - 1)] * Rational(2);
    for (int i = 1; i <= blacks; ++i) table_[index(i, 0)] = table_[index(i - 1, 0)] * Rational(2);
    for (int i = 1; i <= blacks; ++i) {
        for (int j = 1; j <= reds; ++j) {
            const Rational& on_black = table_[index(i - 1, j)];
            const Rational& on_red = table_[index(i, j - 1)];
            Rational p = (on_red - on_black) / (on_black + on_red);
            if (p >= Rational(0)) {
                table_[index(i, j)] = (Rational(1) + p) * on_black;
            } else {
                Rational q = (on_black - on_red) / (on_black + on_red);
                table_[index(i, j)] = (Rational(1) + q) * on_red;
            }
        }
    }
}

const Rational& BetTable::pmax(int i, int j) const {
    if (i < 0 || i > blacks_ || j < 0 || j > reds_) {
        throw std::out_of_range("pmax index out of range");
    }
    return table_[index(i, j)];
}

BetDecision BetTable::decision(int i, int j) const {
    if (i < 0 || j < 0 || i + j < 1) throw std::invalid_argument("no objects left to bet on");
    BetDecision d;
    if (j == 0) {
        d.bet_black = true;
        d.fraction = Rational(1);
        return d;
    }
    if (i == 0) {
        d.bet_black = false;
        d.fraction = Rational(1);
        return d;
    }
    const Rational& on_black = pmax(i - 1, j);
    const Rational& on_red = pmax(i, j - 1);
    Rational p = (on_red - on_black) / (on_black + on_red);
    if (p >= Rational(0)) {
        d.bet_black = true;
        d.fraction = p;
    } else {
        d.bet_black = false;
        d.fraction = (on_black - on_red) / (on_black + on_red);
    }
    return d;
}

}  // namespace adversolve
