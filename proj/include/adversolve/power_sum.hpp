#pragma once

#include <string>

#include "adversolve/bigint.hpp"
#include "adversolve/rational.hpp"

namespace adversolve {

// Exact value of a^N + b^N given P = a+b and Q = a*b.
struct PowerSumExact {
    BigInt numerator;
    BigInt denominator;  // positive; 1 whenever P and Q are integers

    double to_double() const;
    // Decimal string; integer results print without the denominator.
    std::string to_string() const;
};

// O(N) recurrence SP(k) = SP(k-1)*P - SP(k-2)*Q with SP(0)=2, SP(1)=P,
// run over integers after clearing denominators; exact for any rational
// inputs.
PowerSumExact power_sum_linear(const Rational& p, const Rational& q, int n);

struct PowerSumFast {
    double value = 0.0;
    int multiplications = 0;  // counted squarings and factor multiplies
};

// Root-based: delta = sqrt(P^2 - 4Q), c1 = (P+delta)/2, c2 = (P-delta)/2,
// c1^N and c2^N by the binary-representation loop; answer d1 + d2. Throws
// when P^2 - 4Q < 0 (complex roots unsupported).
PowerSumFast power_sum_fast(const Rational& p, const Rational& q, int n);

}  // namespace adversolve
