#include "adversolve/power_sum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace adversolve {

double PowerSumExact::to_double() const {
    return numerator.to_double() / denominator.to_double();
}

std::string PowerSumExact::to_string() const {
    if (denominator == BigInt(1)) return numerator.to_string();
    return numerator.to_string() + "/" + denominator.to_string();
}

PowerSumExact power_sum_linear(const Rational& p, const Rational& q, int n) {
    if (n < 0) throw std::invalid_argument("exponent must be nonnegative");
    // Clear denominators: with d = lcm(den(P), den(Q)), T(k) = SP(k) * d^k
    // satisfies T(k) = T(k-1)*(P*d) - T(k-2)*(Q*d^2) over integers.
    long long d = std::lcm(p.den(), q.den());
    Rational pd = p * Rational(d);
    Rational qd2 = q * Rational(d) * Rational(d);
    BigInt scaled_p(pd.num());
    BigInt scaled_q(qd2.num());

    BigInt prev2(2);   // T(0)
    BigInt prev(pd.num());  // T(1)
    PowerSumExact out;
    if (n == 0) {
        out.numerator = prev2;
        out.denominator = BigInt(1);
        return out;
    }
    for (int k = 2; k <= n; ++k) {
        BigInt cur = prev * scaled_p - prev2 * scaled_q;
        prev2 = prev;
        prev = cur;
    }
    out.numerator = prev;
    out.denominator = BigInt::pow(BigInt(d), static_cast<unsigned>(n));
    if (d == 1) out.denominator = BigInt(1);
    return out;
}

PowerSumFast power_sum_fast(const Rational& p, const Rational& q, int n) {
    if (n < 0) throw std::invalid_argument("exponent must be nonnegative");
    Rational discriminant = p * p - Rational(4) * q;
    if (discriminant.sign() < 0) {
        throw std::domain_error("complex roots unsupported");
    }
    PowerSumFast out;
    double pd = p.to_double();
    double delta = std::sqrt(discriminant.to_double());
    double c1 = (pd + delta) / 2.0;
    double c2 = (pd - delta) / 2.0;

    double d1 = 1.0, d2 = 1.0;
    int top = -1;
    for (int bit = 30; bit >= 0; --bit) {
        if (n >> bit & 1) {
            top = bit;
            break;
        }
    }
    for (int bit = top; bit >= 0; --bit) {
        d1 *= d1;
        d2 *= d2;
        out.multiplications += 2;
        if (n >> bit & 1) {
            d1 *= c1;
            d2 *= c2;
            out.multiplications += 2;
        }
    }
    // U = V = 1, so the answer is plainly d1 + d2.
    out.value = d1 + d2;
    return out;
}

}  // namespace adversolve
