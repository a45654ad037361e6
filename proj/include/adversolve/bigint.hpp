#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adversolve {

// Minimal signed arbitrary-precision integer: enough for exact linear
// recurrences whose values outgrow 128 bits. Supports +, -, *, comparison,
// decimal printing and lossy conversion to double.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);  // NOLINT: implicit by design

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // -1, 0, +1 as *this <=> rhs.
    int compare(const BigInt& rhs) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }

    std::string to_string() const;
    double to_double() const;

    static BigInt pow(const BigInt& base, unsigned exp);

private:
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void normalize();

    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> mag_;    // little-endian base 2^32, no leading zeros
};

}  // namespace adversolve
