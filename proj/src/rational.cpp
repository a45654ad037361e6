#include "adversolve/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace adversolve {

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow128(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::reduce128(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational(0);
    unsigned __int128 an = num < 0 ? static_cast<unsigned __int128>(-num)
                                   : static_cast<unsigned __int128>(num);
    unsigned __int128 g = gcd128(an, static_cast<unsigned __int128>(den));
    Rational r;
    r.num_ = narrow128(num / static_cast<__int128>(g));
    r.den_ = narrow128(den / static_cast<__int128>(g));
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = reduce128(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow128(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    __int128 n = static_cast<__int128>(num_) * rhs.den_ +
                 static_cast<__int128>(rhs.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    *this = reduce128(n, d);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    __int128 n = static_cast<__int128>(num_) * rhs.den_ -
                 static_cast<__int128>(rhs.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    *this = reduce128(n, d);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    __int128 n = static_cast<__int128>(num_) * rhs.num_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    *this = reduce128(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    __int128 n = static_cast<__int128>(num_) * rhs.den_;
    __int128 d = static_cast<__int128>(den_) * rhs.num_;
    *this = reduce128(n, d);
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view piece) {
        std::int64_t value = 0;
        if (!piece.empty() && piece.front() == '+') piece.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("malformed rational: '" + std::string(piece) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace adversolve
