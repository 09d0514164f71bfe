#include "rational.hpp"

#include <charconv>
#include <numeric>

namespace ramsey {

namespace {

Rational reduce128(__int128 n, __int128 d) {
    if (d == 0) fail(Errc::invalid_argument, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = 1;
    {
        __int128 a = an, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        g = a == 0 ? 1 : a;
    }
    n /= g;
    d /= g;
    const __int128 lim = (__int128)1 << 62;
    if (n >= lim || n <= -lim || d >= lim)
        fail(Errc::invalid_argument, "rational overflow");
    Rational r;
    r.num = (long long)n;
    r.den = (long long)d;
    return r;
}

long long parse_ll(std::string_view s) {
    long long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(Errc::parse, "bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = reduce128(n, d); }

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (text.find('.') != std::string_view::npos)
            fail(Errc::parse, "decimal rationals are rejected; write P/Q");
        return Rational(parse_ll(text), 1);
    }
    long long p = parse_ll(text.substr(0, slash));
    long long q = parse_ll(text.substr(slash + 1));
    return Rational(p, q);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long Rational::floor_times(long long n) const {
    __int128 p = (__int128)num * n;
    __int128 q = den;
    __int128 f = p / q;
    if (p % q != 0 && p < 0) f -= 1;
    return (long long)f;
}

Rational Rational::operator+(const Rational& o) const {
    return reduce128((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return reduce128((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return reduce128((__int128)num * o.num, (__int128)den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) fail(Errc::invalid_argument, "division by zero rational");
    return reduce128((__int128)num * o.den, (__int128)den * o.num);
}

}  // namespace ramsey
