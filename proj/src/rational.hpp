#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace ramsey {

// Exact rational, always reduced with positive denominator. Regime
// classification (a < 1/2, a >= 2/5, ...) and floor computations must never
// pass through floating point; comparisons cross-multiply in 128 bits.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    static Rational parse(std::string_view text);  // "P/Q" or a bare integer "P"

    std::string str() const;
    double approx() const { return double(num) / double(den); }
    bool is_integer() const { return den == 1; }

    // floor(num * n / den), exact
    long long floor_times(long long n) const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace ramsey
