#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "rssep/error.hpp"

namespace rssep {

/// Exact rational with small operands, used for distance thresholds that
/// must be compared without rounding (n - n/c, n - n/c^2).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d = 1) {
        if (d == 0) throw Error(errc::invalid_input, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator-(Rational a, Rational b) {
        return Rational::of(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(Rational a, Rational b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(Rational a, Rational b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator<=(Rational a, Rational b) { return !(b < a); }
    friend bool operator>=(Rational a, Rational b) { return !(a < b); }
};

}  // namespace rssep
