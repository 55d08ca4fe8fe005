#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "medsg/errors.hpp"

namespace medsg {

/// Exact rational, always reduced, denominator > 0. Intermediate products run
/// through 128-bit arithmetic; a reduced value that no longer fits in 64 bits
/// raises an Error rather than wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw Error(ErrorCode::InternalDisagreement, "zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        assign(nn, dd);
    }

    friend Rational operator+(Rational a, Rational b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return make(static_cast<__int128>(a.num) * b.num,
                    static_cast<__int128>(a.den) * b.den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// Smallest integer >= this value.
    std::int64_t ceil() const {
        if (num >= 0) return (num + den - 1) / den;
        return -((-num) / den);
    }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        r.assign(n, d);
        return r;
    }

    void assign(__int128 n, __int128 d) {
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n == 0) d = 1;
        constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
        if (n > lim || n < -lim || d > lim)
            throw Error(ErrorCode::GeneratorTooLarge, "rational value out of range");
        num = static_cast<std::int64_t>(n);
        den = static_cast<std::int64_t>(d);
    }
};

} // namespace medsg
