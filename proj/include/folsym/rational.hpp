#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

#include "folsym/errors.hpp"

namespace folsym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int isqrt_floor(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    return r * r == n;
}

/**
 * Splits n = f * s^2 with f squarefree (f carries the sign of n).
 * Returns {f, s}. Trial division; factors above 10^6 are handled by an
 * explicit square test, which covers every radicand this library produces.
 */
inline std::pair<Int, Int> squarefree_split(Int n) {
    if (n == 0) return {Int(0), Int(1)};
    Int sign = 1;
    if (n < 0) {
        sign = -1;
        n = -n;
    }
    Int f = 1, s = 1;
    for (Int p = 2; p * p <= n && p <= 1000000; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) f *= p;
    }
    if (n > 1) {
        if (is_square(n)) {
            s *= isqrt_floor(n);
        } else {
            f *= n;
        }
    }
    return {sign * f, s};
}

/** Exact square root of a rational, if it has one. */
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (!is_square(num) || !is_square(den)) return std::nullopt;
    return Rational(isqrt_floor(num), isqrt_floor(den));
}

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Int euler_phi(Int n) {
    if (n <= 0) throw Error("euler_phi needs a positive argument");
    Int result = 1;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        n /= p;
        result *= p - 1;
        while (n % p == 0) {
            n /= p;
            result *= p;
        }
    }
    if (n > 1) result *= n - 1;
    return result;
}

inline double approx(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/** Continued fraction partial quotients of p/q, p > q > 0 not required. */
inline std::vector<Int> continued_fraction(Int p, Int q) {
    if (q <= 0 || p <= 0) throw Error("continued_fraction needs positive arguments");
    std::vector<Int> out;
    while (q != 0) {
        out.push_back(p / q);
        Int r = p % q;
        p = q;
        q = r;
    }
    return out;
}

}  // namespace folsym
