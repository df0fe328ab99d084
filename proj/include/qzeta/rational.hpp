#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qzeta/errors.hpp"

namespace qzeta {

using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1, den > 0.
/// GMP's mpq_class maintains this through arithmetic; only raw string input
/// needs an explicit canonicalize (see parse_rational).
using Rational = mpq_class;

inline Integer binomial(long m, long k) {
    if (k < 0 || m < 0 || k > m) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
inline Integer pochhammer(long a, unsigned long n) {
    Integer r(1);
    for (unsigned long i = 0; i < n; ++i) r *= Integer(a) + static_cast<long>(i);
    return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw negative_input("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// floor(a / b), b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    if (sgn(b) == 0) throw division_by_zero("floor_div by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Exact square root of a nonnegative rational, when one exists in Q.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (!is_perfect_square(x.get_num()) || !is_perfect_square(x.get_den())) return std::nullopt;
    return Rational(isqrt(x.get_num()), isqrt(x.get_den()));
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (sgn(base) == 0) throw division_by_zero("0 raised to a negative power");
        return pow_rational(Rational(1) / base, -e);
    }
    Rational num(pow_integer(base.get_num(), static_cast<unsigned long>(e)),
                 pow_integer(base.get_den(), static_cast<unsigned long>(e)));
    return num;  // powers of a canonical fraction stay canonical
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Accepts `int` or `int/int` with an optional leading sign. Canonicalizes.
inline Rational parse_rational(std::string_view s) {
    size_t i = 0;
    auto fail = [&]() -> Rational { throw parse_error("bad rational: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    size_t start = i;
    if (s[i] == '-' || s[i] == '+') ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) fail();
    if (i < s.size()) {
        if (s[i] != '/') fail();
        ++i;
        size_t den_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
        if (den_digits == 0 || i != s.size()) fail();
    }
    Rational r(std::string(s.substr(start)));
    if (sgn(r.get_den()) == 0) throw parse_error("zero denominator: '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

// -- customization points used by the generic polynomial/series templates --

inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational from_int(long v, const Rational&) { return Rational(v); }
inline std::string coeff_str(const Rational& x) { return x.get_str(); }

/// N = s^2 * f with f square-free, by trial division up to `budget`.
/// Fails (nullopt) when the unfactored remainder cannot be certified.
inline std::optional<std::pair<Integer, Integer>> square_free_decompose(Integer n,
                                                                        unsigned long budget = 100000) {
    if (sgn(n) < 0) return std::nullopt;
    Integer s(1), f(1);
    if (sgn(n) == 0) return std::make_pair(Integer(0), Integer(1));
    for (Integer p(2); p * p <= n && p <= static_cast<long>(budget); ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e % 2 == 1) f *= p;
    }
    if (n == 1) return std::make_pair(s, f);
    if (is_perfect_square(n)) return std::make_pair(s * isqrt(n), f);
    // remainder has no factor <= budget: square-free iff not a perfect square,
    // unless it hides a large prime square -- only certifiable below budget^3
    if (n < pow_integer(Integer(static_cast<long>(budget)), 3)) return std::make_pair(s, f * n);
    return std::nullopt;
}

}  // namespace qzeta
