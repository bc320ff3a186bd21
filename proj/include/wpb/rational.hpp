#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace wpb {

// Exact arbitrary-precision integers and rationals. Expression templates are
// disabled so arithmetic always yields materialized values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline Rational rat_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(rat_den(base), rat_num(base)) : base;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1ULL) acc *= b;
        b *= b;
        n >>= 1ULL;
    }
    return acc;
}

// Exact square root of a rational, if one exists.
inline std::optional<Rational> rat_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r.is_zero()) return Rational(0);
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

inline bool rat_is_int(const Rational& r) { return rat_den(r) == 1; }

inline long long rat_to_ll(const Rational& r) {
    if (!rat_is_int(r)) throw std::domain_error("expected an integer, got " + r.str());
    return rat_num(r).convert_to<long long>();
}

inline std::string rat_str(const Rational& r) { return r.str(); }

inline long long ll_gcd(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long ll_lcm(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / ll_gcd(a, b) * b;
}

// Floor of a rational (towards minus infinity).
inline BigInt rat_floor(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Integer square root floor; argument must be a nonnegative integer rational.
inline BigInt rat_isqrt(const Rational& r) {
    if (r < 0) throw std::domain_error("isqrt of a negative value");
    return boost::multiprecision::sqrt(rat_floor(r));
}

}  // namespace wpb
