#pragma once

#include <string>

#include "wpb/errors.hpp"
#include "wpb/laurent.hpp"
#include "wpb/monomial.hpp"
#include "wpb/ratio.hpp"

namespace wpb {

/**
 * Finite q-shifted factorial: product of (1 - a*base^i) for 0 <= i < n.
 * The empty product (n = 0) is 1; negative lengths are rejected.
 */
inline LaurentPoly pochhammer(const Monomial& a, const Monomial& base, long long n) {
    if (n < 0) throw EngineError("pochhammer: negative length " + std::to_string(n));
    if (base.is_zero()) throw EngineError("pochhammer: zero base");
    LaurentPoly acc = LaurentPoly::one();
    Monomial t = a;
    for (long long i = 0; i < n; ++i) {
        acc *= one_minus(t);
        t = t * base;
    }
    return acc;
}

// Pochhammer for a denominator position: throws a named pole error if any
// factor vanishes, instead of silently producing the zero polynomial.
inline LaurentPoly pochhammer_nonzero(const Monomial& a, const Monomial& base, long long n,
                                      const std::string& what) {
    Monomial t = a;
    for (long long i = 0; i < n; ++i) {
        if (t.is_one())
            throw PoleError("vanishing factor (1 - " + a.str() + "*" + base.str() + "^" +
                            std::to_string(i) + ") in " + what);
        t = t * base;
    }
    return pochhammer(a, base, n);
}

/**
 * Gaussian binomial coefficient with the generalized integer top: zero for
 * bottom < 0, otherwise the exact quotient (base^(top-bottom+1); base)_bottom
 * / (base; base)_bottom, which is a Laurent polynomial for every integer top.
 */
inline LaurentPoly qbinom(long long top, long long bottom, const Monomial& base) {
    if (bottom < 0) return LaurentPoly::zero();
    if (bottom == 0) return LaurentPoly::one();
    if (base.is_zero()) throw EngineError("qbinom: zero base");
    LaurentPoly num = pochhammer(base.pow(top - bottom + 1), base, bottom);
    if (num.is_zero()) return LaurentPoly::zero();  // 0 <= top < bottom
    LaurentPoly den = pochhammer(base, base, bottom);
    auto q = num.div_exact(den);
    if (!q)
        throw EngineError("qbinom: inexact division for top=" + std::to_string(top) +
                          " bottom=" + std::to_string(bottom) + " base=" + base.str());
    return *q;
}

inline LaurentPoly qbinom(long long top, long long bottom) {
    return qbinom(top, bottom, Monomial::q());
}

/**
 * Truncated infinite product: prod_{i>=0} (1 - a*base^i) with every exponent
 * >= cutoff discarded. Requires a strictly positive base exponent so factors
 * eventually drop beyond the cutoff; the result is exact modulo q^cutoff.
 */
inline LaurentPoly poch_inf(const Monomial& a, const Monomial& base, const Rational& cutoff) {
    if (a.is_zero()) return LaurentPoly::one();
    if (base.is_zero() || base.exp <= 0)
        throw EngineError("poch_inf: base " + base.str() +
                          " is not truncatable (needs a positive exponent)");
    if (base.coeff > 1 || base.coeff < -1)
        throw EngineError("poch_inf: base coefficient must lie in [-1, 1]");
    // Factors with negative exponents shift the product's lowest exponent
    // down; widen the working cutoff so the result stays exact below cutoff.
    Rational guard(0);
    for (Monomial t = a; t.exp < 0; t = t * base) guard -= t.exp;
    Rational work = cutoff + guard;
    LaurentPoly acc = LaurentPoly::one();
    Monomial t = a;
    // Factors with t.exp >= work contribute nothing below the cutoff.
    while (t.exp < work) {
        acc = mul_trunc(acc, one_minus(t), work);
        t = t * base;
        if (t.is_zero()) break;
    }
    return acc.truncated(cutoff);
}

}  // namespace wpb
