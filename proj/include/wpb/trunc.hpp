#pragma once

#include <optional>
#include <string>

#include "wpb/errors.hpp"
#include "wpb/laurent.hpp"

namespace wpb {

/**
 * A truncated Laurent series with an explicit validity bound: `poly` holds
 * exactly the terms of the true series with exponent below `valid`. All
 * arithmetic propagates the bound, so precision loss from negative orders
 * (series inversion, multiplication by Laurent factors) is tracked rather
 * than silently ignored.
 */
struct TruncVal {
    LaurentPoly poly;
    Rational valid{0};

    TruncVal() = default;
    TruncVal(LaurentPoly p, Rational v) : poly(p.truncated(v)), valid(std::move(v)) {}

    static TruncVal exact(const LaurentPoly& p, const Rational& work) {
        return TruncVal(p, work);
    }

    // Order bound: min exponent of the known part, or `valid` when nothing is
    // known below the bound.
    Rational ord() const {
        auto m = poly.min_exp();
        return m ? *m : valid;
    }

    friend TruncVal operator+(const TruncVal& a, const TruncVal& b) {
        Rational v = a.valid < b.valid ? a.valid : b.valid;
        return TruncVal(a.poly + b.poly, v);
    }
    friend TruncVal operator-(const TruncVal& a, const TruncVal& b) {
        Rational v = a.valid < b.valid ? a.valid : b.valid;
        return TruncVal(a.poly - b.poly, v);
    }
    friend TruncVal operator-(const TruncVal& a) { return TruncVal(-a.poly, a.valid); }

    friend TruncVal operator*(const TruncVal& a, const TruncVal& b) {
        Rational v1 = a.valid + b.ord();
        Rational v2 = b.valid + a.ord();
        Rational v = v1 < v2 ? v1 : v2;
        return TruncVal(a.poly * b.poly, v);
    }

    TruncVal inverse() const {
        if (poly.is_zero())
            throw PoleError("series inverse of a value with no known terms");
        Rational m = *poly.min_exp();
        Rational v = valid - 2 * m;
        return TruncVal(inv_trunc(poly, v), v);
    }

    friend TruncVal operator/(const TruncVal& a, const TruncVal& b) { return a * b.inverse(); }

    TruncVal pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) return TruncVal(LaurentPoly::one(), valid);
        TruncVal r = *this;
        for (long long i = 1; i < e; ++i) r = r * *this;
        return r;
    }
};

}  // namespace wpb
