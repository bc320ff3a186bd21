#pragma once

#include <optional>
#include <string>

#include "wpb/errors.hpp"
#include "wpb/rational.hpp"

namespace wpb {

/**
 * A specialization value c*q^e with rational coefficient and rational
 * exponent. The zero monomial (c = 0) is canonicalized to exponent 0; it
 * encodes the classical limit of a parameter sent to zero.
 */
struct Monomial {
    Rational coeff{0};
    Rational exp{0};

    Monomial() = default;
    Monomial(Rational c, Rational e) : coeff(std::move(c)), exp(std::move(e)) {
        if (coeff.is_zero()) exp = 0;
    }

    static Monomial q(Rational e = Rational(1)) { return Monomial(Rational(1), std::move(e)); }
    static Monomial constant(Rational c) { return Monomial(std::move(c), Rational(0)); }
    static Monomial zero() { return Monomial(); }
    static Monomial one() { return Monomial(Rational(1), Rational(0)); }

    bool is_zero() const { return coeff.is_zero(); }
    bool is_one() const { return coeff == 1 && exp.is_zero(); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.coeff == b.coeff && (a.coeff.is_zero() || a.exp == b.exp);
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return Monomial(a.coeff * b.coeff, a.exp + b.exp);
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (b.is_zero()) throw EngineError("monomial division by zero: " + a.str() + " / 0");
        if (a.is_zero()) return zero();
        return Monomial(a.coeff / b.coeff, a.exp - b.exp);
    }
    friend Monomial operator-(const Monomial& a) { return Monomial(-a.coeff, a.exp); }

    Monomial pow(long long e) const {
        if (is_zero()) {
            if (e < 0) throw EngineError("monomial zero raised to a negative power");
            return e == 0 ? one() : zero();
        }
        return Monomial(rat_pow(coeff, e), exp * Rational(e));
    }

    // Principal square root; exists iff the coefficient is a square of a
    // rational (the exponent always halves exactly).
    std::optional<Monomial> sqrt() const {
        if (is_zero()) return zero();
        auto c = rat_sqrt(coeff);
        if (!c) return std::nullopt;
        return Monomial(*c, exp / 2);
    }

    std::string str() const {
        if (is_zero()) return "0";
        if (exp.is_zero()) return rat_str(coeff);
        std::string e = rat_is_int(exp) ? rat_str(exp) : "(" + rat_str(exp) + ")";
        std::string qs = exp == 1 ? "q" : "q^" + e;
        if (coeff == 1) return qs;
        if (coeff == -1) return "-" + qs;
        return rat_str(coeff) + "*" + qs;
    }
};

inline Monomial msqrt_or_throw(const Monomial& m, const std::string& what) {
    auto s = m.sqrt();
    if (!s)
        throw LatticeError("no exact square root for " + what + " = " + m.str() +
                           "; choose bindings with square coefficients");
    return *s;
}

}  // namespace wpb
