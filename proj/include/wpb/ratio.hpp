#pragma once

#include <optional>
#include <string>
#include <utility>

#include "wpb/errors.hpp"
#include "wpb/laurent.hpp"

namespace wpb {

/**
 * Quotient of two Laurent polynomials with a nonzero denominator. Values are
 * compared by cross-multiplication; no polynomial gcd is ever computed. Both
 * parts are normalized by the denominator's lowest term, which keeps sizes
 * small and makes the denominator of a polynomial value exactly 1.
 */
class LaurentRatio {
  public:
    LaurentRatio() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}

    LaurentRatio(LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw PoleError("LaurentRatio: zero denominator");
        normalize();
    }

    LaurentRatio(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}  // NOLINT
    static LaurentRatio from_monomial(const Monomial& m) {
        return LaurentRatio(LaurentPoly::monomial(m));
    }
    static LaurentRatio one() { return LaurentRatio(LaurentPoly::one()); }
    static LaurentRatio zero() { return LaurentRatio(); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend LaurentRatio operator+(const LaurentRatio& a, const LaurentRatio& b) {
        if (a.den_ == b.den_) return LaurentRatio(a.num_ + b.num_, a.den_);
        return LaurentRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend LaurentRatio operator-(const LaurentRatio& a, const LaurentRatio& b) {
        if (a.den_ == b.den_) return LaurentRatio(a.num_ - b.num_, a.den_);
        return LaurentRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend LaurentRatio operator*(const LaurentRatio& a, const LaurentRatio& b) {
        return LaurentRatio(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend LaurentRatio operator/(const LaurentRatio& a, const LaurentRatio& b) {
        if (b.is_zero()) throw PoleError("LaurentRatio: division by zero value");
        return LaurentRatio(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend LaurentRatio operator-(const LaurentRatio& a) {
        LaurentRatio r = a;
        r.num_ = -r.num_;
        return r;
    }

    LaurentRatio& operator+=(const LaurentRatio& o) { return *this = *this + o; }
    LaurentRatio& operator-=(const LaurentRatio& o) { return *this = *this - o; }
    LaurentRatio& operator*=(const LaurentRatio& o) { return *this = *this * o; }
    LaurentRatio& operator/=(const LaurentRatio& o) { return *this = *this / o; }

    LaurentRatio pow(long long e) const {
        if (e >= 0) return LaurentRatio(num_.pow(e), den_.pow(e));
        if (is_zero()) throw PoleError("LaurentRatio: zero raised to a negative power");
        return LaurentRatio(den_.pow(-e), num_.pow(-e));
    }

    LaurentRatio subst_exp(const Rational& factor) const {
        return LaurentRatio(num_.subst_exp(factor), den_.subst_exp(factor));
    }

    // Exact equality by cross-multiplication.
    friend bool operator==(const LaurentRatio& a, const LaurentRatio& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const LaurentRatio& a, const LaurentRatio& b) { return !(a == b); }

    // Plain polynomial value, if the division is exact.
    std::optional<LaurentPoly> as_poly() const {
        if (den_.is_one()) return num_;
        return num_.div_exact(den_);
    }

    std::optional<Monomial> as_monomial() const {
        auto n = num_.as_monomial();
        auto d = den_.as_monomial();
        if (n && d) return *n / *d;
        auto p = as_poly();
        if (p) return p->as_monomial();
        return std::nullopt;
    }

    // Series expansion, exact below `cutoff`.
    LaurentPoly series(const Rational& cutoff) const {
        if (den_.is_one()) return num_.truncated(cutoff);
        return div_trunc(num_, den_, cutoff);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    LaurentPoly num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        auto it = den_.terms().begin();
        Monomial lead(it->second, Rational(it->first, den_.lattice()));
        if (lead.is_one()) return;
        Monomial inv = Monomial::one() / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
};

inline bool ratio_eq(const LaurentRatio& a, const LaurentRatio& b) { return a == b; }

}  // namespace wpb
