#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpb/errors.hpp"
#include "wpb/monomial.hpp"
#include "wpb/rational.hpp"

namespace wpb {

/**
 * Sparse Laurent polynomial in q over the rationals, with exponents on the
 * lattice (1/L)*Z. Stored canonically: no zero coefficients, and the lattice
 * is reduced to the smallest L representing every exponent, so structural
 * equality coincides with mathematical equality.
 */
class LaurentPoly {
  public:
    using TermMap = std::map<long long, Rational>;  // exponent numerator -> coeff

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Rational(1)); }

    static LaurentPoly constant(Rational c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[0] = std::move(c);
        return p;
    }

    static LaurentPoly monomial(const Monomial& m) {
        LaurentPoly p;
        if (m.is_zero()) return p;
        long long den = rat_den(m.exp).convert_to<long long>();
        p.lat_ = den;
        p.terms_[rat_num(m.exp).convert_to<long long>()] = m.coeff;
        p.canonicalize();
        return p;
    }

    // q^e with rational exponent.
    static LaurentPoly qpow(const Rational& e) { return monomial(Monomial(Rational(1), e)); }

    static LaurentPoly make(long long lattice, TermMap terms) {
        LaurentPoly p;
        p.lat_ = lattice;
        p.terms_ = std::move(terms);
        for (auto it = p.terms_.begin(); it != p.terms_.end();) {
            if (it->second.is_zero())
                it = p.terms_.erase(it);
            else
                ++it;
        }
        p.canonicalize();
        return p;
    }

    long long lattice() const { return lat_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    Rational exponent_of(TermMap::const_iterator it) const {
        return Rational(it->first, lat_);
    }

    std::optional<Rational> min_exp() const {
        if (terms_.empty()) return std::nullopt;
        return Rational(terms_.begin()->first, lat_);
    }
    std::optional<Rational> max_exp() const {
        if (terms_.empty()) return std::nullopt;
        return Rational(terms_.rbegin()->first, lat_);
    }

    Rational coeff_at(const Rational& e) const {
        Rational scaled = e * lat_;
        if (!rat_is_int(scaled)) return Rational(0);
        auto it = terms_.find(rat_num(scaled).convert_to<long long>());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lat_ == b.lat_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        return add_sub(a, b, false);
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return add_sub(a, b, true);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        long long L = ll_lcm(a.lat_, b.lat_);
        long long sa = L / a.lat_, sb = L / b.lat_;
        TermMap out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Rational prod = ca * cb;
                auto [it, inserted] = out.try_emplace(ea * sa + eb * sb, prod);
                if (!inserted) {
                    it->second += prod;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        return make(L, std::move(out));
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c) {
        if (c.is_zero()) return zero();
        LaurentPoly r = a;
        for (auto& [e, k] : r.terms_) k *= c;
        return r;
    }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) { return a * c; }

    friend LaurentPoly operator*(const LaurentPoly& a, const Monomial& m) {
        return a * monomial(m);
    }

    LaurentPoly pow(long long e) const {
        if (e < 0) throw EngineError("LaurentPoly::pow: negative exponent");
        LaurentPoly acc = one(), b = *this;
        unsigned long long n = static_cast<unsigned long long>(e);
        while (n) {
            if (n & 1ULL) acc = acc * b;
            if (n >>= 1ULL) b = b * b;
        }
        return acc;
    }

    // Drop all terms with exponent >= cutoff.
    LaurentPoly truncated(const Rational& cutoff) const {
        LaurentPoly r;
        r.lat_ = lat_;
        for (const auto& [e, c] : terms_) {
            if (Rational(e, lat_) < cutoff) r.terms_[e] = c;
        }
        r.canonicalize();
        return r;
    }

    // Exponent substitution e -> factor*e (q -> q^factor; factor -1 gives q -> 1/q).
    LaurentPoly subst_exp(const Rational& factor) const {
        TermMap out;
        long long rd = rat_den(factor).convert_to<long long>();
        long long rn = rat_num(factor).convert_to<long long>();
        for (const auto& [e, c] : terms_) out[e * rn] = c;
        LaurentPoly r;
        r.lat_ = lat_ * rd;
        r.terms_ = std::move(out);
        r.canonicalize();
        return r;
    }

    // Re-express on a given multiple of the current lattice (test helper).
    LaurentPoly with_lattice(long long L) const {
        if (L % lat_ != 0) throw LatticeError("with_lattice: not a multiple of current lattice");
        LaurentPoly r;
        r.lat_ = L;
        long long s = L / lat_;
        for (const auto& [e, c] : terms_) r.terms_[e * s] = c;
        return r;  // deliberately not canonicalized
    }

    LaurentPoly canonical() const {
        LaurentPoly r = *this;
        r.canonicalize();
        return r;
    }

    // The single term as a monomial, if this polynomial is one.
    std::optional<Monomial> as_monomial() const {
        if (is_zero()) return Monomial::zero();
        if (terms_.size() != 1) return std::nullopt;
        return Monomial(terms_.begin()->second, Rational(terms_.begin()->first, lat_));
    }

    // Exact polynomial quotient, or nullopt when division leaves a remainder.
    std::optional<LaurentPoly> div_exact(const LaurentPoly& den) const {
        if (den.is_zero()) throw EngineError("div_exact: division by zero polynomial");
        if (is_zero()) return zero();
        long long L = ll_lcm(lat_, den.lat_);
        LaurentPoly num = with_scaled(L), d = den.with_scaled(L);
        long long dlead = d.terms_.rbegin()->first;
        const Rational& dc = d.terms_.rbegin()->second;
        TermMap q;
        while (!num.terms_.empty()) {
            long long nlead = num.terms_.rbegin()->first;
            if (num.terms_.size() < 1) break;
            Rational qc = num.terms_.rbegin()->second / dc;
            long long qe = nlead - dlead;
            q[qe] = qc;
            // num -= (qc q^qe) * d
            for (const auto& [e, c] : d.terms_) {
                long long te = e + qe;
                Rational prod = qc * c;
                auto it = num.terms_.find(te);
                if (it == num.terms_.end()) {
                    num.terms_[te] = -prod;
                } else {
                    it->second -= prod;
                    if (it->second.is_zero()) num.terms_.erase(it);
                }
            }
            if (!num.terms_.empty() && num.terms_.rbegin()->first >= nlead)
                throw EngineError("div_exact: internal degree did not decrease");
        }
        if (!num.terms_.empty()) return std::nullopt;
        return make(L, std::move(q));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational cc = c;
            if (first) {
                if (cc < 0) {
                    out += "-";
                    cc = -cc;
                }
            } else {
                out += cc < 0 ? " - " : " + ";
                if (cc < 0) cc = -cc;
            }
            Rational ex(e, lat_);
            std::string me;
            if (ex.is_zero()) {
                me = rat_str(cc);
            } else {
                std::string qs =
                    ex == 1 ? "q"
                            : "q^" + (rat_is_int(ex) && ex > 0 ? rat_str(ex)
                                                               : "(" + rat_str(ex) + ")");
                me = cc == 1 ? qs : rat_str(cc) + "*" + qs;
            }
            out += me;
            first = false;
        }
        return out;
    }

  private:
    long long lat_ = 1;
    TermMap terms_;

    void canonicalize() {
        if (terms_.empty()) {
            lat_ = 1;
            return;
        }
        long long g = lat_;
        for (const auto& [e, c] : terms_) {
            g = ll_gcd(g, e);
            if (g == 1) break;
        }
        if (g > 1) {
            TermMap out;
            for (auto& [e, c] : terms_) out[e / g] = std::move(c);
            terms_ = std::move(out);
            lat_ /= g;
        }
    }

    LaurentPoly with_scaled(long long L) const {
        LaurentPoly r;
        r.lat_ = L;
        long long s = L / lat_;
        for (const auto& [e, c] : terms_) r.terms_[e * s] = c;
        return r;
    }

    static LaurentPoly add_sub(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
        long long L = ll_lcm(a.lat_ == 0 ? 1 : a.lat_, b.lat_ == 0 ? 1 : b.lat_);
        if (a.is_zero()) L = b.lat_;
        if (b.is_zero()) L = a.lat_;
        long long sa = L / a.lat_, sb = L / b.lat_;
        TermMap out;
        for (const auto& [e, c] : a.terms_) out[e * sa] = c;
        for (const auto& [e, c] : b.terms_) {
            auto [it, inserted] = out.try_emplace(e * sb, sub ? Rational(-c) : c);
            if (!inserted) {
                if (sub)
                    it->second -= c;
                else
                    it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return make(L, std::move(out));
    }
};

// (1 - m) as a polynomial.
inline LaurentPoly one_minus(const Monomial& m) {
    return LaurentPoly::one() - LaurentPoly::monomial(m);
}

// ---- truncated-series arithmetic (exact modulo q^cutoff) ----

inline LaurentPoly mul_trunc(const LaurentPoly& a, const LaurentPoly& b, const Rational& cutoff) {
    return (a * b).truncated(cutoff);
}

// Laurent-series inverse of p, exact below `cutoff`. The lowest term of p is
// inverted exactly; the remainder is expanded geometrically.
inline LaurentPoly inv_trunc(const LaurentPoly& p, const Rational& cutoff) {
    if (p.is_zero()) throw PoleError("series inverse of the zero polynomial");
    auto it = p.terms().begin();
    Monomial lead(it->second, Rational(it->first, p.lattice()));
    Monomial ilead = Monomial::one() / lead;
    // r = p/lead - 1 has strictly positive exponents.
    LaurentPoly r = p * ilead - LaurentPoly::one();
    if (!r.is_zero() && *r.min_exp() <= 0)
        throw EngineError("inv_trunc: expected strictly increasing exponents");
    Rational rel = cutoff + lead.exp;  // precision needed for the (1 + r)^-1 part
    LaurentPoly acc = LaurentPoly::one(), term = LaurentPoly::one();
    LaurentPoly nr = (-r).truncated(rel);
    while (true) {
        term = mul_trunc(term, nr, rel);
        if (term.is_zero()) break;
        acc += term;
    }
    return (acc * ilead).truncated(cutoff);
}

inline LaurentPoly div_trunc(const LaurentPoly& a, const LaurentPoly& b, const Rational& cutoff) {
    if (a.is_zero()) return LaurentPoly::zero();
    Rational need = cutoff - *a.min_exp();
    if (need < cutoff) need = cutoff;
    return mul_trunc(a, inv_trunc(b, need), cutoff);
}

inline bool eq_trunc(const LaurentPoly& a, const LaurentPoly& b, const Rational& cutoff) {
    return (a - b).truncated(cutoff).is_zero();
}

}  // namespace wpb
