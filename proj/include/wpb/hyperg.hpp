#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpb/errors.hpp"
#include "wpb/qfuncs.hpp"
#include "wpb/ratio.hpp"
#include "wpb/trunc.hpp"

namespace wpb {

enum class Poisedness { well_poised, very_well_poised, nearly_poised_1, nearly_poised_2, none };

inline std::string to_string(Poisedness p) {
    switch (p) {
        case Poisedness::well_poised: return "well_poised";
        case Poisedness::very_well_poised: return "very_well_poised";
        case Poisedness::nearly_poised_1: return "nearly_poised_1";
        case Poisedness::nearly_poised_2: return "nearly_poised_2";
        default: return "none";
    }
}

/** Basic hypergeometric series r+1_phi_r: upper has one more entry than lower. */
struct PhiSpec {
    std::vector<Monomial> upper;
    std::vector<Monomial> lower;
    Monomial base = Monomial::q();
    Monomial z = Monomial::q();

    void check_shape() const {
        if (upper.size() != lower.size() + 1)
            throw EngineError("phi spec: upper list must be one longer than lower list");
        if (base.is_zero()) throw EngineError("phi spec: zero base");
    }
};

/** Very-well-poised compact form: a1 plus the tail a4..a_{r+1}. */
struct WSpec {
    Monomial a1;
    std::vector<Monomial> tail;
    Monomial base = Monomial::q();
    Monomial z = Monomial::q();
};

/** Bibasic series: a phi-shaped part on base1 and a balanced part on base2. */
struct BibasicSpec {
    std::vector<Monomial> upper1, lower1;  // |lower1| = |upper1| - 1
    Monomial base1 = Monomial::q();
    std::vector<Monomial> upper2, lower2;  // equal lengths
    Monomial base2 = Monomial::q();
    Monomial z = Monomial::q();

    void check_shape() const {
        if (upper1.size() != lower1.size() + 1)
            throw EngineError("bibasic spec: upper1 must be one longer than lower1");
        if (upper2.size() != lower2.size())
            throw EngineError("bibasic spec: upper2 and lower2 must have equal length");
    }
};

// Smallest n >= 0 with parameter == base^-n, if any.
inline std::optional<long long> termination_of(const std::vector<Monomial>& params,
                                               const Monomial& base) {
    std::optional<long long> best;
    for (const auto& u : params) {
        if (u.coeff != 1) continue;
        Rational m = -u.exp / base.exp;
        if (m < 0 || !rat_is_int(m)) continue;
        long long n = rat_to_ll(m);
        if (!best || n < *best) best = n;
    }
    return best;
}

inline std::optional<long long> termination_of(const PhiSpec& s) {
    return termination_of(s.upper, s.base);
}

/**
 * Classify the parameter pattern of a phi series; the most specific matching
 * class wins. Nearly-poised classes need at least two chain links, so that a
 * generic 2phi1 falls through to `none`.
 */
inline Poisedness classify_poised(const PhiSpec& spec) {
    spec.check_shape();
    const auto& u = spec.upper;
    const auto& l = spec.lower;
    std::size_t r = l.size();
    if (r == 0) return Poisedness::none;
    Monomial target = spec.base * u[0];
    std::vector<Monomial> link(r);
    for (std::size_t i = 0; i < r; ++i) link[i] = l[i] * u[i + 1];

    bool all_eq_target = true;
    for (const auto& m : link) all_eq_target = all_eq_target && m == target;
    if (all_eq_target) {
        if (u.size() >= 3 && u[1] == -u[2] && u[1] * u[2] == -(spec.base * spec.base * u[0]))
            return Poisedness::very_well_poised;
        return Poisedness::well_poised;
    }
    if (r >= 2) {
        bool chain_eq = true;
        for (std::size_t i = 1; i < r; ++i) chain_eq = chain_eq && link[i] == link[0];
        if (chain_eq && link[0] != target) return Poisedness::nearly_poised_1;
        bool prefix_eq = true;
        for (std::size_t i = 0; i + 1 < r; ++i) prefix_eq = prefix_eq && link[i] == target;
        if (prefix_eq && link[r - 1] != target) return Poisedness::nearly_poised_2;
    }
    return Poisedness::none;
}

inline PhiSpec desugar(const WSpec& w) {
    Monomial s = msqrt_or_throw(w.a1, "sqrt of the leading W parameter");
    PhiSpec p;
    p.base = w.base;
    p.z = w.z;
    p.upper.push_back(w.a1);
    p.upper.push_back(w.base * s);
    p.upper.push_back(-(w.base * s));
    p.lower.push_back(s);
    p.lower.push_back(-s);
    for (const auto& t : w.tail) {
        if (t.is_zero()) throw EngineError("W spec: zero tail parameter");
        p.upper.push_back(t);
        p.lower.push_back(w.base * w.a1 / t);
    }
    return p;
}

namespace detail {

// One summation step: multiplies the running term by
//   prod(1 - u_i base^j) / [(1 - base^(j+1)) prod(1 - l_i base^j)] * z.
struct PhiStepper {
    const PhiSpec& s;
    long long j = 0;

    LaurentPoly num_factor() const {
        LaurentPoly f = LaurentPoly::one();
        for (const auto& u : s.upper) f *= one_minus(u * s.base.pow(j));
        return f;
    }
    LaurentPoly den_factor() const {
        LaurentPoly f = one_minus_checked(s.base.pow(j + 1), "base factor");
        for (std::size_t i = 0; i < s.lower.size(); ++i)
            f *= one_minus_checked(s.lower[i] * s.base.pow(j), "lower parameter " + s.lower[i].str());
        return f;
    }
    static LaurentPoly one_minus_checked(const Monomial& m, const std::string& what) {
        if (m.is_one())
            throw PoleError("pole: vanishing factor (1 - " + m.str() + ") from " + what);
        return one_minus(m);
    }
};

// Index past any parameter with a negative exponent; beyond it every term's
// order grows by at least z.exp per step.
inline long long transient_bound(const std::vector<Monomial>& params, const Monomial& base) {
    long long jmin = 0;
    for (const auto& p : params) {
        if (p.is_zero() || p.exp >= 0) continue;
        Rational steps = -p.exp / base.exp;
        long long k = rat_num(rat_floor(steps)).convert_to<long long>() + 1;
        if (k > jmin) jmin = k;
    }
    return jmin;
}

}  // namespace detail

/** Exact evaluation of a terminating phi series. The sum is accumulated over
 * the running denominator, so the result's denominator is the product of the
 * lower-parameter factors rather than a cross-multiplied blowup. */
inline LaurentRatio eval_phi(const PhiSpec& spec) {
    spec.check_shape();
    auto n = termination_of(spec);
    if (!n)
        throw EngineError("eval_phi: series does not terminate; supply a truncation order");
    LaurentPoly S = LaurentPoly::one();   // sum scaled by the running denominator
    LaurentPoly N = LaurentPoly::one();   // numerator of the current term
    LaurentPoly zpoly = LaurentPoly::monomial(spec.z);
    detail::PhiStepper step{spec};
    LaurentPoly D = LaurentPoly::one();
    for (long long j = 0; j < *n; ++j) {
        step.j = j;
        LaurentPoly nf = step.num_factor();
        if (nf.is_zero()) break;  // an upper parameter hit base^-m with m < n
        LaurentPoly df = step.den_factor();
        N = N * nf * zpoly;
        D = D * df;
        S = S * df + N;
    }
    return LaurentRatio(S, D);
}

/** Truncated evaluation, exact below `cutoff`; works for non-terminating
 * series when the argument has a positive exponent. */
inline TruncVal eval_phi_trunc(const PhiSpec& spec, const Rational& cutoff) {
    spec.check_shape();
    auto n = termination_of(spec);
    if (!n && spec.z.exp <= 0)
        throw EngineError("eval_phi_trunc: non-terminating series needs argument exponent > 0");
    long long jmin = detail::transient_bound(spec.upper, spec.base);
    long long jmin2 = detail::transient_bound(spec.lower, spec.base);
    if (jmin2 > jmin) jmin = jmin2;
    TruncVal sum = TruncVal::exact(LaurentPoly::one(), cutoff);
    TruncVal term = sum;
    detail::PhiStepper step{spec};
    for (long long j = 0;; ++j) {
        if (n && j >= *n) break;
        step.j = j;
        LaurentPoly nf = step.num_factor();
        if (nf.is_zero()) break;
        TruncVal den = TruncVal::exact(step.den_factor(), term.valid);
        term = term * TruncVal::exact(nf * LaurentPoly::monomial(spec.z), term.valid) *
               den.inverse();
        if (term.poly.is_zero() && j >= jmin) break;
        sum = sum + term;
    }
    return sum;
}

inline LaurentRatio eval_W(const WSpec& w) { return eval_phi(desugar(w)); }
inline TruncVal eval_W_trunc(const WSpec& w, const Rational& cutoff) {
    return eval_phi_trunc(desugar(w), cutoff);
}

inline std::optional<long long> termination_of(const BibasicSpec& s) {
    auto t1 = termination_of(s.upper1, s.base1);
    auto t2 = termination_of(s.upper2, s.base2);
    if (t1 && t2) return std::min(*t1, *t2);
    return t1 ? t1 : t2;
}

inline LaurentRatio eval_bibasic(const BibasicSpec& spec) {
    spec.check_shape();
    auto n = termination_of(spec);
    if (!n)
        throw EngineError("eval_bibasic: series does not terminate; supply a truncation order");
    LaurentPoly S = LaurentPoly::one(), N = LaurentPoly::one(), D = LaurentPoly::one();
    LaurentPoly zpoly = LaurentPoly::monomial(spec.z);
    for (long long j = 0; j < *n; ++j) {
        LaurentPoly nf = LaurentPoly::one();
        for (const auto& u : spec.upper1) nf *= one_minus(u * spec.base1.pow(j));
        for (const auto& u : spec.upper2) nf *= one_minus(u * spec.base2.pow(j));
        if (nf.is_zero()) break;
        LaurentPoly df =
            detail::PhiStepper::one_minus_checked(spec.base1.pow(j + 1), "base factor");
        for (const auto& l : spec.lower1)
            df *= detail::PhiStepper::one_minus_checked(l * spec.base1.pow(j),
                                                        "lower parameter " + l.str());
        for (const auto& l : spec.lower2)
            df *= detail::PhiStepper::one_minus_checked(l * spec.base2.pow(j),
                                                        "lower parameter " + l.str());
        N = N * nf * zpoly;
        D = D * df;
        S = S * df + N;
    }
    return LaurentRatio(S, D);
}

struct ReversedPhi {
    PhiSpec spec;
    LaurentRatio prefactor;  // eval(original) == prefactor * eval(reversed)
};

/**
 * Reverse the order of summation of a terminating series. The returned
 * prefactor carries the closed form (including the (z/base)^n factor the
 * two-term check requires), so eval(original) = prefactor * eval(reversed).
 */
inline ReversedPhi reverse_terminating(const PhiSpec& spec) {
    spec.check_shape();
    auto nopt = termination_of(spec);
    if (!nopt) throw EngineError("reverse_terminating: series does not terminate");
    long long n = *nopt;
    Monomial qn = spec.base.pow(-n);
    // Remove one copy of the terminating parameter; everything else reverses.
    std::vector<Monomial> rest;
    bool removed = false;
    for (const auto& u : spec.upper) {
        if (!removed && u == qn) {
            removed = true;
            continue;
        }
        if (u.is_zero()) throw EngineError("reverse_terminating: zero upper parameter");
        rest.push_back(u);
    }
    for (const auto& l : spec.lower)
        if (l.is_zero()) throw EngineError("reverse_terminating: zero lower parameter");
    if (spec.z.is_zero()) throw EngineError("reverse_terminating: zero argument");

    ReversedPhi out;
    out.spec.base = spec.base;
    Monomial shift = spec.base.pow(1 - n);
    Monomial prod_ratio = Monomial::one();  // prod(b_i)/prod(a_i)
    for (const auto& b : spec.lower) {
        out.spec.upper.push_back(shift / b);
        prod_ratio = prod_ratio * b;
    }
    out.spec.upper.push_back(qn);
    for (const auto& a : rest) {
        out.spec.lower.push_back(shift / a);
        prod_ratio = prod_ratio / a;
    }
    out.spec.z = prod_ratio * spec.base.pow(n + 1) / spec.z;

    LaurentPoly pnum = LaurentPoly::one(), pden = LaurentPoly::one();
    for (const auto& a : rest) pnum *= pochhammer(a, spec.base, n);
    for (const auto& b : spec.lower)
        pden *= pochhammer_nonzero(b, spec.base, n, "reversal prefactor");
    Monomial scale = (spec.z / spec.base).pow(n) * spec.base.pow(n * (1 - n) / 2);
    if (n % 2 == 1) scale = -scale;
    out.prefactor = LaurentRatio(pnum * scale, pden);
    return out;
}

}  // namespace wpb
