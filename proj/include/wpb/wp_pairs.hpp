#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wpb/errors.hpp"
#include "wpb/hyperg.hpp"
#include "wpb/qfuncs.hpp"
#include "wpb/ratio.hpp"

namespace wpb {

/** Parameter bindings for pair generators: name -> monomial value. */
struct Bindings {
    std::map<std::string, Monomial> vals;

    Bindings() = default;
    Bindings(std::initializer_list<std::pair<const std::string, Monomial>> init) : vals(init) {}

    bool has(const std::string& name) const { return vals.count(name) != 0; }

    const Monomial& at(const std::string& name) const {
        auto it = vals.find(name);
        if (it == vals.end()) throw ConfigError("missing binding for parameter '" + name + "'");
        return it->second;
    }

    Bindings with(const std::string& name, const Monomial& m) const {
        Bindings b = *this;
        b.vals[name] = m;
        return b;
    }

    std::string fingerprint() const {
        std::string s;
        for (const auto& [k, v] : vals) s += k + "=" + v.str() + ";";
        return s;
    }

    std::string str() const {
        std::string s;
        for (const auto& [k, v] : vals) {
            if (!s.empty()) s += ", ";
            s += k + "=" + v.str();
        }
        return s;
    }
};

// Memo for generator values across nested construct sums.
using EvalCache = std::unordered_map<std::string, LaurentRatio>;

using Generator = std::function<LaurentRatio(long long, const Bindings&, EvalCache&)>;

struct WPPair {
    std::string id;
    std::string source;  // catalog tags of the defining formulas
    std::vector<std::string> required;
    long long lattice = 1;
    Generator alpha_fn, beta_fn;

    LaurentRatio alpha(long long n, const Bindings& b, EvalCache& cache) const {
        return cached('a', n, b, cache, alpha_fn);
    }
    LaurentRatio beta(long long n, const Bindings& b, EvalCache& cache) const {
        return cached('b', n, b, cache, beta_fn);
    }
    LaurentRatio alpha(long long n, const Bindings& b) const {
        EvalCache c;
        return alpha(n, b, c);
    }
    LaurentRatio beta(long long n, const Bindings& b) const {
        EvalCache c;
        return beta(n, b, c);
    }

    void require_bindings(const Bindings& b) const {
        for (const auto& name : required)
            if (!b.has(name))
                throw ConfigError("pair '" + id + "' needs binding '" + name + "'");
    }

  private:
    LaurentRatio cached(char side, long long n, const Bindings& b, EvalCache& cache,
                        const Generator& fn) const {
        std::string key = id + '#' + side + std::to_string(n) + '|' + b.fingerprint();
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        LaurentRatio v = fn(n, b, cache);
        cache.emplace(std::move(key), v);
        return v;
    }
};

namespace wpdetail {

inline const Monomial& Q1() {
    static const Monomial q = Monomial::q();
    return q;
}

inline LaurentPoly P(const Monomial& x, long long n) { return pochhammer(x, Q1(), n); }
inline LaurentPoly P(const Monomial& x, const Monomial& base, long long n) {
    return pochhammer(x, base, n);
}
inline LaurentPoly Pnz(const Monomial& x, long long n, const std::string& what) {
    return pochhammer_nonzero(x, Q1(), n, what);
}
inline LaurentPoly Pnz(const Monomial& x, const Monomial& base, long long n,
                       const std::string& what) {
    return pochhammer_nonzero(x, base, n, what);
}

// prod_{i=0}^{n-1} (x - y*base^i): the pole-free grouping of (y/x')-style
// Pochhammers against x^n powers; total in x, including x = 0.
inline LaurentPoly diff_prod(const Monomial& x, const Monomial& y, const Monomial& base,
                             long long n) {
    LaurentPoly acc = LaurentPoly::one();
    Monomial t = y;
    for (long long i = 0; i < n; ++i) {
        acc *= LaurentPoly::monomial(x) - LaurentPoly::monomial(t);
        t = t * base;
    }
    return acc;
}

inline void check_not_one(const Monomial& m, const std::string& what) {
    if (m.is_one()) throw PoleError("vanishing factor (1 - " + m.str() + ") in " + what);
}

}  // namespace wpdetail

inline const std::vector<std::string>& wp_seed_ids() {
    static const std::vector<std::string> ids = {"unit",      "singh",     "p31", "p32",
                                                 "p4",        "bressoud2", "bressoud3",
                                                 "watson"};
    return ids;
}

WPPair wp_seed(const std::string& id);

/**
 * First construct: given a pair and two inserted parameters, produce the
 * child pair. The k-slot of the parent is rebound to c = k*rho1*rho2/(a*q);
 * the recurring quotient k/c is formed symbolically as a*q/(rho1*rho2) so the
 * classical limit k = 0 stays evaluable.
 */
inline WPPair construct_a(const WPPair& parent, const Monomial& rho1, const Monomial& rho2) {
    using namespace wpdetail;
    if (rho1.is_zero() || rho2.is_zero())
        throw ConfigError("construct_a: inserted parameters must be nonzero");
    WPPair child;
    child.id = "a(" + parent.id + ";" + rho1.str() + "," + rho2.str() + ")";
    child.source = parent.source;
    child.required = parent.required;
    child.lattice = parent.lattice;
    auto env = [rho1, rho2](const Bindings& b) {
        const Monomial &a = b.at("a"), &k = b.at("k");
        Monomial c = k * rho1 * rho2 / (a * Q1());
        Monomial koc = a * Q1() / (rho1 * rho2);  // k/c, defined at k = 0
        return std::tuple<Monomial, Monomial, Monomial, Monomial>(a, k, c, koc);
    };
    WPPair par = parent;
    child.alpha_fn = [par, rho1, rho2, env](long long n, const Bindings& b,
                                            EvalCache& cache) -> LaurentRatio {
        auto [a, k, c, koc] = env(b);
        LaurentPoly num = P(rho1, n) * P(rho2, n) * LaurentPoly::monomial(koc.pow(n));
        LaurentPoly den = Pnz(a * Q1() / rho1, n, "construct_a alpha") *
                          Pnz(a * Q1() / rho2, n, "construct_a alpha");
        return LaurentRatio(num, den) * par.alpha(n, b.with("k", c), cache);
    };
    child.beta_fn = [par, rho1, rho2, env](long long n, const Bindings& b,
                                           EvalCache& cache) -> LaurentRatio {
        auto [a, k, c, koc] = env(b);
        check_not_one(c, "construct_a beta (1 - c)");
        Bindings pb = b.with("k", c);
        Monomial kr1 = k * rho1 / a, kr2 = k * rho2 / a;
        LaurentRatio pref(P(kr1, n) * P(kr2, n),
                          Pnz(a * Q1() / rho1, n, "construct_a beta") *
                              Pnz(a * Q1() / rho2, n, "construct_a beta"));
        LaurentRatio sum = LaurentRatio::zero();
        for (long long j = 0; j <= n; ++j) {
            LaurentPoly num = P(rho1, j) * P(rho2, j) * one_minus(c * Q1().pow(2 * j)) *
                              P(koc, n - j) * P(k, n + j) *
                              LaurentPoly::monomial(koc.pow(j));
            LaurentPoly den = Pnz(kr1, j, "construct_a beta") * Pnz(kr2, j, "construct_a beta") *
                              one_minus(c) * P(Q1(), n - j) *
                              Pnz(c * Q1(), n + j, "construct_a beta");
            sum += LaurentRatio(num, den) * par.beta(j, pb, cache);
        }
        return pref * sum;
    };
    return child;
}

/**
 * Second construct (a termwise involution): the parent's k-slot is rebound to
 * q*a^2/k, so k = 0 is outside its domain.
 */
inline WPPair construct_b(const WPPair& parent) {
    using namespace wpdetail;
    WPPair child;
    child.id = "b(" + parent.id + ")";
    child.source = parent.source;
    child.required = parent.required;
    child.lattice = parent.lattice;
    WPPair par = parent;
    auto env = [](const Bindings& b) {
        const Monomial &a = b.at("a"), &k = b.at("k");
        if (k.is_zero()) throw ConfigError("construct_b: k = 0 is not in the domain");
        Monomial kk = Q1() * a * a / k;        // the rebound k-slot
        Monomial w = k * k / (Q1() * a * a);   // the geometric weight
        return std::tuple<Monomial, Monomial, Monomial, Monomial>(a, k, kk, w);
    };
    child.alpha_fn = [par, env](long long n, const Bindings& b,
                                EvalCache& cache) -> LaurentRatio {
        auto [a, k, kk, w] = env(b);
        LaurentPoly num = P(kk, 2 * n) * LaurentPoly::monomial(w.pow(n));
        LaurentPoly den = Pnz(k, 2 * n, "construct_b alpha");
        return LaurentRatio(num, den) * par.alpha(n, b.with("k", kk), cache);
    };
    child.beta_fn = [par, env](long long n, const Bindings& b, EvalCache& cache) -> LaurentRatio {
        auto [a, k, kk, w] = env(b);
        Bindings pb = b.with("k", kk);
        LaurentRatio sum = LaurentRatio::zero();
        for (long long j = 0; j <= n; ++j) {
            LaurentRatio coeff(P(w, n - j) * LaurentPoly::monomial(w.pow(j)), P(Q1(), n - j));
            sum += coeff * par.beta(j, pb, cache);
        }
        return sum;
    };
    return child;
}

struct RelationLine {
    long long n = 0;
    bool pass = false;
    std::string lhs, rhs;  // populated on failure
};

struct RelationReport {
    std::string pair_id;
    std::string bindings;
    std::vector<RelationLine> lines;
    bool ok = true;
    long long first_failure = -1;
};

/**
 * Check the defining relation of a WP pair for 0 <= n <= n_max:
 *   beta_n = sum_j (k/a)_{n-j}/(q)_{n-j} * (k)_{n+j}/(aq)_{n+j} * alpha_j.
 */
inline RelationReport check_wp_relation(const WPPair& pair, const Bindings& b, long long n_max) {
    using namespace wpdetail;
    pair.require_bindings(b);
    const Monomial &a = b.at("a"), &k = b.at("k");
    Monomial ka = k / a;
    RelationReport rep;
    rep.pair_id = pair.id;
    rep.bindings = b.str();
    EvalCache cache;
    for (long long n = 0; n <= n_max; ++n) {
        LaurentRatio lhs = pair.beta(n, b, cache);
        LaurentRatio rhs = LaurentRatio::zero();
        for (long long j = 0; j <= n; ++j) {
            LaurentRatio w(P(ka, n - j) * P(k, n + j),
                           P(Q1(), n - j) * Pnz(a * Q1(), n + j, "WP relation weight"));
            rhs += w * pair.alpha(j, b, cache);
        }
        RelationLine line;
        line.n = n;
        line.pass = ratio_eq(lhs, rhs);
        if (!line.pass) {
            line.lhs = lhs.str();
            line.rhs = rhs.str();
            rep.ok = false;
            if (rep.first_failure < 0) rep.first_failure = n;
        }
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

/** Apply a construct word (letters 'a'/'b'); each 'a' consumes one rho pair. */
inline WPPair wp_derive(const WPPair& seed, const std::string& word,
                        const std::vector<std::pair<Monomial, Monomial>>& rhos) {
    WPPair p = seed;
    std::size_t ri = 0;
    for (char c : word) {
        if (c == 'a') {
            if (ri >= rhos.size())
                throw ConfigError("construct word needs a rho1/rho2 pair for each 'a' step");
            p = construct_a(p, rhos[ri].first, rhos[ri].second);
            ++ri;
        } else if (c == 'b') {
            p = construct_b(p);
        } else {
            throw ConfigError(std::string("unknown construct letter '") + c + "'");
        }
    }
    return p;
}

inline RelationReport check_relation_for_derived(const WPPair& parent, char construct,
                                                 const Bindings& b, long long n_max) {
    if (construct == 'a')
        return check_wp_relation(construct_a(parent, b.at("rho1"), b.at("rho2")), b, n_max);
    if (construct == 'b') return check_wp_relation(construct_b(parent), b, n_max);
    throw ConfigError("construct must be 'a' or 'b'");
}

// ---- seed catalog ----

inline WPPair wp_seed(const std::string& id) {
    using namespace wpdetail;
    const Monomial q = Q1();
    WPPair p;
    p.id = id;

    if (id == "unit") {
        p.source = "eq2.1,eq2.2";
        p.required = {"a", "k"};
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            check_not_one(a, "unit alpha (1 - a)");
            LaurentPoly num = P(a, n) * one_minus(a * q.pow(2 * n)) *
                              diff_prod(k / a, Monomial::one(), q, n);
            LaurentPoly den =
                P(q, n) * one_minus(a) * Pnz(k * q, n, "unit alpha (kq)_n");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [](long long n, const Bindings&, EvalCache&) -> LaurentRatio {
            return n == 0 ? LaurentRatio::one() : LaurentRatio::zero();
        };
        return p;
    }

    if (id == "singh") {
        p.source = "eq2.3,eq2.4";
        p.required = {"a", "k", "rho1", "rho2"};
        auto env = [q](const Bindings& b) {
            const Monomial &a = b.at("a"), &k = b.at("k");
            const Monomial &r1 = b.at("rho1"), &r2 = b.at("rho2");
            Monomial c = k * r1 * r2 / (a * q);
            Monomial koc = a * q / (r1 * r2);
            return std::tuple<Monomial, Monomial, Monomial, Monomial, Monomial, Monomial>(
                a, k, r1, r2, c, koc);
        };
        p.alpha_fn = [q, env](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            auto [a, k, r1, r2, c, koc] = env(b);
            check_not_one(a, "singh alpha (1 - a)");
            LaurentPoly num = P(a, n) * one_minus(a * q.pow(2 * n)) * P(r1, n) * P(r2, n) *
                              diff_prod(k / a, koc, q, n);
            LaurentPoly den = P(q, n) * one_minus(a) *
                              Pnz(a * q / r1, n, "singh alpha") *
                              Pnz(a * q / r2, n, "singh alpha") *
                              Pnz(c * q, n, "singh alpha (qc)_n");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q, env](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            auto [a, k, r1, r2, c, koc] = env(b);
            LaurentPoly num = P(k * r1 / a, n) * P(k * r2 / a, n) * P(k, n) * P(koc, n);
            LaurentPoly den = Pnz(a * q / r1, n, "singh beta") *
                              Pnz(a * q / r2, n, "singh beta") * P(q, n) *
                              Pnz(c * q, n, "singh beta (qc)_n");
            return LaurentRatio(num, den);
        };
        return p;
    }

    if (id == "p31") {
        p.source = "eq3.3,eq3.4";
        p.required = {"a", "k"};
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            if (k.is_zero()) throw ConfigError("p31: k = 0 is not in the domain");
            check_not_one(a, "p31 alpha (1 - a)");
            Monomial ka = k / a;
            LaurentPoly num = P(a, n) * one_minus(a * q.pow(2 * n)) *
                              P(q * a * a / k, 2 * n) * P(k / (a * q), n) *
                              LaurentPoly::monomial(ka.pow(n));
            LaurentPoly den = P(q, n) * one_minus(a) * Pnz(k, 2 * n, "p31 alpha (k)_2n") *
                              Pnz(a * a * q * q / k, n, "p31 alpha");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            return LaurentRatio(P(k * k / (q * a * a), n), P(q, n));
        };
        return p;
    }

    if (id == "p32") {
        p.source = "eq3.5,eq3.6";
        p.required = {"a", "k"};
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            if (k.is_zero()) throw ConfigError("p32: k = 0 is not in the domain");
            check_not_one(a, "p32 alpha (1 - a)");
            Monomial s = msqrt_or_throw(k, "sqrt(k) in p32");
            Monomial q2 = q.pow(2);
            LaurentPoly num = P(a, n) * one_minus(a * q.pow(2 * n)) *
                              P(a * a * q / k, q2, n) * P(a / s, n) * P(-(a * q / s), n) *
                              P(k / a, n);
            LaurentPoly den = P(q, n) * one_minus(a) * Pnz(q * k, q2, n, "p32 alpha") *
                              Pnz(q * s, n, "p32 alpha") * Pnz(-s, n, "p32 alpha") *
                              Pnz(q * a * a / k, n, "p32 alpha");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            Monomial s = msqrt_or_throw(k, "sqrt(k) in p32");
            LaurentPoly num = P(s, n) * P(k * k / (a * a), n);
            LaurentPoly den = P(q, n) * Pnz(q * s, n, "p32 beta");
            return LaurentRatio(num, den);
        };
        return p;
    }

    if (id == "p4") {
        p.source = "eq3.11,eq3.12";
        p.required = {"a", "k"};
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            if (n % 2 == 1) return LaurentRatio::zero();
            const Monomial &a = b.at("a"), &k = b.at("k");
            check_not_one(a, "p4 alpha (1 - a)");
            long long m = n / 2;
            Monomial q2 = q.pow(2);
            Monomial ka2 = (k / a).pow(2);
            LaurentPoly num = P(a, q2, m) * one_minus(a * q.pow(2 * n)) *
                              diff_prod(ka2, Monomial::one(), q2, m);
            LaurentPoly den = P(q2, q2, m) * one_minus(a) *
                              Pnz(q * q * k * k / a, q2, m, "p4 alpha");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            Monomial q2 = q.pow(2);
            // (a/k)_n (-k/a)^n grouped as prod(q^i - k/a).
            LaurentPoly grouped = LaurentPoly::one();
            Monomial t = Monomial::one();
            for (long long i = 0; i < n; ++i) {
                grouped *= LaurentPoly::monomial(t) - LaurentPoly::monomial(k / a);
                t = t * q;
            }
            LaurentPoly num = P(k, n) * grouped * P(k * k * q / a, q2, n);
            LaurentPoly den = P(q, n) * Pnz(a * q, q2, n, "p4 beta") *
                              Pnz(q * k * k / a, n, "p4 beta");
            return LaurentRatio(num, den);
        };
        return p;
    }

    if (id == "bressoud2") {
        p.source = "eq4.5,eq4.6";
        p.required = {"a", "k"};
        p.lattice = 2;
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            if (k.is_zero()) throw ConfigError("bressoud2: k = 0 is not in the domain");
            Monomial s = msqrt_or_throw(a, "sqrt(a) in bressoud2");
            Monomial sq = Monomial::q(Rational(1, 2));
            check_not_one(s, "bressoud2 alpha (1 - sqrt a)");
            Monomial w = k / (a * sq);
            LaurentPoly num = one_minus(s * q.pow(n)) * P(s, sq, n) * P(sq * a / k, sq, n) *
                              LaurentPoly::monomial(w.pow(n));
            LaurentPoly den = one_minus(s) * P(sq, sq, n) * Pnz(k / s, sq, n, "bressoud2 alpha");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            Monomial s = msqrt_or_throw(a, "sqrt(a) in bressoud2");
            Monomial sq = Monomial::q(Rational(1, 2));
            Monomial w = k / (a * sq);
            LaurentPoly num = P(k, n) * P(a * q / k, n) * P(-(k / s), sq, 2 * n) *
                              LaurentPoly::monomial(w.pow(n));
            LaurentPoly den = P(q, n) * Pnz(k * k / a, n, "bressoud2 beta") *
                              Pnz(-(s * sq), sq, 2 * n, "bressoud2 beta");
            return LaurentRatio(num, den);
        };
        return p;
    }

    if (id == "bressoud3") {
        p.source = "eq4.7,eq4.8";
        p.required = {"a", "k"};
        p.lattice = 2;
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            if (k.is_zero()) throw ConfigError("bressoud3: k = 0 is not in the domain");
            Monomial s = msqrt_or_throw(a, "sqrt(a) in bressoud3");
            Monomial sq = Monomial::q(Rational(1, 2));
            check_not_one(a, "bressoud3 alpha (1 - a)");
            Monomial w = k / (a * sq);
            LaurentPoly num = one_minus(a * q.pow(2 * n)) * P(s, sq, n) * P(a / k, sq, n) *
                              LaurentPoly::monomial(w.pow(n));
            LaurentPoly den =
                one_minus(a) * P(sq, sq, n) * Pnz(k * sq / s, sq, n, "bressoud3 alpha");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k");
            Monomial s = msqrt_or_throw(a, "sqrt(a) in bressoud3");
            Monomial sq = Monomial::q(Rational(1, 2));
            Monomial w = k / (a * sq);
            LaurentPoly num = P(k, n) * P(a / k, n) * P(-(k * sq / s), n) * P(-(k * q / s), n) *
                              LaurentPoly::monomial(w.pow(n));
            LaurentPoly den = P(q, n) * Pnz(q * k * k / a, n, "bressoud3 beta") *
                              Pnz(-s, n, "bressoud3 beta") * Pnz(-(s * sq), n, "bressoud3 beta");
            return LaurentRatio(num, den);
        };
        return p;
    }

    if (id == "watson") {
        p.source = "eq6.2,eq6.3";
        p.required = {"a", "k", "del"};
        p.alpha_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k"), &d = b.at("del");
            if (k.is_zero() || d.is_zero())
                throw ConfigError("watson: k and del must be nonzero");
            check_not_one(a, "watson alpha (1 - a)");
            Monomial w = k * k / (q * a * a);
            LaurentPoly num = P(a, n) * P(d * a, n) * one_minus(a * q.pow(2 * n)) *
                              P(a * q / k, n) * P(a * q / (k * d), n) *
                              LaurentPoly::monomial(w.pow(n));
            LaurentPoly den = P(q, n) * Pnz(q / d, n, "watson alpha (q/del)_n") * one_minus(a) *
                              Pnz(k, n, "watson alpha (k)_n") *
                              Pnz(k * d, n, "watson alpha (k del)_n");
            return LaurentRatio(num, den);
        };
        p.beta_fn = [q](long long n, const Bindings& b, EvalCache&) -> LaurentRatio {
            const Monomial &a = b.at("a"), &k = b.at("k"), &d = b.at("del");
            if (k.is_zero() || d.is_zero())
                throw ConfigError("watson: k and del must be nonzero");
            PhiSpec s;
            s.upper = {d * q.pow(-n), q.pow(-n), a * q / k, a * d};
            s.lower = {k * d, (a / k) * q.pow(1 - n), d * (a / k) * q.pow(1 - n)};
            s.base = q;
            s.z = q;
            LaurentRatio phi = eval_phi(s);
            LaurentRatio pref(P(k / a, n) * P(k / (a * d), n),
                              P(q, n) * Pnz(q / d, n, "watson beta (q/del)_n"));
            return pref * phi;
        };
        return p;
    }

    throw ConfigError("unknown WP seed id '" + id + "'");
}

}  // namespace wpb
