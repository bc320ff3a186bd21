#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wpb/errors.hpp"
#include "wpb/qfuncs.hpp"
#include "wpb/ratio.hpp"

namespace wpb {

/**
 * Kernel of the Burge relation: a product of two Gaussian binomials. Vanishes
 * whenever a lower index is negative; the generalized integer top keeps it
 * defined for every integer r, s.
 */
inline LaurentPoly q_kernel(long long N, long long M, long long r, long long s) {
    LaurentPoly first = qbinom(N + M + r - s, N + r);
    if (first.is_zero()) return first;
    return first * qbinom(N + M - r + s, N - r);
}

/**
 * A Burge pair: folded weights A(j) for j >= 0 and a two-index B defined for
 * all integers (negative arguments arise in the self-inverse transform).
 */
struct BurgePair {
    std::string id;
    std::string source;
    long long off_a = 1, off_b = 0;
    long long lattice = 1;
    std::function<LaurentPoly(long long)> A;
    std::function<LaurentRatio(long long, long long)> B;
};

inline const std::vector<std::string>& burge_seed_ids() {
    static const std::vector<std::string> ids = {"B1", "B2", "B3"};
    return ids;
}

inline BurgePair burge_seed(const std::string& id) {
    BurgePair p;
    p.id = id;
    const Monomial q = Monomial::q();
    if (id == "B1") {
        p.source = "eq7.8,eq7.9";
        p.A = [](long long j) {
            if (j == 0) return LaurentPoly::one();
            return LaurentPoly::constant(Rational(j % 2 ? -2 : 2));
        };
        p.B = [](long long N, long long M) {
            LaurentPoly v = qbinom(N + M, N, Monomial::q(Rational(2)));
            return LaurentRatio(N % 2 ? -v : v);
        };
        return p;
    }
    if (id == "B2") {
        p.source = "eq7.13,eq7.14";
        p.A = [q](long long j) {
            if (j == 0) return LaurentPoly::one();
            LaurentPoly v = (LaurentPoly::one() + LaurentPoly::qpow(Rational(j))) *
                            LaurentPoly::qpow(Rational(j * (j - 1) / 2));
            return j % 2 ? -v : v;
        };
        p.B = [](long long N, long long M) {
            Rational e = Rational(N * (N + 1) / 2 + N * M);
            LaurentPoly v = qbinom(N + M, N) * LaurentPoly::qpow(e);
            return LaurentRatio(N % 2 ? -v : v);
        };
        return p;
    }
    if (id == "B3") {
        p.source = "eq7.17,eq7.18";
        p.lattice = 2;
        p.A = [](long long j) {
            if (j == 0) return LaurentPoly::one();
            return LaurentPoly::qpow(Rational(j, 2)) + LaurentPoly::qpow(Rational(-j, 2));
        };
        p.B = [](long long N, long long M) {
            LaurentPoly v = qbinom(2 * N + 2 * M + 1, 2 * N, Monomial::q(Rational(1, 2)));
            return LaurentRatio(v * LaurentPoly::qpow(Rational(-N, 2)));
        };
        return p;
    }
    throw ConfigError("unknown Burge seed id '" + id + "'");
}

namespace burgedetail {

inline std::function<LaurentRatio(long long, long long)> memoized(
    std::function<LaurentRatio(long long, long long)> f) {
    auto memo = std::make_shared<std::map<std::pair<long long, long long>, LaurentRatio>>();
    return [memo, f = std::move(f)](long long N, long long M) {
        auto key = std::make_pair(N, M);
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
        LaurentRatio v = f(N, M);
        memo->emplace(key, v);
        return v;
    };
}

inline void require_offsets(const BurgePair& p, const std::string& what) {
    if (!(0 <= p.off_b && p.off_b <= 2 * p.off_a))
        throw ConfigError(what + ": offsets (" + std::to_string(p.off_a) + "," +
                          std::to_string(p.off_b) + ") violate 0 <= b <= 2a");
}

}  // namespace burgedetail

/** Kernel rewrite along the B-column: offsets (a,b) -> (a+b, b). */
inline BurgePair apply_transform_73(const BurgePair& p) {
    burgedetail::require_offsets(p, "transform 73");
    BurgePair c;
    c.id = p.id + ".73";
    c.source = p.source;
    c.lattice = p.lattice;
    c.off_a = p.off_a + p.off_b;
    c.off_b = p.off_b;
    long long b2 = p.off_b * p.off_b;
    auto A = p.A;
    c.A = [A, b2](long long j) { return A(j) * LaurentPoly::qpow(Rational(b2 * j * j)); };
    auto B = p.B;
    c.B = burgedetail::memoized([B](long long N, long long M) {
        LaurentRatio sum = LaurentRatio::zero();
        for (long long i = 0; i <= M; ++i) {
            LaurentPoly w = qbinom(2 * N + M - i, 2 * N) * LaurentPoly::qpow(Rational(i * i));
            if (w.is_zero()) continue;
            sum += LaurentRatio(w) * B(N - i, i);
        }
        return sum;
    });
    return c;
}

/** Kernel rewrite along the other column: offsets (a,b) -> (a+b, a). */
inline BurgePair apply_transform_74(const BurgePair& p) {
    burgedetail::require_offsets(p, "transform 74");
    BurgePair c;
    c.id = p.id + ".74";
    c.source = p.source;
    c.lattice = p.lattice;
    c.off_a = p.off_a + p.off_b;
    c.off_b = p.off_a;
    long long a2 = p.off_a * p.off_a;
    auto A = p.A;
    c.A = [A, a2](long long j) { return A(j) * LaurentPoly::qpow(Rational(a2 * j * j)); };
    auto B = p.B;
    c.B = burgedetail::memoized([B](long long N, long long M) {
        LaurentRatio sum = LaurentRatio::zero();
        for (long long i = 0; i <= M; ++i) {
            LaurentPoly w = qbinom(2 * N + M - i, 2 * N) * LaurentPoly::qpow(Rational(i * i));
            if (w.is_zero()) continue;
            sum += LaurentRatio(w) * B(i, N - i);
        }
        return sum;
    });
    return c;
}

/** Self-inverse transform: offsets (a,b) -> (a, 2a-b); needs B at negative
 * second argument, which the generalized binomials provide. */
inline BurgePair apply_transform_81(const BurgePair& p) {
    BurgePair c;
    c.id = p.id + ".81";
    c.source = p.source;
    c.lattice = p.lattice;
    c.off_a = p.off_a;
    c.off_b = 2 * p.off_a - p.off_b;
    if (c.off_b < 0)
        throw ConfigError("transform 81: resulting offsets would be negative");
    long long w = 2 * p.off_a * (p.off_a - p.off_b);
    auto A = p.A;
    c.A = [A, w](long long j) { return A(j) * LaurentPoly::qpow(Rational(w * j * j)); };
    auto B = p.B;
    c.B = burgedetail::memoized([B](long long N, long long M) {
        LaurentRatio sum = LaurentRatio::zero();
        for (long long i = 0; i <= N; ++i) {
            LaurentPoly w2 = qbinom(2 * M + N - i, N - i) *
                             LaurentPoly::qpow(Rational((1 + 2 * M) * i));
            if (w2.is_zero()) continue;
            sum += LaurentRatio(w2) * B(i, -1 - M);
        }
        return sum;
    });
    return c;
}

/** Exchange the roles of the two indices: B''(N,M) = B(M,N), offsets (b,a). */
inline BurgePair swap_sym(const BurgePair& p) {
    BurgePair c;
    c.id = p.id + ".sym";
    c.source = p.source;
    c.lattice = p.lattice;
    c.off_a = p.off_b;
    c.off_b = p.off_a;
    c.A = p.A;
    auto B = p.B;
    c.B = [B](long long N, long long M) { return B(M, N); };
    return c;
}

struct BurgeLine {
    long long N = 0, M = 0;
    bool pass = false;
    std::string lhs, rhs;
};

struct BurgeReport {
    std::string pair_id;
    std::vector<BurgeLine> lines;
    bool ok = true;
};

// Sum of A(j) * Q(N, M, a*j, b*j) over the finite j-support, with the
// trailing term asserted to vanish rather than assumed.
inline LaurentRatio burge_relation_rhs(const BurgePair& p, long long N, long long M) {
    long long jmax;
    if (p.off_a > 0)
        jmax = N / p.off_a;
    else if (p.off_b > 0)
        jmax = M / p.off_b;
    else
        throw EngineError("burge relation: unbounded support with offsets (0,0)");
    LaurentRatio sum = LaurentRatio::zero();
    for (long long j = 0; j <= jmax; ++j) {
        LaurentPoly ker = q_kernel(N, M, p.off_a * j, p.off_b * j);
        if (ker.is_zero()) continue;
        sum += LaurentRatio(p.A(j) * ker);
    }
    LaurentPoly tail = q_kernel(N, M, p.off_a * (jmax + 1), p.off_b * (jmax + 1));
    if (!tail.is_zero())
        throw EngineError("burge relation: support bound did not vanish at j = " +
                          std::to_string(jmax + 1));
    return sum;
}

inline BurgeReport check_burge_relation(const BurgePair& p, long long N_max, long long M_max) {
    BurgeReport rep;
    rep.pair_id = p.id;
    for (long long N = 0; N <= N_max; ++N)
        for (long long M = 0; M <= M_max; ++M) {
            BurgeLine line;
            line.N = N;
            line.M = M;
            LaurentRatio lhs = p.B(N, M);
            LaurentRatio rhs = burge_relation_rhs(p, N, M);
            line.pass = ratio_eq(lhs, rhs);
            if (!line.pass) {
                line.lhs = lhs.str();
                line.rhs = rhs.str();
                rep.ok = false;
            }
            rep.lines.push_back(std::move(line));
        }
    return rep;
}

/** Run a dot-separated transform word, e.g. "74.73.73" or "81.81" or "sym". */
inline BurgePair burge_derive(const BurgePair& seed, const std::string& word) {
    BurgePair p = seed;
    if (word.empty()) return p;
    std::size_t pos = 0, step = 1;
    while (pos <= word.size()) {
        std::size_t dot = word.find('.', pos);
        std::string tok = word.substr(pos, dot == std::string::npos ? dot : dot - pos);
        try {
            if (tok == "73")
                p = apply_transform_73(p);
            else if (tok == "74")
                p = apply_transform_74(p);
            else if (tok == "81")
                p = apply_transform_81(p);
            else if (tok == "sym")
                p = swap_sym(p);
            else
                throw ConfigError("unknown transform token '" + tok + "'");
        } catch (const ConfigError& e) {
            throw ConfigError("step " + std::to_string(step) + " of word '" + word +
                              "': " + e.what());
        }
        if (dot == std::string::npos) break;
        pos = dot + 1;
        ++step;
    }
    return p;
}

}  // namespace wpb
