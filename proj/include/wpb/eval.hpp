#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpb/burge.hpp"
#include "wpb/dsl.hpp"
#include "wpb/errors.hpp"
#include "wpb/hyperg.hpp"
#include "wpb/qfuncs.hpp"
#include "wpb/ratio.hpp"
#include "wpb/trunc.hpp"

namespace wpb {

struct EvalEnv {
    std::map<std::string, Rational> ints;                    // int params and loop variables
    std::map<std::string, std::map<long long, Rational>> families;  // indexed sum variables
    std::map<std::string, Monomial> monos;                   // monomial params and lets
};

namespace evaldetail {

[[noreturn]] inline void evalfail(const Expr& e, const std::string& msg) {
    throw EngineError(msg + " (at line " + std::to_string(e.line) + ", column " +
                      std::to_string(e.col) + ")");
}

}  // namespace evaldetail

Rational eval_int(const ExprPtr& ep, EvalEnv& env);
Monomial eval_mono(const ExprPtr& ep, EvalEnv& env);

inline long long eval_index(const ExprPtr& ep, EvalEnv& env) {
    Rational r = eval_int(ep, env);
    if (!rat_is_int(r)) evaldetail::evalfail(*ep, "expected an integer, got " + rat_str(r));
    return rat_to_ll(r);
}

/** Exponent-domain evaluation: exact rational arithmetic over integer
 * parameters, summation variables and indexed families. */
inline Rational eval_int(const ExprPtr& ep, EvalEnv& env) {
    using evaldetail::evalfail;
    const Expr& e = *ep;
    switch (e.kind) {
        case Expr::Kind::Int: return Rational(e.ival);
        case Expr::Kind::Sym: {
            auto it = env.ints.find(e.name);
            if (it != env.ints.end()) return it->second;
            if (env.monos.count(e.name))
                evalfail(e, "monomial parameter '" + e.name + "' used in an exponent expression");
            evalfail(e, "undeclared symbol '" + e.name + "'");
        }
        case Expr::Kind::Indexed: {
            auto fam = env.families.find(e.name);
            if (fam == env.families.end())
                evalfail(e, "unknown indexed family '" + e.name + "'");
            long long idx = eval_index(e.kids[0], env);
            auto it = fam->second.find(idx);
            if (it == fam->second.end())
                evalfail(e, "index " + std::to_string(idx) + " of '" + e.name +
                                 "' is not bound here");
            return it->second;
        }
        case Expr::Kind::Neg: return -eval_int(e.kids[0], env);
        case Expr::Kind::Bin: {
            Rational a = eval_int(e.kids[0], env);
            if (e.op == '^') {
                long long p = eval_index(e.kids[1], env);
                return rat_pow(a, p);
            }
            Rational b = eval_int(e.kids[1], env);
            switch (e.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (b.is_zero()) evalfail(e, "division by zero in exponent expression");
                    return a / b;
            }
            evalfail(e, "bad operator");
        }
        case Expr::Kind::Call: {
            const auto& args = e.kids;
            auto need = [&](std::size_t n) {
                if (args.size() != n)
                    evalfail(e, e.name + " expects " + std::to_string(n) + " arguments");
            };
            if (e.name == "floor") {
                need(1);
                return Rational(rat_floor(eval_int(args[0], env)));
            }
            if (e.name == "min" || e.name == "max") {
                need(2);
                Rational a = eval_int(args[0], env), b = eval_int(args[1], env);
                return (e.name == "min") == (a < b) ? a : b;
            }
            if (e.name == "binom2") {
                need(1);
                Rational x = eval_int(args[0], env);
                return x * (x - 1) / 2;
            }
            if (e.name == "delta") {
                need(1);
                return eval_int(args[0], env).is_zero() ? Rational(1) : Rational(0);
            }
            if (e.name == "isqrt") {
                need(1);
                return Rational(rat_isqrt(eval_int(args[0], env)));
            }
            if (e.name == "ifz") {
                need(3);
                return eval_int(args[eval_int(args[0], env).is_zero() ? 1 : 2], env);
            }
            if (e.name == "isum") {
                need(4);
                if (args[0]->kind != Expr::Kind::Sym) evalfail(e, "isum needs a variable name");
                const std::string& var = args[0]->name;
                long long lo = eval_index(args[1], env), hi = eval_index(args[2], env);
                auto saved = env.ints.find(var) != env.ints.end()
                                 ? std::optional<Rational>(env.ints[var])
                                 : std::nullopt;
                Rational acc(0);
                for (long long v = lo; v <= hi; ++v) {
                    env.ints[var] = Rational(v);
                    acc += eval_int(args[3], env);
                }
                if (saved)
                    env.ints[var] = *saved;
                else
                    env.ints.erase(var);
                return acc;
            }
            evalfail(e, "'" + e.name + "' is not valid in an exponent expression");
        }
        default: evalfail(e, "expression is not valid in exponent position");
    }
}

/** Monomial-domain evaluation: products, quotients, integer powers, square
 * roots and q-powers of declared monomial parameters. */
inline Monomial eval_mono(const ExprPtr& ep, EvalEnv& env) {
    using evaldetail::evalfail;
    const Expr& e = *ep;
    switch (e.kind) {
        case Expr::Kind::Int: return Monomial::constant(Rational(e.ival));
        case Expr::Kind::Sym: {
            if (e.name == "q") return Monomial::q();
            auto it = env.monos.find(e.name);
            if (it != env.monos.end()) return it->second;
            if (env.ints.count(e.name))
                return Monomial::constant(env.ints.at(e.name));
            evalfail(e, "undeclared monomial symbol '" + e.name + "'");
        }
        case Expr::Kind::Neg: return -eval_mono(e.kids[0], env);
        case Expr::Kind::Bin: {
            if (e.op == '^') {
                Monomial base = eval_mono(e.kids[0], env);
                Rational p = eval_int(e.kids[1], env);
                if (rat_is_int(p)) return base.pow(rat_to_ll(p));
                // Fractional powers only of pure q-powers (e.g. q^(1/2)).
                if (base.coeff == 1) return Monomial(Rational(1), base.exp * p);
                evalfail(e, "fractional power of a non-unit monomial");
            }
            Monomial a = eval_mono(e.kids[0], env);
            Monomial b = eval_mono(e.kids[1], env);
            switch (e.op) {
                case '*': return a * b;
                case '/': return a / b;
                default: evalfail(e, "sums are not monomials; use them in value position");
            }
        }
        case Expr::Kind::Call: {
            const auto& args = e.kids;
            if (e.name == "qpow" && args.size() == 1)
                return Monomial(Rational(1), eval_int(args[0], env));
            if (e.name == "msqrt" && args.size() == 1)
                return msqrt_or_throw(eval_mono(args[0], env), print_expr(args[0]));
            if (e.name == "mpow" && args.size() == 2)
                return eval_mono(args[0], env).pow(eval_index(args[1], env));
            if (e.name == "sign" && args.size() == 1)
                return Monomial::constant(eval_index(args[0], env) % 2 ? Rational(-1)
                                                                       : Rational(1));
            if (e.name == "ifz" && args.size() == 3)
                return eval_mono(args[eval_int(args[0], env).is_zero() ? 1 : 2], env);
            evalfail(e, "'" + e.name + "' is not valid in a monomial expression");
        }
        default: evalfail(e, "expression is not a monomial");
    }
}

// ---- value algebras ----

struct ExactAlg {
    using V = LaurentRatio;
    V from_poly(const LaurentPoly& p) const { return LaurentRatio(p); }
    V from_mono(const Monomial& m) const { return LaurentRatio::from_monomial(m); }
    V zero() const { return LaurentRatio::zero(); }
    V one() const { return LaurentRatio::one(); }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V div(const V& a, const V& b) const { return a / b; }
    V neg(const V& a) const { return -a; }
    V pow(const V& a, long long e) const { return a.pow(e); }
    bool known_zero(const V& a) const { return a.is_zero(); }
    V poch_infinite(const Monomial&, const Monomial&, const Expr& e) const {
        evaldetail::evalfail(e, "pochinf needs truncated mode");
    }
    V phi(const PhiSpec& s, const Expr& e) const {
        if (!termination_of(s))
            evaldetail::evalfail(e, "non-terminating series in exact mode");
        return eval_phi(s);
    }
    V bib(const BibasicSpec& s, const Expr& e) const {
        if (!termination_of(s))
            evaldetail::evalfail(e, "non-terminating bibasic series in exact mode");
        return eval_bibasic(s);
    }
};

struct TruncAlg {
    Rational work;  // working cutoff
    using V = TruncVal;
    V from_poly(const LaurentPoly& p) const { return TruncVal::exact(p, work); }
    V from_mono(const Monomial& m) const {
        return TruncVal::exact(LaurentPoly::monomial(m), work);
    }
    V zero() const { return TruncVal::exact(LaurentPoly::zero(), work); }
    V one() const { return TruncVal::exact(LaurentPoly::one(), work); }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V div(const V& a, const V& b) const { return a / b; }
    V neg(const V& a) const { return -a; }
    V pow(const V& a, long long e) const { return a.pow(e); }
    bool known_zero(const V& a) const { return a.poly.is_zero(); }
    V poch_infinite(const Monomial& x, const Monomial& base, const Expr&) const {
        return TruncVal::exact(poch_inf(x, base, work), work);
    }
    V phi(const PhiSpec& s, const Expr&) const { return eval_phi_trunc(s, work); }
    V bib(const BibasicSpec& s, const Expr& e) const {
        if (!termination_of(s))
            evaldetail::evalfail(e, "non-terminating bibasic series is not supported");
        return TruncVal(eval_bibasic(s).series(work), work);
    }
};

template <class Alg>
typename Alg::V eval_q(const ExprPtr& ep, EvalEnv& env, const Alg& alg) {
    using evaldetail::evalfail;
    using V = typename Alg::V;
    const Expr& e = *ep;
    switch (e.kind) {
        case Expr::Kind::Int:
            return alg.from_poly(LaurentPoly::constant(Rational(e.ival)));
        case Expr::Kind::Sym: {
            if (e.name == "q") return alg.from_mono(Monomial::q());
            auto it = env.monos.find(e.name);
            if (it != env.monos.end()) return alg.from_mono(it->second);
            evalfail(e, "undeclared symbol '" + e.name + "' in value position");
        }
        case Expr::Kind::Neg: return alg.neg(eval_q(e.kids[0], env, alg));
        case Expr::Kind::Bin: {
            if (e.op == '^') {
                V base = eval_q(e.kids[0], env, alg);
                return alg.pow(base, eval_index(e.kids[1], env));
            }
            V a = eval_q(e.kids[0], env, alg);
            V b = eval_q(e.kids[1], env, alg);
            switch (e.op) {
                case '+': return alg.add(a, b);
                case '-': return alg.sub(a, b);
                case '*': return alg.mul(a, b);
                case '/': return alg.div(a, b);
            }
            evalfail(e, "bad operator");
        }
        case Expr::Kind::Call: return eval_call(e, env, alg);
        default: evalfail(e, "expression is not a value");
    }
}

template <class Alg>
typename Alg::V eval_call(const Expr& e, EvalEnv& env, const Alg& alg) {
    using evaldetail::evalfail;
    using V = typename Alg::V;
    const auto& args = e.kids;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            evalfail(e, "wrong number of arguments for " + e.name);
    };
    auto mono_list = [&](const ExprPtr& le) {
        if (le->kind != Expr::Kind::List) evalfail(*le, "expected a [list] of parameters");
        std::vector<Monomial> out;
        for (const auto& k : le->kids) out.push_back(eval_mono(k, env));
        return out;
    };

    if (e.name == "qpow") {
        need(1, 1);
        return alg.from_poly(LaurentPoly::qpow(eval_int(args[0], env)));
    }
    if (e.name == "sign") {
        need(1, 1);
        long long v = eval_index(args[0], env);
        return alg.from_poly(LaurentPoly::constant(Rational(v % 2 ? -1 : 1)));
    }
    if (e.name == "mpow" || e.name == "msqrt") {
        return alg.from_mono(eval_mono(std::make_shared<Expr>(e), env));
    }
    if (e.name == "delta") {
        need(1, 1);
        return alg.from_poly(eval_int(args[0], env).is_zero() ? LaurentPoly::one()
                                                              : LaurentPoly::zero());
    }
    if (e.name == "qbin") {
        need(2, 3);
        long long top = eval_index(args[0], env);
        long long bottom = eval_index(args[1], env);
        Monomial base = args.size() == 3 ? eval_mono(args[2], env) : Monomial::q();
        return alg.from_poly(qbinom(top, bottom, base));
    }
    if (e.name == "poch") {
        need(2, 3);
        Monomial x = eval_mono(args[0], env);
        long long len = eval_index(args[1], env);
        Monomial base = args.size() == 3 ? eval_mono(args[2], env) : Monomial::q();
        return alg.from_poly(pochhammer(x, base, len));
    }
    if (e.name == "pochinf") {
        need(1, 2);
        Monomial x = eval_mono(args[0], env);
        Monomial base = args.size() == 2 ? eval_mono(args[1], env) : Monomial::q();
        return alg.poch_infinite(x, base, e);
    }
    if (e.name == "Q") {
        need(4, 4);
        return alg.from_poly(q_kernel(eval_index(args[0], env), eval_index(args[1], env),
                                      eval_index(args[2], env), eval_index(args[3], env)));
    }
    if (e.name == "ifz") {
        need(3, 3);
        return eval_q(args[eval_int(args[0], env).is_zero() ? 1 : 2], env, alg);
    }
    if (e.name == "sum" || e.name == "bsum" || e.name == "zsum" || e.name == "prod") {
        need(4, 4);
        if (args[0]->kind != Expr::Kind::Sym) evalfail(e, e.name + " needs a variable name");
        const std::string& var = args[0]->name;
        long long lo = eval_index(args[1], env), hi = eval_index(args[2], env);
        auto saved = env.ints.count(var) ? std::optional<Rational>(env.ints[var]) : std::nullopt;
        bool isprod = e.name == "prod";
        V acc = isprod ? alg.one() : alg.zero();
        for (long long v = lo; v <= hi; ++v) {
            env.ints[var] = Rational(v);
            V term = eval_q(args[3], env, alg);
            if ((e.name == "bsum" && (v == lo || v == hi)) || (e.name == "zsum" && v == hi)) {
                if (!alg.known_zero(term))
                    evalfail(e, e.name + " boundary term at " + var + " = " +
                                    std::to_string(v) +
                                    " does not vanish; widen the declared bounds");
            }
            acc = isprod ? alg.mul(acc, term) : alg.add(acc, term);
        }
        if (saved)
            env.ints[var] = *saved;
        else
            env.ints.erase(var);
        return acc;
    }
    if (e.name == "nestsum") {
        // nestsum(family, depthvar, dlo, dhi, lo, hi, body)
        need(7, 7);
        if (args[0]->kind != Expr::Kind::Sym || args[1]->kind != Expr::Kind::Sym)
            evalfail(e, "nestsum needs a family name and a depth variable");
        const std::string& fam = args[0]->name;
        const std::string& dvar = args[1]->name;
        long long dlo = eval_index(args[2], env), dhi = eval_index(args[3], env);
        if (env.families.count(fam)) evalfail(e, "nested reuse of family '" + fam + "'");
        env.families[fam] = {};
        auto dsaved =
            env.ints.count(dvar) ? std::optional<Rational>(env.ints[dvar]) : std::nullopt;
        std::function<V(long long)> rec = [&](long long level) -> V {
            if (level > dhi) return eval_q(args[6], env, alg);
            env.ints[dvar] = Rational(level);
            long long lo = eval_index(args[4], env), hi = eval_index(args[5], env);
            V acc = alg.zero();
            for (long long v = lo; v <= hi; ++v) {
                env.families[fam][level] = Rational(v);
                acc = alg.add(acc, rec(level + 1));
            }
            env.families[fam].erase(level);
            return acc;
        };
        V out = rec(dlo);
        env.families.erase(fam);
        if (dsaved)
            env.ints[dvar] = *dsaved;
        else
            env.ints.erase(dvar);
        return out;
    }
    if (e.name == "phi") {
        need(4, 4);
        PhiSpec s;
        s.upper = mono_list(args[0]);
        s.lower = mono_list(args[1]);
        s.base = eval_mono(args[2], env);
        s.z = eval_mono(args[3], env);
        return alg.phi(s, e);
    }
    if (e.name == "W") {
        need(4, 4);
        WSpec w;
        w.a1 = eval_mono(args[0], env);
        if (args[1]->kind != Expr::Kind::List) evalfail(e, "W needs a [list] tail");
        for (const auto& k : args[1]->kids) w.tail.push_back(eval_mono(k, env));
        w.base = eval_mono(args[2], env);
        w.z = eval_mono(args[3], env);
        return alg.phi(desugar(w), e);
    }
    if (e.name == "bibasic") {
        need(7, 7);
        BibasicSpec s;
        s.upper1 = mono_list(args[0]);
        s.lower1 = mono_list(args[1]);
        s.base1 = eval_mono(args[2], env);
        s.upper2 = mono_list(args[3]);
        s.lower2 = mono_list(args[4]);
        s.base2 = eval_mono(args[5], env);
        s.z = eval_mono(args[6], env);
        return alg.bib(s, e);
    }
    evalfail(e, "unknown builtin '" + e.name + "'");
}

inline LaurentRatio eval_exact(const ExprPtr& ep, EvalEnv& env) {
    return eval_q(ep, env, ExactAlg{});
}

inline TruncVal eval_truncated(const ExprPtr& ep, EvalEnv& env, const Rational& work) {
    return eval_q(ep, env, TruncAlg{work});
}

}  // namespace wpb
