#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wpb/dsl.hpp"
#include "wpb/eval.hpp"

namespace wpb {

struct RunOverrides {
    std::map<std::string, IntParam> ranges;                     // by parameter name
    std::optional<std::map<std::string, ExprPtr>> bindings;     // replaces all binding sets
    std::optional<long long> trunc;
    int jobs = 1;
};

struct VerifyFailure {
    std::string bindings;  // human-readable instance description
    bool error = false;    // evaluation error rather than a mismatch
    std::string message;
    LaurentRatio lhs, rhs;  // the two side values (exact or truncated series)
};

struct VerifyReport {
    std::string id;
    std::string paper_eq;
    std::string ranges;
    long long instances = 0;
    std::vector<VerifyFailure> failures;
    long long elapsed_ms = 0;
    bool ok() const { return failures.empty(); }
};

namespace verifydetail {

struct Instance {
    std::vector<std::pair<std::string, long long>> ints;
    std::size_t set_index = 0;
};

inline std::string instance_str(const Instance& inst, const IdentitySpec& spec,
                                std::size_t n_sets) {
    std::string s;
    for (const auto& [k, v] : inst.ints) {
        if (!s.empty()) s += ", ";
        s += k + "=" + std::to_string(v);
    }
    if (n_sets > 1) {
        if (!s.empty()) s += ", ";
        s += "set=" + std::to_string(inst.set_index);
    }
    (void)spec;
    return s;
}

inline void enumerate(const std::vector<IntParam>& params, std::size_t n_sets,
                      std::vector<Instance>& out) {
    std::vector<std::vector<long long>> values;
    for (const auto& p : params) values.push_back(p.expand());
    std::vector<std::size_t> idx(params.size(), 0);
    while (true) {
        Instance inst;
        for (std::size_t i = 0; i < params.size(); ++i)
            inst.ints.emplace_back(params[i].name, values[i][idx[i]]);
        for (std::size_t s = 0; s < n_sets; ++s) {
            inst.set_index = s;
            out.push_back(inst);
        }
        std::size_t i = params.size();
        while (i > 0) {
            --i;
            if (++idx[i] < values[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (params.empty()) return;
    }
}

}  // namespace verifydetail

/** Evaluate one instance of an identity; returns nullopt on pass. */
inline std::optional<VerifyFailure> check_instance(
    const IdentitySpec& spec, const std::vector<std::pair<std::string, long long>>& ints,
    const std::map<std::string, ExprPtr>& binding_set, long long trunc_order) {
    EvalEnv env;
    for (const auto& [k, v] : ints) env.ints[k] = Rational(v);
    if (spec.truncated) env.ints["T"] = Rational(trunc_order);
    EvalEnv benv;  // bindings are closed monomial expressions
    for (const auto& [name, expr] : binding_set) env.monos[name] = eval_mono(expr, benv);
    for (const auto& name : spec.mono_params)
        if (!env.monos.count(name))
            throw ConfigError("identity '" + spec.id + "': no binding for parameter '" + name +
                              "'");
    for (const auto& [name, expr] : spec.lets) env.monos[name] = eval_mono(expr, env);

    if (!spec.truncated) {
        LaurentRatio lhs = eval_exact(spec.lhs, env);
        LaurentRatio rhs = eval_exact(spec.rhs, env);
        if (ratio_eq(lhs, rhs)) return std::nullopt;
        VerifyFailure f;
        f.lhs = lhs;
        f.rhs = rhs;
        f.message = "sides differ";
        return f;
    }

    Rational target(trunc_order);
    Rational work = target + 8;
    for (int attempt = 0; attempt < 4; ++attempt) {
        TruncVal lhs = eval_truncated(spec.lhs, env, work);
        TruncVal rhs = eval_truncated(spec.rhs, env, work);
        Rational valid = lhs.valid < rhs.valid ? lhs.valid : rhs.valid;
        if (valid < target) {
            work += (target - valid) + 4;  // precision lost to negative orders; retry wider
            continue;
        }
        LaurentPoly l = lhs.poly.truncated(target), r = rhs.poly.truncated(target);
        if (l == r) return std::nullopt;
        VerifyFailure f;
        f.lhs = LaurentRatio(l);
        f.rhs = LaurentRatio(r);
        f.message = "sides differ modulo q^" + rat_str(target);
        return f;
    }
    throw EngineError("identity '" + spec.id + "': could not reach precision q^" +
                      rat_str(target));
}

inline VerifyReport verify_identity(const IdentitySpec& spec, const RunOverrides& over = {}) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.id = spec.id;
    rep.paper_eq = spec.paper_eq;

    std::vector<IntParam> params = spec.int_params;
    for (const auto& [name, p] : over.ranges) {
        bool found = false;
        for (auto& sp : params)
            if (sp.name == name) {
                sp = p;
                sp.name = name;
                found = true;
            }
        if (!found)
            throw ConfigError("identity '" + spec.id + "' has no integer parameter '" + name +
                              "'");
    }
    std::vector<std::map<std::string, ExprPtr>> sets;
    if (over.bindings) {
        for (const auto& [name, expr] : *over.bindings) {
            bool known = std::find(spec.mono_params.begin(), spec.mono_params.end(), name) !=
                         spec.mono_params.end();
            if (!known)
                throw ConfigError("identity '" + spec.id + "' has no monomial parameter '" +
                                  name + "'");
            (void)expr;
        }
        sets = {*over.bindings};
    } else if (!spec.binding_sets.empty()) {
        sets = spec.binding_sets;
    } else {
        sets = {{}};
    }
    long long T = over.trunc.value_or(spec.trunc_order);

    for (const auto& p : params) {
        if (!rep.ranges.empty()) rep.ranges += ",";
        if (!p.values.empty()) {
            rep.ranges += p.name + " in {";
            for (std::size_t i = 0; i < p.values.size(); ++i)
                rep.ranges += (i ? "," : "") + std::to_string(p.values[i]);
            rep.ranges += "}";
        } else {
            rep.ranges +=
                p.name + "=" + std::to_string(p.lo) + ".." + std::to_string(p.hi);
        }
    }

    std::vector<verifydetail::Instance> instances;
    verifydetail::enumerate(params, sets.size(), instances);
    rep.instances = static_cast<long long>(instances.size());

    std::vector<std::optional<VerifyFailure>> results(instances.size());
    auto run_one = [&](std::size_t i) {
        const auto& inst = instances[i];
        try {
            auto f = check_instance(spec, inst.ints, sets[inst.set_index], T);
            if (f) {
                f->bindings = verifydetail::instance_str(inst, spec, sets.size());
                results[i] = f;
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const EngineError& e) {
            VerifyFailure f;
            f.error = true;
            f.message = e.what();
            f.bindings = verifydetail::instance_str(inst, spec, sets.size());
            results[i] = f;
        }
    };

    int jobs = std::max(1, over.jobs);
    if (jobs == 1 || instances.size() < 2) {
        for (std::size_t i = 0; i < instances.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errs(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = next++; i < instances.size(); i = next++) run_one(i);
                } catch (...) {
                    errs[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& ep : errs)
            if (ep) std::rethrow_exception(ep);
    }
    for (auto& r : results)
        if (r) rep.failures.push_back(std::move(*r));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace wpb
