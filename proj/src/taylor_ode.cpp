#include "ncq/taylor_ode.hpp"

#include <cmath>

#include "ncq/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncq {

NcPoly TaylorPoly::assembled() const {
    NcPoly p;
    for (const auto& t : terms) p = add(p, t);
    return p;
}

namespace {

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// (n!)^{-1} D_n(x0)(x - x0, ..., x - x0) for an order-n derivative D_n.
NcPoly taylor_term(const NcPoly& dn, int n, const Element& x0,
                   const AlgebraSpec& alg) {
    NcPoly at0 = substitute_const(dn, kVarX, x0, alg);
    NcPoly increment =
        sub(NcPoly::variable(kVarX, alg), NcPoly::constant(x0));
    for (int t = 1; t <= n; ++t) at0 = substitute(at0, var_h(t), increment, alg);
    return normalized(scale(Rational(1) / factorial(n), at0));
}

}  // namespace

TaylorPoly taylor_expand(const NcPoly& f, const Element& x0, const AlgebraSpec& alg,
                         int min_terms) {
    TaylorPoly tp;
    tp.center = x0;
    int deg = degree_in(f, kVarX);
    int top = std::max(deg, min_terms < 0 ? deg : min_terms);
    DerivativeResult d = derivative_of(f);
    for (int n = 0; n <= top; ++n) {
        tp.terms.push_back(taylor_term(d.poly, n, x0, alg));
        if (n < top) d = derive(d);
    }
    return tp;
}

ConvergenceProbe remainder_probe(const NcPoly& f, const TaylorPoly& p,
                                 const Element& x0, const Element& h, int n,
                                 const AlgebraSpec& alg,
                                 const std::vector<double>& ts) {
    NumMap fn = numeric_map_of(f, alg);
    NumMap pn = numeric_map_of(p.assembled(), alg);
    NumElement nx0 = to_num(x0), nh = to_num(h);
    ConvergenceProbe probe;
    for (double t : ts) {
        NumElement xt = num_add(nx0, num_scale(t, nh));
        double rem = num_abs(num_sub(fn(xt), pn(xt)));
        probe.samples.emplace_back(t, rem / std::pow(t, n));
    }
    return probe;
}

OdeOutcome solve_ode(const OdeProblem& problem, int max_order,
                     const AlgebraSpec& alg) {
    // rhs must be linear in the single increment h1 (and free of other h's).
    for (int v : variables_of(problem.rhs))
        if (v != kVarX && v != var_h(1))
            throw SemanticError("ODE right-hand side may use only x and h");
    for (const auto& w : problem.rhs.words)
        if (std::count(w.vars.begin(), w.vars.end(), var_h(1)) != 1)
            throw SemanticError("ODE right-hand side must be linear in h");

    std::vector<NcPoly> derivatives;  // D_k for k = 1..K, NcPoly in x, h1..hk
    DerivativeResult d{1, problem.rhs};
    int vanished_at = -1;
    for (int k = 1; k <= max_order; ++k) {
        if (is_semantically_zero(d.poly, alg)) {
            vanished_at = k;
            break;
        }
        // Thm-9.2 style symmetry is necessary for D_k to be a genuine
        // iterated derivative; the first failing transposition certifies
        // unsolvability.
        std::vector<int> hs;
        for (int t = 1; t <= k; ++t) hs.push_back(var_h(t));
        constexpr int kScratch = 999;
        for (size_t a = 0; a < hs.size(); ++a)
            for (size_t b = a + 1; b < hs.size(); ++b) {
                NcPoly swapped = rename_var(d.poly, hs[a], kScratch);
                swapped = rename_var(swapped, hs[b], hs[a]);
                swapped = rename_var(swapped, kScratch, hs[b]);
                if (!semantic_eq(d.poly, swapped, alg)) {
                    UnsolvableWitness w;
                    w.order = k;
                    w.i = static_cast<int>(a) + 1;
                    w.j = static_cast<int>(b) + 1;
                    w.candidate = d.poly;
                    w.difference = cf_sub(expand(d.poly, alg), expand(swapped, alg));
                    return w;
                }
            }
        derivatives.push_back(d.poly);
        d = derive(d);
    }
    if (vanished_at < 0)
        throw TruncatedError("derivative did not vanish by order " +
                             std::to_string(max_order));

    TaylorPoly y;
    y.center = problem.x0;
    y.terms.push_back(NcPoly::constant(problem.y0));
    for (size_t k = 1; k <= derivatives.size(); ++k)
        y.terms.push_back(
            taylor_term(derivatives[k - 1], static_cast<int>(k), problem.x0, alg));

    // Soundness guarantees on the assembled solution.
    NcPoly assembled = y.assembled();
    DerivativeResult check = derive(derivative_of(assembled));
    if (!semantic_eq(check.poly, problem.rhs, alg))
        throw TruncatedError("assembled solution does not reproduce the rhs");
    if (eval(assembled, {{kVarX, problem.x0}}, alg) != problem.y0)
        throw TruncatedError("assembled solution misses the initial value");
    return OdeSolution{std::move(y)};
}

NcPoly exponent_derivative(int n, const AlgebraSpec& alg) {
    if (n < 0) throw OrderTooHigh("negative order");
    if (n > 20) throw OrderTooHigh("exponent derivative order capped at 20");
    size_t count = static_cast<size_t>(1) << n;
    std::vector<NcWord> words(count);
    Rational coeff = Rational(1) / Rational(boost::multiprecision::cpp_int(1) << n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n > 6)
#endif
    for (long long mask = 0; mask < static_cast<long long>(count); ++mask) {
        // ascending h's with set bits, then y, then descending h's with
        // clear bits
        NcWord w;
        std::vector<int> vars;
        for (int t = 1; t <= n; ++t)
            if (mask & (1LL << (t - 1))) vars.push_back(var_h(t));
        vars.push_back(kVarY);
        for (int t = n; t >= 1; --t)
            if (!(mask & (1LL << (t - 1)))) vars.push_back(var_h(t));
        w.vars = std::move(vars);
        w.constants.assign(w.vars.size() + 1, alg.unit());
        w.constants.front() = alg.from_rational(coeff);
        words[static_cast<size_t>(mask)] = std::move(w);
    }
    NcPoly p;
    p.words = std::move(words);
    return p;
}

NumElement exp_series(const Element& q, int n_terms, const AlgebraSpec& alg) {
    NumElement acc;
    acc.c.assign(alg.dim(), 0.0);
    NumElement term;
    term.c.assign(alg.dim(), 0.0);
    term.c[alg.unit_index()] = 1.0;
    NumElement nq = to_num(q);
    acc = num_add(acc, term);
    for (int k = 1; k < n_terms; ++k) {
        term = num_scale(1.0 / k, num_mul(term, nq, alg));
        acc = num_add(acc, term);
    }
    return acc;
}

Element exp_additivity_defect(const Element& a, const Element& b,
                              const AlgebraSpec& alg) {
    // order-3 coefficient of exp(a) exp(b): sum_{p+q=3} a^p b^q / (p! q!)
    auto power = [&](const Element& e, int k) {
        Element r = alg.unit();
        for (int t = 0; t < k; ++t) r = mul(r, e, alg);
        return r;
    };
    Element series = alg.zero();
    for (int p = 0; p <= 3; ++p) {
        int q = 3 - p;
        Element term = mul(power(a, p), power(b, q), alg);
        series = add(series, scale(Rational(1) / (factorial(p) * factorial(q)), term));
    }
    Element sum3 = scale(Rational(1) / 6, power(add(a, b), 3));
    return sub(series, sum3);
}

}  // namespace ncq
