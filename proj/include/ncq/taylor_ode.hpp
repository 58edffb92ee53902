#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncq/gateaux.hpp"
#include "ncq/nc_poly.hpp"

namespace ncq {

// Taylor form of a polynomial map around center x0: terms[n] is an NcPoly
// in x equal to (n!)^-1 (d^n f)(x0) evaluated on n copies of (x - x0).
struct TaylorPoly {
    Element center;
    std::vector<NcPoly> terms;

    NcPoly assembled() const;  // sum of terms
};

// Exact Taylor expansion of f around x0, up to the degree of f (or the
// requested degree if larger, padding zero terms).
TaylorPoly taylor_expand(const NcPoly& f, const Element& x0, const AlgebraSpec& alg,
                         int min_terms = -1);

// Numeric remainder probe: samples of
//   ( t, |f(x0 + t h) - p(x0 + t h)| / t^n )
// for the truncation p of order n.  The ratio must vanish as t -> 0 when
// p is the genuine order-n Taylor truncation.
struct ConvergenceProbe {
    std::vector<std::pair<double, double>> samples;
};
ConvergenceProbe remainder_probe(const NcPoly& f, const TaylorPoly& p,
                                 const Element& x0, const Element& h, int n,
                                 const AlgebraSpec& alg,
                                 const std::vector<double>& ts = {1e-1, 1e-2, 1e-3,
                                                                  1e-4});

// --- Taylor-method ODE solving ---------------------------------------------

// dy/dx in the Gateaux sense: (d y)(x)(h) = rhs(x, h), rhs polynomial in
// x and linear in h (the variable h1), with initial value y(x0) = y0.
struct OdeProblem {
    NcPoly rhs;
    Element x0;
    Element y0;
};

// Certificate that no polynomial solution exists: the order-k derivative
// candidate D_k (obtained by differentiating the rhs) is not symmetric
// under the transposition (i, j) of its increments; `difference` is the
// nonzero expansion of D_k - swapped D_k.
struct UnsolvableWitness {
    int order = 0;
    int i = 0, j = 0;  // 1-based increment labels
    NcPoly candidate;
    CoordinateForm difference;
};

struct OdeSolution {
    TaylorPoly y;
};

using OdeOutcome = std::variant<OdeSolution, UnsolvableWitness>;

// Taylor-method solution: D_1 = rhs, D_{k+1} = derive(D_k); stops when
// D_K+1 vanishes; every D_k must be symmetric in h1..hk, otherwise the
// witness is returned.  TruncatedError if D_{max_order} has not vanished.
// The returned solution satisfies y(x0) = y0 and derive(y) == rhs exactly.
OdeOutcome solve_ode(const OdeProblem& problem, int max_order,
                     const AlgebraSpec& alg);

// --- Noncommutative exponent ------------------------------------------------

// Order-n derivative of the exponent equation's solution as a polynomial
// in y and h1..hn: 2^-n sum over subsets S of {1..n} of
//   [h_s ascending for s in S] * y * [h_s descending for s not in S].
// All 2^n words have coefficient 2^-n.  May parallelize over subsets;
// deterministic (subset-mask order before normalization).
NcPoly exponent_derivative(int n, const AlgebraSpec& alg);

// Partial sum of exp(q) = sum q^k / k! with n_terms terms, in doubles.
NumElement exp_series(const Element& q, int n_terms, const AlgebraSpec& alg);

// Exact difference between the order-3 coefficient of exp(a) exp(b)
// (sum_{p+q=3} a^p b^q / p! q!) and of exp(a+b) ((a+b)^3 / 6).
// Zero iff a and b commute.
Element exp_additivity_defect(const Element& a, const Element& b,
                              const AlgebraSpec& alg);

}  // namespace ncq
