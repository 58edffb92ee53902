#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncq/linear_map.hpp"
#include "ncq/nc_poly.hpp"

namespace ncq {

// Order-m Gateaux derivative of a polynomial map: an NcPoly in x and
// h1..hm, linear in each h_k.
struct DerivativeResult {
    int order = 0;
    NcPoly poly;
};

DerivativeResult derivative_of(const NcPoly& p);  // order 0 wrapper

// One differentiation step (product rule): for every word, sum over the
// occurrences of x of the word with that occurrence replaced by the next
// increment variable h_{m+1}.  OrderTooHigh past h32.
DerivativeResult derive(const DerivativeResult& d);
// Order-n derivative by iterating derive() n times.
DerivativeResult derive_n(const NcPoly& p, int n);

// Independent algorithm: order-k derivative as the sum over injective
// assignments of h1..hk to distinct x-positions of each word.
// Semantically (and on monomials syntactically) equal to derive_n.
DerivativeResult derive_by_injections(const NcPoly& p, int k);

// nth derivative with all increments set to the same variable h:
// for a degree-n monomial p_n this equals n! p_n evaluated on h.
NcPoly derive_all_equal(const NcPoly& p, int n, int h_var);

// Directional ratios at a point: value = d.poly(x, h1 = a, ...middle
// increments must be absent...), then
//   d_star  = a^{-1} * value   (the D* x ratio)
//   star_d  = value * a^{-1}   (the *D x ratio)
// First-order d only (order == 1).  DivisionByZero when a = 0.
Element derivative_value(const DerivativeResult& d, const Element& x,
                         const std::vector<Element>& increments,
                         const AlgebraSpec& alg);
Element d_star(const DerivativeResult& d, const Element& x, const Element& a,
               const AlgebraSpec& alg);
Element star_d(const DerivativeResult& d, const Element& x, const Element& a,
               const AlgebraSpec& alg);

// Coordinate matrix (Jacobian) of the first differential at x0:
// row i = coordinates of d.poly(x0, h1 = e_i).
CoordMatrix jacobian(const DerivativeResult& d, const Element& x0,
                     const AlgebraSpec& alg);
// Standard components of the differential at x0 (coord_to_std of the
// Jacobian; always realizable for polynomial maps over the presets).
StdComponents differential_std_components(const DerivativeResult& d,
                                          const Element& x0,
                                          const AlgebraSpec& alg);

// --- Numeric oracle (doubles) ---------------------------------------------

// Element with double coordinates, for the limit-based oracle only.
struct NumElement {
    std::vector<double> c;
};
NumElement to_num(const Element& x);
NumElement num_add(const NumElement& a, const NumElement& b);
NumElement num_sub(const NumElement& a, const NumElement& b);
NumElement num_scale(double s, const NumElement& a);
NumElement num_mul(const NumElement& a, const NumElement& b, const AlgebraSpec& alg);
NumElement num_conj(const NumElement& a, const AlgebraSpec& alg);
NumElement num_inverse(const NumElement& a, const AlgebraSpec& alg);
double num_abs(const NumElement& a);

using NumMap = std::function<NumElement(const NumElement&)>;

struct NumericSchedule {
    double t = 1e-4;  // central differences at t and t/2, one Richardson step
};

// Finite-difference directional derivative lim t^-1 (f(x+ta) - f(x)):
// symmetric difference (f(x+ta) - f(x-ta)) / 2t evaluated at t and t/2,
// combined by one Richardson extrapolation step (4 D(t/2) - D(t)) / 3.
// EvaluationError on non-finite values.
NumElement numeric_gateaux(const NumMap& f, const NumElement& x,
                           const NumElement& a, const AlgebraSpec& alg,
                           const NumericSchedule& sched = {});

// NcPoly as a numeric map (x bound, all other variables must be absent).
NumMap numeric_map_of(const NcPoly& p, const AlgebraSpec& alg);

// --- Closed-form derivative table -----------------------------------------

// A differentiation-rule entry: the map f itself plus the closed-form
// value of its Gateaux derivative at (x, h), both exact.  Parameters
// b, c, a0 are fixed elements of the entry.  Entries whose map involves
// x^{-1} are not representable as NcPoly and provide evaluators only.
struct ClosedFormEntry {
    std::string name;
    bool needs_inverse = false;  // x must be invertible at the probe point
    std::function<Element(const Element& x, const AlgebraSpec&)> map;
    std::function<Element(const Element& x, const Element& h, const AlgebraSpec&)>
        derivative;
    std::function<NumElement(const NumElement& x, const AlgebraSpec&)> num_map;
};

// The built-in table: constant, sandwiched square b x^2 c, b x c,
// commutator x b - b x, x^2, x^{-1}, x a0 x^{-1}.  Parameters are baked
// in from the arguments.
std::vector<ClosedFormEntry> closed_form_table(const Element& b, const Element& c,
                                               const Element& a0,
                                               const AlgebraSpec& alg);

}  // namespace ncq
