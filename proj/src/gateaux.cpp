#include "ncq/gateaux.hpp"

#include <algorithm>
#include <cmath>

#include "ncq/errors.hpp"

namespace ncq {

DerivativeResult derivative_of(const NcPoly& p) { return DerivativeResult{0, p}; }

DerivativeResult derive(const DerivativeResult& d) {
    int next = d.order + 1;
    int h = var_h(next);  // OrderTooHigh past the alphabet
    DerivativeResult out;
    out.order = next;
    for (const auto& w : d.poly.words)
        for (size_t t = 0; t < w.vars.size(); ++t) {
            if (w.vars[t] != kVarX) continue;
            NcWord nw = w;
            nw.vars[t] = h;
            out.poly.words.push_back(std::move(nw));
        }
    return out;
}

DerivativeResult derive_n(const NcPoly& p, int n) {
    DerivativeResult d = derivative_of(p);
    for (int i = 0; i < n; ++i) d = derive(d);
    return d;
}

DerivativeResult derive_by_injections(const NcPoly& p, int k) {
    if (k > kMaxH) throw OrderTooHigh("derivative order exceeds the h alphabet");
    DerivativeResult out;
    out.order = k;
    for (const auto& w : p.words) {
        std::vector<size_t> x_pos;
        for (size_t t = 0; t < w.vars.size(); ++t)
            if (w.vars[t] == kVarX) x_pos.push_back(t);
        if (static_cast<int>(x_pos.size()) < k) continue;
        // ordered selections of k distinct x-positions: position for h1,
        // then h2, ...
        std::vector<size_t> sel;
        std::vector<bool> used(x_pos.size(), false);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == k) {
                NcWord nw = w;
                for (int t = 0; t < k; ++t) nw.vars[x_pos[sel[t]]] = var_h(t + 1);
                out.poly.words.push_back(std::move(nw));
                return;
            }
            for (size_t c = 0; c < x_pos.size(); ++c) {
                if (used[c]) continue;
                used[c] = true;
                sel.push_back(c);
                self(self, depth + 1);
                sel.pop_back();
                used[c] = false;
            }
        };
        rec(rec, 0);
    }
    return out;
}

NcPoly derive_all_equal(const NcPoly& p, int n, int h_var) {
    DerivativeResult d = derive_n(p, n);
    NcPoly q = d.poly;
    for (int t = 1; t <= n; ++t) q = rename_var(q, var_h(t), h_var);
    return normalized(q);
}

Element derivative_value(const DerivativeResult& d, const Element& x,
                         const std::vector<Element>& increments,
                         const AlgebraSpec& alg) {
    if (static_cast<int>(increments.size()) != d.order)
        throw DimensionError("derivative_value: expected " +
                             std::to_string(d.order) + " increments");
    Bindings bind;
    bind.emplace_back(kVarX, x);
    for (int t = 0; t < d.order; ++t) bind.emplace_back(var_h(t + 1), increments[t]);
    return eval(d.poly, bind, alg);
}

Element d_star(const DerivativeResult& d, const Element& x, const Element& a,
               const AlgebraSpec& alg) {
    if (d.order != 1) throw UnsupportedOperation("d_star needs a first derivative");
    if (a.is_zero()) throw DivisionByZero("d_star along a zero increment");
    return mul(inverse(a, alg), derivative_value(d, x, {a}, alg), alg);
}

Element star_d(const DerivativeResult& d, const Element& x, const Element& a,
               const AlgebraSpec& alg) {
    if (d.order != 1) throw UnsupportedOperation("star_d needs a first derivative");
    if (a.is_zero()) throw DivisionByZero("star_d along a zero increment");
    return mul(derivative_value(d, x, {a}, alg), inverse(a, alg), alg);
}

CoordMatrix jacobian(const DerivativeResult& d, const Element& x0,
                     const AlgebraSpec& alg) {
    if (d.order != 1) throw UnsupportedOperation("jacobian needs a first derivative");
    CoordMatrix m;
    m.m = RatMatrix(alg.dim(), alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        Element row = derivative_value(d, x0, {alg.basis_element(i)}, alg);
        for (int j = 0; j < alg.dim(); ++j) m.m.at(i, j) = row[j];
    }
    return m;
}

StdComponents differential_std_components(const DerivativeResult& d,
                                          const Element& x0,
                                          const AlgebraSpec& alg) {
    return coord_to_std(jacobian(d, x0, alg), alg);
}

// --- numeric oracle ----------------------------------------------------------

NumElement to_num(const Element& x) {
    NumElement n;
    n.c.reserve(x.dim());
    for (int i = 0; i < x.dim(); ++i) n.c.push_back(to_double(x[i]));
    return n;
}

NumElement num_add(const NumElement& a, const NumElement& b) {
    NumElement r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

NumElement num_sub(const NumElement& a, const NumElement& b) {
    NumElement r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

NumElement num_scale(double s, const NumElement& a) {
    NumElement r = a;
    for (double& v : r.c) v *= s;
    return r;
}

NumElement num_mul(const NumElement& a, const NumElement& b, const AlgebraSpec& alg) {
    int d = alg.dim();
    if (static_cast<int>(a.c.size()) != d || static_cast<int>(b.c.size()) != d)
        throw DimensionError("num_mul dimension mismatch");
    NumElement r;
    r.c.assign(d, 0.0);
    const std::vector<double>& bt = alg.b_double();
    for (int k = 0; k < d; ++k) {
        if (a.c[k] == 0.0) continue;
        for (int l = 0; l < d; ++l) {
            double f = a.c[k] * b.c[l];
            if (f == 0.0) continue;
            for (int p = 0; p < d; ++p) {
                double c = bt[(static_cast<size_t>(k) * d + l) * d + p];
                if (c != 0.0) r.c[p] += f * c;
            }
        }
    }
    return r;
}

NumElement num_conj(const NumElement& a, const AlgebraSpec& alg) {
    if (!alg.has_involution())
        throw UnsupportedOperation("algebra exposes no involution");
    NumElement r = a;
    for (int i = 0; i < alg.dim(); ++i)
        if (i != alg.unit_index()) r.c[i] = -r.c[i];
    return r;
}

NumElement num_inverse(const NumElement& a, const AlgebraSpec& alg) {
    if (!alg.norm_signature())
        throw UnsupportedOperation("algebra has no norm form");
    const auto& sig = *alg.norm_signature();
    double n = 0;
    for (int i = 0; i < alg.dim(); ++i) n += to_double(sig[i]) * a.c[i] * a.c[i];
    if (!(std::abs(n) > 1e-12))
        throw EvaluationError("numeric inverse at a (near-)singular point");
    return num_scale(1.0 / n, num_conj(a, alg));
}

double num_abs(const NumElement& a) {
    double s = 0;
    for (double v : a.c) s += v * v;
    return std::sqrt(s);
}

NumElement numeric_gateaux(const NumMap& f, const NumElement& x,
                           const NumElement& a, const AlgebraSpec& alg,
                           const NumericSchedule& sched) {
    auto central = [&](double t) {
        NumElement plus = f(num_add(x, num_scale(t, a)));
        NumElement minus = f(num_sub(x, num_scale(t, a)));
        return num_scale(1.0 / (2.0 * t), num_sub(plus, minus));
    };
    NumElement d1 = central(sched.t);
    NumElement d2 = central(sched.t / 2.0);
    // one Richardson step for the O(t^2) symmetric-difference error
    NumElement r = num_scale(1.0 / 3.0, num_sub(num_scale(4.0, d2), d1));
    for (double v : r.c)
        if (!std::isfinite(v))
            throw EvaluationError("numeric derivative is not finite");
    (void)alg;
    return r;
}

NumMap numeric_map_of(const NcPoly& p, const AlgebraSpec& alg) {
    for (int v : variables_of(p))
        if (v != kVarX)
            throw UnboundVariable("numeric map: polynomial uses variable " +
                                  var_name(v));
    // p captured by value; alg by reference (it must outlive the map)
    return [p, &alg](const NumElement& x) {
        NumElement total;
        total.c.assign(alg.dim(), 0.0);
        for (const auto& w : p.words) {
            NumElement acc = to_num(w.constants.front());
            for (size_t t = 0; t < w.vars.size(); ++t) {
                acc = num_mul(acc, x, alg);
                acc = num_mul(acc, to_num(w.constants[t + 1]), alg);
            }
            total = num_add(total, acc);
        }
        return total;
    };
}

// --- closed-form table --------------------------------------------------------

std::vector<ClosedFormEntry> closed_form_table(const Element& b, const Element& c,
                                               const Element& a0,
                                               const AlgebraSpec& alg) {
    std::vector<ClosedFormEntry> table;
    NumElement nb = to_num(b), nc = to_num(c), na0 = to_num(a0);

    // f(x) = b (constant): derivative 0
    table.push_back(ClosedFormEntry{
        "const",
        false,
        [b](const Element&, const AlgebraSpec& a) {
            (void)a;
            return b;
        },
        [](const Element&, const Element&, const AlgebraSpec& a) { return a.zero(); },
        [nb](const NumElement&, const AlgebraSpec&) { return nb; }});

    // f(x) = b x^2 c (wrapped square): derivative b (x h + h x) c
    table.push_back(ClosedFormEntry{
        "b*x^2*c",
        false,
        [b, c](const Element& x, const AlgebraSpec& a) {
            return mul(mul(b, mul(x, x, a), a), c, a);
        },
        [b, c](const Element& x, const Element& h, const AlgebraSpec& a) {
            Element inner = add(mul(x, h, a), mul(h, x, a));
            return mul(mul(b, inner, a), c, a);
        },
        [nb, nc](const NumElement& x, const AlgebraSpec& a) {
            return num_mul(num_mul(nb, num_mul(x, x, a), a), nc, a);
        }});

    // f(x) = b x c: derivative b h c
    table.push_back(ClosedFormEntry{
        "b*x*c",
        false,
        [b, c](const Element& x, const AlgebraSpec& a) {
            return mul(mul(b, x, a), c, a);
        },
        [b, c](const Element&, const Element& h, const AlgebraSpec& a) {
            return mul(mul(b, h, a), c, a);
        },
        [nb, nc](const NumElement& x, const AlgebraSpec& a) {
            return num_mul(num_mul(nb, x, a), nc, a);
        }});

    // f(x) = x b - b x: derivative h b - b h
    table.push_back(ClosedFormEntry{
        "x*b-b*x",
        false,
        [b](const Element& x, const AlgebraSpec& a) {
            return sub(mul(x, b, a), mul(b, x, a));
        },
        [b](const Element&, const Element& h, const AlgebraSpec& a) {
            return sub(mul(h, b, a), mul(b, h, a));
        },
        [nb](const NumElement& x, const AlgebraSpec& a) {
            return num_sub(num_mul(x, nb, a), num_mul(nb, x, a));
        }});

    // f(x) = x^2: derivative x h + h x
    table.push_back(ClosedFormEntry{
        "x^2",
        false,
        [](const Element& x, const AlgebraSpec& a) { return mul(x, x, a); },
        [](const Element& x, const Element& h, const AlgebraSpec& a) {
            return add(mul(x, h, a), mul(h, x, a));
        },
        [](const NumElement& x, const AlgebraSpec& a) { return num_mul(x, x, a); }});

    // f(x) = x^{-1}: derivative -x^{-1} h x^{-1}
    table.push_back(ClosedFormEntry{
        "x^-1",
        true,
        [](const Element& x, const AlgebraSpec& a) { return inverse(x, a); },
        [](const Element& x, const Element& h, const AlgebraSpec& a) {
            Element xi = inverse(x, a);
            return neg(mul(mul(xi, h, a), xi, a));
        },
        [](const NumElement& x, const AlgebraSpec& a) { return num_inverse(x, a); }});

    // f(x) = x a0 x^{-1}: derivative h a0 x^{-1} - x a0 x^{-1} h x^{-1}
    table.push_back(ClosedFormEntry{
        "x*a*x^-1",
        true,
        [a0](const Element& x, const AlgebraSpec& a) {
            return mul(mul(x, a0, a), inverse(x, a), a);
        },
        [a0](const Element& x, const Element& h, const AlgebraSpec& a) {
            Element xi = inverse(x, a);
            Element lhs = mul(mul(h, a0, a), xi, a);
            Element rhs = mul(mul(mul(mul(x, a0, a), xi, a), h, a), xi, a);
            return sub(lhs, rhs);
        },
        [na0](const NumElement& x, const AlgebraSpec& a) {
            return num_mul(num_mul(x, na0, a), num_inverse(x, a), a);
        }});

    (void)alg;
    return table;
}

}  // namespace ncq
