// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Fixed seeds make every run identical.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ncq/algebra.hpp"
#include "ncq/errors.hpp"
#include "ncq/gateaux.hpp"
#include "ncq/linear_map.hpp"
#include "ncq/nc_poly.hpp"
#include "ncq/parser.hpp"
#include "ncq/taylor_ode.hpp"

using namespace ncq;

namespace {

int g_failures = 0;

void report(int n, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", n,
                detail.c_str());
    if (!pass) ++g_failures;
}

Element random_element(std::mt19937_64& rng, const AlgebraSpec& alg, int lo,
                       int hi, int max_den) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    std::vector<Rational> v(alg.dim());
    for (auto& c : v) c = Rational(num(rng), den(rng));
    return Element(std::move(v));
}

// componentwise |num - exact| / (1 + |exact|)
double table_err(const NumElement& num, const Element& exact) {
    double worst = 0;
    for (size_t i = 0; i < num.c.size(); ++i) {
        double e = to_double(exact[static_cast<int>(i)]);
        worst = std::max(worst, std::abs(num.c[i] - e) / (1.0 + std::abs(e)));
    }
    return worst;
}

// all monomial words c0 x c1 x ... x cm, constants over the basis, deg <= 5
std::vector<NcPoly> basis_monomials(const AlgebraSpec& alg, int max_deg) {
    std::vector<NcPoly> out;
    for (int deg = 0; deg <= max_deg; ++deg) {
        int slots = deg + 1;
        std::vector<int> idx(slots, 0);
        while (true) {
            NcWord w;
            for (int s = 0; s < slots; ++s) {
                w.constants.push_back(alg.basis_element(idx[s]));
                if (s + 1 < slots) w.vars.push_back(kVarX);
            }
            NcPoly p;
            p.words.push_back(std::move(w));
            out.push_back(std::move(p));
            int pos = slots - 1;
            while (pos >= 0 && idx[pos] == alg.dim() - 1) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    return out;
}

NcPoly random_poly(std::mt19937_64& rng, const AlgebraSpec& alg, int max_deg,
                   int max_words) {
    std::uniform_int_distribution<int> deg(0, max_deg), nwords(1, max_words);
    NcPoly p = NcPoly::zero();
    for (int w = nwords(rng); w > 0; --w) {
        NcPoly word = NcPoly::constant(random_element(rng, alg, -3, 3, 2));
        for (int t = deg(rng); t > 0; --t) {
            word = mul(word, NcPoly::variable(kVarX, alg), alg);
            word = mul(word,
                       NcPoly::constant(random_element(rng, alg, -3, 3, 2)),
                       alg);
        }
        p = add(p, word);
    }
    return p;
}

NcPoly random_monomial(std::mt19937_64& rng, const AlgebraSpec& alg, int deg) {
    NcWord w;
    w.constants.push_back(random_element(rng, alg, -3, 3, 2));
    for (int s = 0; s < deg; ++s) {
        w.vars.push_back(kVarX);
        w.constants.push_back(random_element(rng, alg, -3, 3, 2));
    }
    NcPoly p;
    p.words.push_back(std::move(w));
    return p;
}

// the shared corpus for the differentiation-law criteria: every monomial of
// degree <= 5 with basis-element coefficients, plus 200 random
// rational-coefficient monomials
std::vector<NcPoly> monomial_corpus(uint64_t seed, const AlgebraSpec& alg) {
    std::vector<NcPoly> out = basis_monomials(alg, 5);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int t = 0; t < 200; ++t)
        out.push_back(random_monomial(rng, alg, deg(rng)));
    return out;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// --- criterion 1: derivative table vs the numeric oracle -------------------

void criterion_1() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    std::mt19937_64 rng(0xC0FFEE01u);
    double worst = 0;
    std::string worst_entry;
    for (int pt = 0; pt < 100; ++pt) {
        Element b = random_element(rng, H, -2, 2, 2);
        Element c = random_element(rng, H, -2, 2, 2);
        Element a0 = random_element(rng, H, -2, 2, 2);
        auto table = closed_form_table(b, c, a0, H);
        for (const auto& entry : table) {
            Element x = random_element(rng, H, -2, 2, 2);
            Element h = random_element(rng, H, -2, 2, 2);
            if (entry.needs_inverse)
                while (abs_sq(x, H) < Rational(1, 4))
                    x = random_element(rng, H, -2, 2, 2);
            Element exact = entry.derivative(x, h, H);
            NumMap f = [&](const NumElement& xx) { return entry.num_map(xx, H); };
            NumElement approx = numeric_gateaux(f, to_num(x), to_num(h), H);
            double err = table_err(approx, exact);
            if (err > worst) {
                worst = err;
                worst_entry = entry.name;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "derivative table vs numeric oracle, 100 random points, "
                  "worst rel err %.3e (%s), tolerance 1e-6",
                  worst, worst_entry.c_str());
    report(1, worst <= 1e-6, buf);
}

// --- criterion 2: differentiation laws -------------------------------------

void criterion_2() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    bool ok = true;
    std::string why;
    std::vector<NcPoly> corpus = monomial_corpus(0xC0FFEE02u, H);
    for (const NcPoly& p : corpus) {
        int n = degree_in(p, kVarX);
        DerivativeResult d = derivative_of(p);
        NcPoly top_order;  // will hold the order-n derivative
        for (int m = 0; m <= n + 1 && ok; ++m) {
            if (m >= 2 && m <= 3) {
                std::vector<int> hs;
                for (int t = 1; t <= m; ++t) hs.push_back(var_h(t));
                if (!is_symmetric(d.poly, hs, H)) {
                    ok = false;
                    why = "order-" + std::to_string(m) +
                          " derivative not symmetric for " + to_string(p);
                }
            }
            if (ok && m < n) {
                // lower-order derivatives of a degree-n monomial vanish at 0
                NcPoly at0 = substitute_const(d.poly, kVarX, H.zero(), H);
                if (!is_semantically_zero(at0, H)) {
                    ok = false;
                    why = "order-" + std::to_string(m) +
                          " derivative does not vanish at 0 for " + to_string(p);
                }
            }
            if (m == n) top_order = d.poly;
            d = derive(d);
        }
        if (!ok) break;
        // d now holds the order-(n+1) derivative: it must vanish identically
        if (!is_semantically_zero(d.poly, H)) {
            ok = false;
            why = "derivative past the degree is nonzero for " + to_string(p);
            break;
        }
        // n! law: set every increment equal in the order-n derivative
        NcPoly alleq = top_order;
        for (int t = 2; t <= n; ++t) alleq = rename_var(alleq, var_h(t), var_h(1));
        NcPoly want = scale(Rational(factorial(n)), rename_var(p, kVarX, var_h(1)));
        if (!semantic_eq(alleq, want, H)) {
            ok = false;
            why = "factorial law fails for " + to_string(p);
            break;
        }
    }
    report(2, ok,
           ok ? "symmetry, vanishing past the degree, vanishing at 0 below the "
                "degree, and the n! law exact on 5460 basis + 200 random "
                "monomials"
              : why);
}

// --- criterion 3: independent derivative algorithms -------------------------

void criterion_3() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    std::mt19937_64 rng(0xC0FFEE03u);
    bool ok = true;
    std::string why;
    // the same corpus as criterion 2, orders up to the vanishing one
    std::vector<NcPoly> corpus = monomial_corpus(0xC0FFEE02u, H);
    for (const NcPoly& p : corpus) {
        int top = std::min(degree_in(p, kVarX) + 1, 3);
        DerivativeResult d = derivative_of(p);
        for (int order = 1; order <= top; ++order) {
            d = derive(d);  // the iterated product-rule algorithm
            if (!semantic_eq(d.poly, derive_by_injections(p, order).poly, H)) {
                ok = false;
                why = "algorithms disagree at order " + std::to_string(order) +
                      " on " + to_string(p);
                break;
            }
        }
        if (!ok) break;
    }
    // plus multi-word random polynomials for good measure
    for (int t = 0; ok && t < 100; ++t) {
        NcPoly p = random_poly(rng, H, 4, 3);
        for (int order = 1; order <= 3; ++order) {
            if (!semantic_eq(derive_n(p, order).poly,
                             derive_by_injections(p, order).poly, H)) {
                ok = false;
                why = "algorithms disagree on a random polynomial";
                break;
            }
        }
    }
    report(3, ok,
           ok ? "occurrence-replacement and injection algorithms agree on the "
                "full monomial corpus (orders 1-3) and 100 random polynomials"
              : why);
}

// --- criterion 4: the worked differential equations -------------------------

void criterion_4() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    bool ok = true;
    std::string why;
    // quadratic rhs integrates to x^3
    OdeOutcome a = solve_ode(
        {parse_poly("x^2*h1 + x*h1*x + h1*x^2", H), H.zero(), H.zero()}, 16, H);
    if (!std::holds_alternative<OdeSolution>(a) ||
        to_string(std::get<OdeSolution>(a).y.assembled()) != "x^3") {
        ok = false;
        why = "quadratic-rhs equation did not integrate to x^3";
    }
    // one-sided rhs is unsolvable with a second-order witness
    OdeOutcome b =
        solve_ode({parse_poly("3*h1*x^2", H), H.zero(), H.zero()}, 16, H);
    if (ok && (!std::holds_alternative<UnsolvableWitness>(b) ||
               std::get<UnsolvableWitness>(b).order != 2)) {
        ok = false;
        why = "one-sided rhs lacked the expected order-2 witness";
    }
    // constant sandwiches with random constants: rhs sum c h1 d integrates
    // to sum c x d
    std::mt19937_64 rng(0xC0FFEE04u);
    for (int t = 0; ok && t < 25; ++t) {
        NcPoly rhs = NcPoly::zero();
        NcPoly want = NcPoly::zero();
        std::uniform_int_distribution<int> terms(1, 3);
        for (int s = terms(rng); s > 0; --s) {
            NcPoly left = NcPoly::constant(random_element(rng, H, -3, 3, 2));
            NcPoly right = NcPoly::constant(random_element(rng, H, -3, 3, 2));
            rhs = add(rhs, mul(mul(left, NcPoly::variable(var_h(1), H), H),
                               right, H));
            want = add(want, mul(mul(left, NcPoly::variable(kVarX, H), H),
                                 right, H));
        }
        if (is_semantically_zero(rhs, H)) continue;
        OdeOutcome c = solve_ode({rhs, H.zero(), H.zero()}, 16, H);
        if (!std::holds_alternative<OdeSolution>(c) ||
            !semantic_eq(std::get<OdeSolution>(c).y.assembled(), want, H)) {
            ok = false;
            why = "sandwich rhs did not integrate term by term";
        }
    }
    report(4, ok,
           ok ? "worked equations: x^3 solution, order-2 unsolvability "
                "witness, term-by-term sandwich integration"
              : why);
}

// --- criterion 5: the noncommutative exponent -------------------------------

void criterion_5() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    bool ok = true;
    std::string why;
    for (int n = 1; n <= 10; ++n) {
        NcPoly dn = exponent_derivative(n, H);
        if (dn.words.size() != (1u << n)) {
            ok = false;
            why = "expected 2^" + std::to_string(n) + " words, got " +
                  std::to_string(dn.words.size());
            break;
        }
    }
    NumElement e = exp_series(H.basis_element(1), 30, H);
    if (ok && (std::abs(e.c[0] - std::cos(1.0)) > 1e-12 ||
               std::abs(e.c[1] - std::sin(1.0)) > 1e-12)) {
        ok = false;
        why = "exp(i) series does not match cos 1 + i sin 1 to 1e-12";
    }
    std::mt19937_64 rng(0xC0FFEE05u);
    for (int t = 0; ok && t < 200; ++t) {
        Element a = random_element(rng, H, -3, 3, 2);
        Element b = random_element(rng, H, -3, 3, 2);
        bool commute = mul(a, b, H) == mul(b, a, H);
        if (exp_additivity_defect(a, b, H).is_zero() != commute) {
            ok = false;
            why = "additivity defect does not vanish exactly on commuting "
                  "pairs";
        }
    }
    if (ok) {
        NumElement lhs = exp_series(
            add(H.basis_element(1), H.basis_element(2)), 40, H);
        NumElement ei = exp_series(H.basis_element(1), 40, H);
        NumElement ej = exp_series(H.basis_element(2), 40, H);
        NumElement rhs = num_mul(ei, ej, H);
        double dist = 0;
        for (int s = 0; s < 4; ++s)
            dist += (lhs.c[s] - rhs.c[s]) * (lhs.c[s] - rhs.c[s]);
        dist = std::sqrt(dist);
        if (dist <= 1e-3) {
            ok = false;
            why = "exp(i+j) unexpectedly close to exp(i) exp(j)";
        }
    }
    report(5, ok,
           ok ? "exponent: 2^n word counts (n <= 10), Euler series to 1e-12, "
                "defect vanishes exactly iff commuting, exp(i+j) != "
                "exp(i)exp(j)"
              : why);
}

// --- criterion 6: Cauchy-Riemann over the complex numbers -------------------

void criterion_6() {
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    std::mt19937_64 rng(0xC0FFEE06u);
    bool ok = true;
    std::string why;
    for (int t = 0; t < 1000; ++t) {
        StdComponents sc;
        sc.m = RatMatrix(2, 2);
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                sc.m.at(i, j) = Rational(num(rng), den(rng));
        CoordMatrix cm = std_to_coord(sc, C);
        if (!cauchy_riemann_check(cm).satisfied) {
            ok = false;
            why = "a coordinate matrix of standard components violated "
                  "Cauchy-Riemann";
            break;
        }
        StdComponents back = coord_to_std(cm, C);
        if (std_to_coord(back, C) != cm) {
            ok = false;
            why = "canonical preimage does not reproduce the matrix";
            break;
        }
    }
    if (ok) {
        CoordMatrix bad;
        bad.m = RatMatrix::identity(2);
        bad.m.at(1, 1) = Rational(-1);
        try {
            coord_to_std(bad, C);
            ok = false;
            why = "diag(1,-1) was not rejected";
        } catch (const NotRealizable& e) {
            if (e.residuals.size() != 2 || e.residuals[0] != "2" ||
                e.residuals[1] != "0") {
                ok = false;
                why = "diag(1,-1) rejected with wrong residuals";
            }
        }
    }
    report(6, ok,
           ok ? "1000 random standard components always satisfy "
                "Cauchy-Riemann; diag(1,-1) rejected with residuals (2, 0)"
              : why);
}

// --- criterion 7: quaternion conversion bijection ----------------------------

void criterion_7() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    std::mt19937_64 rng(0xC0FFEE07u);
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
        StdComponents sc;
        sc.m = RatMatrix(4, 4);
        CoordMatrix cm;
        cm.m = RatMatrix(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                sc.m.at(i, j) = Rational(num(rng), den(rng));
                cm.m.at(i, j) = Rational(num(rng), den(rng));
            }
        ok = coord_to_std(std_to_coord(sc, H), H) == sc &&
             std_to_coord(coord_to_std(cm, H), H) == cm;
    }
    report(7, ok,
           ok ? "standard/coordinate conversion is an exact bijection on "
                "1000 random matrices each way"
              : "conversion round trip failed");
}

// --- criterion 8: conjugation ------------------------------------------------

void criterion_8() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    std::mt19937_64 rng(0xC0FFEE08u);
    bool ok = true;
    std::string why;
    NcPoly cpoly = parse_poly("conj(x)", H);
    DerivativeResult dc = derive_n(cpoly, 1);
    RatMatrix want_jac = RatMatrix::identity(4);
    want_jac.at(1, 1) = want_jac.at(2, 2) = want_jac.at(3, 3) = Rational(-1);
    for (int t = 0; t < 1000 && ok; ++t) {
        Element x = random_element(rng, H, -5, 5, 4);
        if (eval(cpoly, {{kVarX, x}}, H) != conj(x, H)) {
            ok = false;
            why = "averaged involution formula disagrees with conjugation";
            break;
        }
        if (jacobian(dc, x, H).m != want_jac) {
            ok = false;
            why = "conjugation jacobian is not diag(1,-1,-1,-1)";
            break;
        }
    }
    if (ok) {
        StdComponents sc = differential_std_components(dc, H.zero(), H);
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) {
                Rational want = i == j ? Rational(-1, 2) : Rational(0);
                if (sc.m.at(i, j) != want) {
                    ok = false;
                    why = "standard components are not -1/2 on the diagonal";
                }
            }
    }
    report(8, ok,
           ok ? "conjugation at 1000 points: involution identity exact, "
                "jacobian diag(1,-1,-1,-1), standard components -1/2 diagonal"
              : why);
}

// --- criterion 9: composition and the tensor law ----------------------------

void criterion_9() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    std::mt19937_64 rng(0xC0FFEE09u);
    bool ok = true;
    std::string why;
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    auto rand_pairs = [&](int n) {
        PairRep f;
        for (int s = 0; s < n; ++s)
            f.pairs.emplace_back(random_element(rng, H, -4, 4, 3),
                                 random_element(rng, H, -4, 4, 3));
        return f;
    };
    for (int t = 0; t < 100 && ok; ++t) {
        PairRep f = rand_pairs(2), g = rand_pairs(2);
        StdComponents fs = pair_to_std(f, H), gs = pair_to_std(g, H);
        StdComponents hs = compose_std(gs, fs, H);
        PairRep hp = compose(g, f, H);
        for (int s = 0; s < 100; ++s) {
            Element x = random_element(rng, H, -4, 4, 3);
            Element want = apply(g, apply(f, x, H), H);
            if (apply(hs, x, H) != want || apply(hp, x, H) != want) {
                ok = false;
                why = "composition disagrees with pointwise application";
                break;
            }
        }
    }
    for (int t = 0; t < 20 && ok; ++t) {
        RatMatrix a_mat(4, 4);
        do {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    a_mat.at(i, j) = Rational(num(rng), den(rng));
            a_mat.at(0, 0) = Rational(1);
            a_mat.at(0, 1) = a_mat.at(0, 2) = a_mat.at(0, 3) = Rational(0);
        } while (a_mat.det() == 0);
        CoordMatrix m;
        m.m = RatMatrix(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.m.at(i, j) = Rational(num(rng), den(rng));
        CoordMatrix mp = transform_coords(m, a_mat);
        if (mp.m != a_mat * m.m * a_mat.inverse()) {
            ok = false;
            why = "tensor transformation law violated";
            break;
        }
        // compatibility with evaluation through the coordinate translation
        for (int s = 0; s < 5; ++s) {
            Element xp = random_element(rng, H, -4, 4, 3);
            auto translate = [&](const Element& v) {
                std::vector<Rational> c(4);
                for (int jj = 0; jj < 4; ++jj)
                    for (int ii = 0; ii < 4; ++ii)
                        c[jj] += v[ii] * a_mat.at(ii, jj);
                return Element(std::move(c));
            };
            if (translate(apply(mp, xp)) != apply(m, translate(xp))) {
                ok = false;
                why = "transformed matrix is not the same map in new "
                      "coordinates";
                break;
            }
        }
    }
    report(9, ok,
           ok ? "composition exact on 100 map pairs x 100 points; tensor law "
                "verified for 20 basis changes"
              : why);
}

// --- criterion 10: Taylor remainder decay ------------------------------------

void criterion_10() {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly f = parse_poly("x^3", H);
    TaylorPoly full = taylor_expand(f, H.zero(), H);
    TaylorPoly trunc;
    trunc.center = full.center;
    trunc.terms.assign(full.terms.begin(), full.terms.begin() + 3);
    ConvergenceProbe probe =
        remainder_probe(f, trunc, H.zero(), H.basis_element(1), 2, H,
                        {1e-1, 1e-2, 1e-3, 1e-4});
    bool ok = probe.samples.size() == 4;
    std::string detail;
    if (ok) {
        for (size_t s = 1; s < probe.samples.size(); ++s) {
            double prev = probe.samples[s - 1].second;
            double cur = probe.samples[s].second;
            if (!(cur > 0) || prev / cur < 9.0) {
                ok = false;
                break;
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "order-2 remainder ratio decays by >= 9 per decade "
                      "(%.3e -> %.3e over t = 1e-1..1e-4)",
                      probe.samples.front().second, probe.samples.back().second);
        detail = buf;
    } else {
        detail = "remainder probe returned the wrong number of samples";
    }
    report(10, ok, ok ? detail : "remainder ratio does not decay like t");
}

}  // namespace

int main(int argc, char** argv) {
    void (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                            criterion_5, criterion_6, criterion_7, criterion_8,
                            criterion_9, criterion_10};
    if (argc > 1) {
        // run a single criterion (1-based), handy for debugging
        int n = std::atoi(argv[1]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: %s [1..10]\n", argv[0]);
            return 2;
        }
        criteria[n - 1]();
    } else {
        for (auto* c : criteria) c();
    }
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all %s criteria passed\n", argc > 1 ? "selected" : "10");
    return 0;
}
