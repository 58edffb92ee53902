// ncq: calculus of maps over finite-dimensional division algebras.
// Exact symbolic Gateaux derivatives, coordinate/standard-component
// conversions, Taylor expansions, ODE solving by the Taylor method, and
// the noncommutative exponent, with numeric cross-checks.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncq/algebra.hpp"
#include "ncq/gateaux.hpp"
#include "ncq/linear_map.hpp"
#include "ncq/nc_poly.hpp"
#include "ncq/parser.hpp"
#include "ncq/taylor_ode.hpp"

using nlohmann::json;
using namespace ncq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitOde = 3;
constexpr int kExitUnsupported = 4;

std::string default_algebra() {
    const char* env = std::getenv("NCQ_ALGEBRA");
    return env && *env ? env : "quaternion";
}

json checks_to_json(const std::vector<std::tuple<std::string, bool, std::string>>& cs) {
    json arr = json::array();
    for (const auto& [name, pass, detail] : cs)
        arr.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    return arr;
}

bool all_pass(const std::vector<std::tuple<std::string, bool, std::string>>& cs) {
    for (const auto& [name, pass, detail] : cs)
        if (!pass) return false;
    return true;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (const auto& row : matrix_to_strings(m)) rows.push_back(row);
    return rows;
}

void print_matrix(const std::string& label, const RatMatrix& m) {
    std::cout << label << ":\n";
    for (int i = 0; i < m.rows(); ++i) {
        std::cout << "  [";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) std::cout << ", ";
            std::cout << to_string(m.at(i, j));
        }
        std::cout << "]\n";
    }
}

RatMatrix parse_matrix_arg(const std::string& text) {
    // rows separated by ';', entries by ','; entries are rationals
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) {
        std::vector<std::string> entries;
        std::istringstream rin(row);
        std::string cell;
        while (std::getline(rin, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t"));
            cell.erase(cell.find_last_not_of(" \t") + 1);
            entries.push_back(cell);
        }
        rows.push_back(std::move(entries));
    }
    return matrix_from_strings(rows);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string num_to_string(const NumElement& v, const AlgebraSpec& alg) {
    static const char* letters4[] = {"", "i", "j", "k"};
    std::ostringstream out;
    bool first = true;
    for (int idx = 0; idx < alg.dim(); ++idx) {
        double c = v.c[idx];
        if (first) {
            out << format_double(c);
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ") << format_double(std::abs(c));
        }
        if (idx != 0) out << (alg.dim() == 4 ? letters4[idx] : "i");
    }
    return out.str();
}

// deterministic pseudo-random rationals for the built-in cross-checks
struct RatGen {
    std::mt19937_64 rng;
    explicit RatGen(uint64_t seed) : rng(seed) {}
    Rational rat(int lo = -4, int hi = 4, int max_den = 4) {
        std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
        return Rational(num(rng), den(rng));
    }
    Element element(const AlgebraSpec& alg, int lo = -4, int hi = 4,
                    int max_den = 4) {
        std::vector<Rational> c(alg.dim());
        for (auto& v : c) v = rat(lo, hi, max_den);
        return Element(std::move(c));
    }
};

// numeric AST evaluation for the oracle mode (negative powers allowed on x)
NumElement eval_expr_numeric(const Expr& e, const NumElement& x,
                             const AlgebraSpec& alg) {
    switch (e.kind) {
        case Expr::Kind::Sum: {
            NumElement acc;
            acc.c.assign(alg.dim(), 0.0);
            for (size_t t = 0; t < e.children.size(); ++t) {
                NumElement v = eval_expr_numeric(*e.children[t], x, alg);
                acc = e.signs[t] > 0 ? num_add(acc, v) : num_sub(acc, v);
            }
            return acc;
        }
        case Expr::Kind::Prod: {
            NumElement acc;
            acc.c.assign(alg.dim(), 0.0);
            acc.c[alg.unit_index()] = 1.0;
            for (const auto& child : e.children)
                acc = num_mul(acc, eval_expr_numeric(*child, x, alg), alg);
            return acc;
        }
        case Expr::Kind::Pow: {
            int n = e.exponent;
            NumElement base = eval_expr_numeric(*e.children[0], x, alg);
            if (n < 0) {
                base = num_inverse(base, alg);
                n = -n;
            }
            NumElement acc;
            acc.c.assign(alg.dim(), 0.0);
            acc.c[alg.unit_index()] = 1.0;
            for (int t = 0; t < n; ++t) acc = num_mul(acc, base, alg);
            return acc;
        }
        case Expr::Kind::Var:
            if (e.var != kVarX)
                throw SemanticError("oracle mode evaluates maps of x only");
            return x;
        case Expr::Kind::RationalLit: {
            NumElement v;
            v.c.assign(alg.dim(), 0.0);
            v.c[alg.unit_index()] = to_double(e.value);
            return v;
        }
        case Expr::Kind::BasisLit: {
            if (e.basis >= alg.dim())
                throw SemanticError("basis letter not available in this algebra");
            NumElement v;
            v.c.assign(alg.dim(), 0.0);
            v.c[e.basis] = 1.0;
            return v;
        }
        case Expr::Kind::Conj:
            return num_conj(eval_expr_numeric(*e.children[0], x, alg), alg);
    }
    throw SemanticError("malformed expression tree");
}

int cmd_derive(const std::string& alg_name, const std::string& expr_text, int order,
               bool oracle, const std::string& at_text, const std::string& dir_text) {
    AlgebraSpec alg = AlgebraSpec::from_name(alg_name);
    if (oracle) {
        ParseOptions opts;
        opts.allow_negative_powers = true;
        ExprPtr ast = parse_expression(expr_text, opts);
        if (order != 1)
            throw UnsupportedOperation("oracle mode computes first derivatives");
        Element at = parse_element(at_text, alg);
        Element dir = parse_element(dir_text, alg);
        NumMap f = [&](const NumElement& x) {
            return eval_expr_numeric(*ast, x, alg);
        };
        NumElement d = numeric_gateaux(f, to_num(at), to_num(dir), alg);
        std::cout << "numeric derivative: " << num_to_string(d, alg) << "\n";
        json out = {{"algebra", alg.name()},
                    {"canonical", expr_text},
                    {"checks", json::array()}};
        json value = json::array();
        for (double v : d.c) value.push_back(v);
        out["value"] = value;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    NcPoly p = parse_poly(expr_text, alg);
    DerivativeResult d = derive_n(p, order);
    std::string canonical = to_string(d.poly);
    std::cout << canonical << "\n";

    std::vector<std::tuple<std::string, bool, std::string>> checks;
    // two independent algorithms must agree
    DerivativeResult inj = derive_by_injections(p, order);
    bool agree = semantic_eq(d.poly, inj.poly, alg);
    checks.emplace_back("algorithm-agreement", agree,
                        "iterated product rule vs injection enumeration");
    // symmetry in the increments
    std::vector<int> hs;
    for (int t = 1; t <= order; ++t) hs.push_back(var_h(t));
    bool sym = is_symmetric(d.poly, hs, alg);
    checks.emplace_back("increment-symmetry", sym,
                        "invariance under transpositions of h1..h" +
                            std::to_string(order));
    // numeric spot check for first derivatives
    if (order == 1) {
        RatGen gen(20240901);
        Element x0 = gen.element(alg, -2, 2, 2);
        Element a0 = gen.element(alg, -2, 2, 2);
        Element exact =
            eval(d.poly, {{kVarX, x0}, {var_h(1), a0}}, alg);
        NumElement approx =
            numeric_gateaux(numeric_map_of(p, alg), to_num(x0), to_num(a0), alg);
        double err = 0, scale = 1;
        for (int t = 0; t < alg.dim(); ++t) {
            err = std::max(err, std::abs(approx.c[t] - to_double(exact[t])));
            scale = std::max(scale, std::abs(to_double(exact[t])));
        }
        bool ok = err / scale <= 1e-6;
        checks.emplace_back("numeric-spot-check", ok,
                            "max abs deviation " + format_double(err) +
                                " at a fixed random point");
    }
    for (const auto& [name, pass, detail] : checks)
        std::cout << (pass ? "[ ok ] " : "[FAIL] ") << name << ": " << detail
                  << "\n";
    json out = {{"algebra", alg.name()},
                {"canonical", canonical},
                {"order", order},
                {"checks", checks_to_json(checks)}};
    // exact directional value (all increments along --dir) when a point is given
    if (!at_text.empty() && !dir_text.empty()) {
        Element x0 = parse_element(at_text, alg);
        Element a0 = parse_element(dir_text, alg);
        Bindings bind{{kVarX, x0}};
        for (int t = 1; t <= order; ++t) bind.emplace_back(var_h(t), a0);
        Element value = eval(d.poly, bind, alg);
        std::cout << "value at x=" << to_string(x0) << ", a=" << to_string(a0)
                  << ": " << to_string(value) << "\n";
        out["value"] = to_string(value);
        if (order == 1 && !a0.is_zero() && alg.is_division()) {
            Element ainv = inverse(a0, alg);
            std::cout << "D* ratio (a^-1 * value): "
                      << to_string(mul(ainv, value, alg)) << "\n";
            std::cout << "*D ratio (value * a^-1): "
                      << to_string(mul(value, ainv, alg)) << "\n";
        }
    }
    std::cout << out.dump(2) << "\n";
    return all_pass(checks) ? kExitOk : kExitVerifyFail;
}

int cmd_jacobian(const std::string& alg_name, const std::string& expr_text,
                 const std::string& at_arg) {
    AlgebraSpec alg = AlgebraSpec::from_name(alg_name);
    std::string at_text = at_arg;
    if (at_text.rfind("x=", 0) == 0) at_text = at_text.substr(2);
    Element x0 = parse_element(at_text, alg);
    NcPoly p = parse_poly(expr_text, alg);
    DerivativeResult d = derive_n(p, 1);
    CoordMatrix jac = jacobian(d, x0, alg);
    StdComponents sc = differential_std_components(d, x0, alg);
    std::cout << "differential: " << to_string(d.poly) << "\n";
    print_matrix("coordinate matrix (jacobian)", jac.m);
    print_matrix("standard components", sc.m);

    std::vector<std::tuple<std::string, bool, std::string>> checks;
    CoordMatrix round = std_to_coord(sc, alg);
    checks.emplace_back("conversion-roundtrip", round.m == jac.m,
                        "standard components reproduce the coordinate matrix");
    if (alg.dim() == 2) {
        CrReport cr = cauchy_riemann_check(jac);
        checks.emplace_back("cauchy-riemann", cr.satisfied,
                            "residuals " + to_string(cr.residuals[0]) + ", " +
                                to_string(cr.residuals[1]));
    }
    if (alg.name() == "quaternion") {
        // the four 4-identity blocks of the inversion tables
        const char* names[] = {"diagonal-block", "mixed-block-01", "mixed-block-02",
                               "mixed-block-03"};
        // block g: indices (i, j) with i xor j == g in the pairing sense
        for (int g = 0; g < 4; ++g) {
            bool ok = true;
            for (int i2 = 0; i2 < 4 && ok; ++i2)
                for (int j2 = 0; j2 < 4 && ok; ++j2) {
                    if ((i2 ^ j2) != g) continue;
                    ok = round.m.at(i2, j2) == jac.m.at(i2, j2);
                }
            checks.emplace_back(names[g], ok,
                                "inversion identities of the block agree");
        }
    }
    for (const auto& [name, pass, detail] : checks)
        std::cout << (pass ? "[ ok ] " : "[FAIL] ") << name << ": " << detail
                  << "\n";
    json out = {{"algebra", alg.name()},
                {"canonical", to_string(d.poly)},
                {"coordinates", matrix_json(jac.m)},
                {"std_components", matrix_json(sc.m)},
                {"checks", checks_to_json(checks)}};
    std::cout << out.dump(2) << "\n";
    return all_pass(checks) ? kExitOk : kExitVerifyFail;
}

int cmd_taylor(const std::string& alg_name, const std::string& expr_text,
               const std::string& at_text, int degree) {
    AlgebraSpec alg = AlgebraSpec::from_name(alg_name);
    Element x0 = parse_element(at_text, alg);
    NcPoly f = parse_poly(expr_text, alg);
    TaylorPoly tp = taylor_expand(f, x0, alg, degree);
    for (size_t n = 0; n < tp.terms.size(); ++n)
        std::cout << "term " << n << ": " << to_string(tp.terms[n]) << "\n";
    std::vector<std::tuple<std::string, bool, std::string>> checks;
    bool recon = semantic_eq(tp.assembled(), f, alg);
    checks.emplace_back("reconstruction", recon,
                        "assembled expansion equals the input map");
    for (const auto& [name, pass, detail] : checks)
        std::cout << (pass ? "[ ok ] " : "[FAIL] ") << name << ": " << detail
                  << "\n";
    json terms = json::array();
    for (const auto& t : tp.terms) terms.push_back(to_string(t));
    json out = {{"algebra", alg.name()},
                {"canonical", to_string(tp.assembled())},
                {"center", to_string(x0)},
                {"terms", terms},
                {"checks", checks_to_json(checks)}};
    std::cout << out.dump(2) << "\n";
    return all_pass(checks) ? kExitOk : kExitVerifyFail;
}

int cmd_solve_ode(const std::string& alg_name, const std::string& rhs_text,
                  const std::string& x0_text, const std::string& y0_text,
                  int max_order) {
    AlgebraSpec alg = AlgebraSpec::from_name(alg_name);
    OdeProblem problem{parse_poly(rhs_text, alg), parse_element(x0_text, alg),
                       parse_element(y0_text, alg)};
    OdeOutcome outcome = solve_ode(problem, max_order, alg);
    if (const auto* wit = std::get_if<UnsolvableWitness>(&outcome)) {
        std::cout << "unsolvable: order-" << wit->order
                  << " derivative candidate is not symmetric under the "
                     "transposition (h"
                  << wit->i << ", h" << wit->j << ")\n";
        std::cout << "candidate: " << to_string(wit->candidate) << "\n";
        json out = {{"algebra", alg.name()},
                    {"canonical", to_string(wit->candidate)},
                    {"unsolvable", {{"order", wit->order},
                                    {"swap", {wit->i, wit->j}}}},
                    {"checks", json::array()}};
        std::cout << out.dump(2) << "\n";
        return kExitOde;
    }
    const auto& sol = std::get<OdeSolution>(outcome);
    std::string canonical = to_string(sol.y.assembled());
    std::cout << "y = " << canonical << "\n";
    json out = {{"algebra", alg.name()},
                {"canonical", canonical},
                {"checks",
                 checks_to_json({{"reproduces-rhs", true,
                                  "derivative of the solution equals the rhs"},
                                 {"initial-value", true, "y(x0) = y0"}})}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_exp(const std::string& alg_name, const std::string& at_text, int terms) {
    AlgebraSpec alg = AlgebraSpec::from_name(alg_name);
    Element q = parse_element(at_text, alg);
    NumElement v = exp_series(q, terms, alg);
    std::cout << "exp(" << to_string(q) << ") ~ " << num_to_string(v, alg) << "\n";
    json value = json::array();
    for (double c : v.c) value.push_back(c);
    json out = {{"algebra", alg.name()},
                {"canonical", to_string(q)},
                {"value", value},
                {"terms", terms},
                {"checks", json::array()}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_check_cr(const std::string& matrix_text) {
    RatMatrix m = parse_matrix_arg(matrix_text);
    CoordMatrix cm;
    cm.m = m;
    CrReport rep = cauchy_riemann_check(cm);
    if (rep.satisfied)
        std::cout << "satisfied\n";
    else
        std::cout << "violated: residuals " << to_string(rep.residuals[0]) << ", "
                  << to_string(rep.residuals[1]) << "\n";
    json out = {{"algebra", "complex"},
                {"canonical", ""},
                {"coordinates", matrix_json(m)},
                {"checks",
                 checks_to_json({{"cauchy-riemann", rep.satisfied,
                                  "residuals " + to_string(rep.residuals[0]) +
                                      ", " + to_string(rep.residuals[1])}})}};
    std::cout << out.dump(2) << "\n";
    return rep.satisfied ? kExitOk : kExitVerifyFail;
}

int cmd_verify_table(const std::string& alg_name, int points, uint64_t seed) {
    AlgebraSpec alg = AlgebraSpec::from_name(alg_name);
    RatGen gen(seed);
    bool all_ok = true;
    json checks = json::array();
    std::cout << "verifying closed-form derivatives against the numeric oracle ("
              << points << " points, seed " << seed << ")\n";
    // entry names are stable across parameter draws; collect worst error
    std::vector<std::string> names;
    std::vector<double> worst;
    for (int pt = 0; pt < points; ++pt) {
        Element b = gen.element(alg, -2, 2, 2);
        Element c = gen.element(alg, -2, 2, 2);
        Element a0 = gen.element(alg, -2, 2, 2);
        auto table = closed_form_table(b, c, a0, alg);
        if (names.empty()) {
            for (const auto& e : table) names.push_back(e.name);
            worst.assign(table.size(), 0.0);
        }
        for (size_t t = 0; t < table.size(); ++t) {
            const auto& entry = table[t];
            Element x = gen.element(alg, -2, 2, 2);
            Element h = gen.element(alg, -2, 2, 2);
            if (entry.needs_inverse)
                while (abs_sq(x, alg) < Rational(1, 4))
                    x = gen.element(alg, -2, 2, 2);
            Element exact = entry.derivative(x, h, alg);
            NumMap f = [&](const NumElement& xx) { return entry.num_map(xx, alg); };
            NumElement approx = numeric_gateaux(f, to_num(x), to_num(h), alg);
            double err = 0, scale = 1;
            for (int idx = 0; idx < alg.dim(); ++idx) {
                err = std::max(err,
                               std::abs(approx.c[idx] - to_double(exact[idx])));
                scale = std::max(scale, std::abs(to_double(exact[idx])));
            }
            worst[t] = std::max(worst[t], err / scale);
        }
    }
    for (size_t t = 0; t < names.size(); ++t) {
        bool ok = worst[t] <= 1e-6;
        all_ok = all_ok && ok;
        std::cout << (ok ? "[ ok ] " : "[FAIL] ") << names[t]
                  << ": max rel err " << format_double(worst[t]) << "\n";
        checks.push_back({{"name", names[t]},
                          {"pass", ok},
                          {"detail", "max rel err " + format_double(worst[t])}});
    }
    json out = {{"algebra", alg.name()},
                {"canonical", ""},
                {"checks", checks}};
    std::cout << out.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_norm(const std::string& alg_name, bool alg_explicit,
             const std::string& matrix_text) {
    RatMatrix m = parse_matrix_arg(matrix_text);
    // without an explicit algebra the dimension of the matrix decides
    AlgebraSpec alg = alg_explicit ? AlgebraSpec::from_name(alg_name)
                      : m.rows() == 2 ? AlgebraSpec::complex_algebra()
                                      : AlgebraSpec::quaternions();
    if (m.rows() != alg.dim() || m.cols() != alg.dim())
        throw SemanticError("coordinate matrix is " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()) + " but algebra " +
                            alg.name() + " has dimension " +
                            std::to_string(alg.dim()));
    CoordMatrix cm;
    cm.m = m;
    double n = map_norm(cm, alg);
    std::cout << "norm = " << format_double(n) << "\n";
    json out = {{"algebra", alg.name()},
                {"canonical", ""},
                {"coordinates", matrix_json(m)},
                {"norm", n},
                {"checks", json::array()}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ncq: exact calculus for maps over finite-dimensional division "
        "algebras (complex, quaternion, efab:a/b)"};
    app.require_subcommand(1);

    std::string algebra = default_algebra();
    auto* algebra_opt =
        app.add_option("--algebra", algebra,
                       "algebra name: complex, quaternion, efab:a/b "
                       "(default: $NCQ_ALGEBRA or quaternion)");

    // derive
    auto* sc_derive = app.add_subcommand("derive", "Gateaux derivative of a map");
    std::string derive_expr;
    int derive_order = 1;
    bool derive_oracle = false;
    std::string derive_at, derive_dir;
    sc_derive->add_option("expr", derive_expr, "map expression in x")->required();
    sc_derive->add_option("--order", derive_order, "derivative order (default 1)");
    sc_derive->add_flag("--oracle", derive_oracle,
                        "numeric oracle mode (supports x^-1); needs --at/--dir");
    sc_derive->add_option("--at", derive_at, "evaluation point literal");
    sc_derive->add_option("--dir", derive_dir, "direction literal");

    // jacobian
    auto* sc_jac = app.add_subcommand(
        "jacobian", "coordinate matrix and standard components at a point");
    std::string jac_expr, jac_at;
    sc_jac->add_option("expr", jac_expr, "map expression in x")->required();
    sc_jac->add_option("--at", jac_at, "point as x=<literal>")->required();

    // taylor
    auto* sc_taylor = app.add_subcommand("taylor", "Taylor expansion around a point");
    std::string taylor_expr, taylor_at = "0";
    int taylor_degree = -1;
    sc_taylor->add_option("expr", taylor_expr, "map expression in x")->required();
    sc_taylor->add_option("--at", taylor_at, "center literal")->required();
    sc_taylor->add_option("--degree", taylor_degree,
                          "number of terms - 1 (default: degree of the map)");

    // solve-ode
    auto* sc_ode = app.add_subcommand(
        "solve-ode", "solve dy = rhs(x, h) by the Taylor method");
    std::string ode_rhs, ode_x0 = "0", ode_y0 = "0";
    int ode_max = 16;
    sc_ode->add_option("--rhs", ode_rhs, "right-hand side in x and h")->required();
    sc_ode->add_option("--x0", ode_x0, "expansion point literal");
    sc_ode->add_option("--y0", ode_y0, "initial value literal");
    sc_ode->add_option("--max-order", ode_max, "derivative order cap (default 16)");

    // exp
    auto* sc_exp = app.add_subcommand("exp", "exponent partial series (doubles)");
    std::string exp_at;
    int exp_terms = 30;
    sc_exp->add_option("--at", exp_at, "argument literal")->required();
    sc_exp->add_option("--terms", exp_terms, "number of series terms (default 30)");

    // check-cr
    auto* sc_cr = app.add_subcommand(
        "check-cr", "Cauchy-Riemann check of a 2x2 coordinate matrix");
    std::string cr_matrix;
    sc_cr->add_option("--matrix", cr_matrix, "matrix 'a,b;c,d' of rationals")
        ->required();

    // verify-table
    auto* sc_table = app.add_subcommand(
        "verify-table", "closed-form derivative table vs the numeric oracle");
    int table_points = 100;
    uint64_t table_seed = 424242;
    sc_table->add_option("--points", table_points, "random points per entry");
    sc_table->add_option("--seed", table_seed, "RNG seed");

    // norm
    auto* sc_norm = app.add_subcommand("norm", "operator norm of a coordinate matrix");
    std::string norm_matrix;
    sc_norm->add_option("--coord-matrix", norm_matrix,
                        "matrix 'a,b;c,d' (2x2 complex or 4x4 quaternion)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_derive->parsed())
            return cmd_derive(algebra, derive_expr, derive_order, derive_oracle,
                              derive_at, derive_dir);
        if (sc_jac->parsed()) return cmd_jacobian(algebra, jac_expr, jac_at);
        if (sc_taylor->parsed())
            return cmd_taylor(algebra, taylor_expr, taylor_at, taylor_degree);
        if (sc_ode->parsed())
            return cmd_solve_ode(algebra, ode_rhs, ode_x0, ode_y0, ode_max);
        if (sc_exp->parsed()) return cmd_exp(algebra, exp_at, exp_terms);
        if (sc_cr->parsed()) return cmd_check_cr(cr_matrix);
        if (sc_table->parsed())
            return cmd_verify_table(algebra, table_points, table_seed);
        if (sc_norm->parsed()) {
            bool alg_explicit =
                algebra_opt->count() > 0 || std::getenv("NCQ_ALGEBRA") != nullptr;
            return cmd_norm(algebra, alg_explicit, norm_matrix);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TruncatedError& e) {
        std::cerr << "ode error: " << e.what() << "\n";
        return kExitOde;
    } catch (const NotRealizable& e) {
        std::cerr << "error: " << e.what() << " (residuals:";
        for (const auto& r : e.residuals) std::cerr << " " << r;
        std::cerr << ")\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitOk;
}
