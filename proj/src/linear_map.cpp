#include "ncq/linear_map.hpp"

#include <cmath>

#include "ncq/errors.hpp"

namespace ncq {

namespace {

void check_square(const RatMatrix& m, const AlgebraSpec& alg, const char* what) {
    if (m.rows() != alg.dim() || m.cols() != alg.dim())
        throw DimensionError(std::string(what) + ": matrix shape does not match algebra");
}

}  // namespace

Element apply(const PairRep& f, const Element& x, const AlgebraSpec& alg) {
    Element acc = alg.zero();
    for (const auto& [l, r] : f.pairs) acc = add(acc, mul(mul(l, x, alg), r, alg));
    return acc;
}

Element apply(const StdComponents& f, const Element& x, const AlgebraSpec& alg) {
    check_square(f.m, alg, "apply(std)");
    Element acc = alg.zero();
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            const Rational& c = f.m.at(i, j);
            if (c.is_zero()) continue;
            Element term =
                mul(mul(alg.basis_element(i), x, alg), alg.basis_element(j), alg);
            acc = add(acc, scale(c, term));
        }
    return acc;
}

Element apply(const CoordMatrix& f, const Element& x) {
    if (f.m.rows() != x.dim())
        throw DimensionError("apply(coord): matrix/vector shape mismatch");
    std::vector<Rational> y(f.m.cols());
    for (int j = 0; j < f.m.cols(); ++j)
        for (int i = 0; i < f.m.rows(); ++i)
            if (!x[i].is_zero()) y[j] += x[i] * f.m.at(i, j);
    return Element(std::move(y));
}

Element apply(const GeneratedMap& f, const Element& x, const AlgebraSpec& alg) {
    return apply(f.components, apply(f.generator, x), alg);
}

StdComponents pair_to_std(const PairRep& f, const AlgebraSpec& alg) {
    StdComponents s;
    s.m = RatMatrix(alg.dim(), alg.dim());
    for (const auto& [l, r] : f.pairs) {
        if (l.dim() != alg.dim() || r.dim() != alg.dim())
            throw DimensionError("pair_to_std: element dimension mismatch");
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = 0; j < alg.dim(); ++j) s.m.at(i, j) += l[i] * r[j];
    }
    return s;
}

CoordMatrix std_to_coord(const StdComponents& f, const AlgebraSpec& alg) {
    check_square(f.m, alg, "std_to_coord");
    int d = alg.dim();
    CoordMatrix out;
    out.m = RatMatrix(d, d);
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < d; ++r) {
            const Rational& fkr = f.m.at(k, r);
            if (fkr.is_zero()) continue;
            for (int i = 0; i < d; ++i)
                for (const auto& [p, b1] : alg.product_row(k, i))
                    for (const auto& [j, b2] : alg.product_row(p, r))
                        out.m.at(i, j) += fkr * b1 * b2;
        }
    return out;
}

namespace {

// Exact generic inversion of std_to_coord: solve the dim^2 x dim^2 linear
// system, zeroing free unknowns (fixed elimination order), collecting the
// residuals of inconsistent rows.
StdComponents coord_to_std_generic(const CoordMatrix& m, const AlgebraSpec& alg) {
    int d = alg.dim();
    int n = d * d;
    RatMatrix a(n, n + 1);  // augmented
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int e = i * d + j;
            a.at(e, n) = m.m.at(i, j);
        }
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < d; ++r) {
            int u = k * d + r;
            for (int i = 0; i < d; ++i)
                for (const auto& [p, b1] : alg.product_row(k, i))
                    for (const auto& [j, b2] : alg.product_row(p, r))
                        a.at(i * d + j, u) += b1 * b2;
        }
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r2 = row; r2 < n; ++r2)
            if (!a.at(r2, col).is_zero()) {
                pr = r2;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c2 = 0; c2 <= n; ++c2) std::swap(a.at(pr, c2), a.at(row, c2));
        Rational p = a.at(row, col);
        for (int c2 = 0; c2 <= n; ++c2) a.at(row, c2) /= p;
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == row) continue;
            Rational f = a.at(r2, col);
            if (f.is_zero()) continue;
            for (int c2 = 0; c2 <= n; ++c2) a.at(r2, c2) -= f * a.at(row, c2);
        }
        pivot_col[row] = col;
        ++row;
    }
    std::vector<std::string> residuals;
    for (int r2 = row; r2 < n; ++r2)
        if (!a.at(r2, n).is_zero()) residuals.push_back(to_string(a.at(r2, n)));
    if (!residuals.empty())
        throw NotRealizable("coordinate matrix is not realizable over " + alg.name(),
                            std::move(residuals));
    StdComponents s;
    s.m = RatMatrix(d, d);
    for (int r2 = 0; r2 < row; ++r2) {
        int col = pivot_col[r2];
        s.m.at(col / d, col % d) = a.at(r2, n);
    }
    return s;
}

StdComponents coord_to_std_quaternion(const CoordMatrix& cm) {
    const RatMatrix& m = cm.m;
    StdComponents s;
    s.m = RatMatrix(4, 4);
    auto q = [](const Rational& v) { return v / 4; };
    // diagonal group
    s.m.at(0, 0) = q(m.at(0, 0) + m.at(1, 1) + m.at(2, 2) + m.at(3, 3));
    s.m.at(1, 1) = q(-m.at(0, 0) - m.at(1, 1) + m.at(2, 2) + m.at(3, 3));
    s.m.at(2, 2) = q(-m.at(0, 0) + m.at(1, 1) - m.at(2, 2) + m.at(3, 3));
    s.m.at(3, 3) = q(-m.at(0, 0) + m.at(1, 1) + m.at(2, 2) - m.at(3, 3));
    // (0,1)/(1,0)/(3,2)/(2,3) group
    s.m.at(1, 0) = q(-m.at(1, 0) + m.at(0, 1) - m.at(3, 2) + m.at(2, 3));
    s.m.at(0, 1) = q(-m.at(1, 0) + m.at(0, 1) + m.at(3, 2) - m.at(2, 3));
    s.m.at(3, 2) = q(-m.at(1, 0) - m.at(0, 1) - m.at(3, 2) - m.at(2, 3));
    s.m.at(2, 3) = q(m.at(1, 0) + m.at(0, 1) - m.at(3, 2) - m.at(2, 3));
    // (0,2)/(2,0)/(1,3)/(3,1) group
    s.m.at(2, 0) = q(-m.at(2, 0) + m.at(3, 1) + m.at(0, 2) - m.at(1, 3));
    s.m.at(3, 1) = q(m.at(2, 0) - m.at(3, 1) + m.at(0, 2) - m.at(1, 3));
    s.m.at(0, 2) = q(-m.at(2, 0) - m.at(3, 1) + m.at(0, 2) + m.at(1, 3));
    s.m.at(1, 3) = q(-m.at(2, 0) - m.at(3, 1) - m.at(0, 2) - m.at(1, 3));
    // (0,3)/(3,0)/(1,2)/(2,1) group
    s.m.at(3, 0) = q(-m.at(3, 0) - m.at(2, 1) + m.at(1, 2) + m.at(0, 3));
    s.m.at(2, 1) = q(-m.at(3, 0) - m.at(2, 1) - m.at(1, 2) - m.at(0, 3));
    s.m.at(1, 2) = q(m.at(3, 0) - m.at(2, 1) - m.at(1, 2) + m.at(0, 3));
    s.m.at(0, 3) = q(-m.at(3, 0) + m.at(2, 1) - m.at(1, 2) + m.at(0, 3));
    return s;
}

}  // namespace

StdComponents coord_to_std(const CoordMatrix& m, const AlgebraSpec& alg) {
    check_square(m.m, alg, "coord_to_std");
    if (alg.name() == "complex") {
        CrReport cr = cauchy_riemann_check(m);
        if (!cr.satisfied) {
            std::vector<std::string> res;
            for (const auto& r : cr.residuals) res.push_back(to_string(r));
            throw NotRealizable(
                "coordinate matrix violates the Cauchy-Riemann identities",
                std::move(res));
        }
        // canonical preimage: f^{10} = f^{11} = 0
        StdComponents s;
        s.m = RatMatrix(2, 2);
        s.m.at(0, 0) = m.m.at(0, 0);
        s.m.at(0, 1) = m.m.at(0, 1);
        return s;
    }
    if (alg.name() == "quaternion") return coord_to_std_quaternion(m);
    return coord_to_std_generic(m, alg);
}

PairRep compose(const PairRep& g, const PairRep& f, const AlgebraSpec& alg) {
    PairRep h;
    for (const auto& [gl, gr] : g.pairs)
        for (const auto& [fl, fr] : f.pairs)
            h.pairs.emplace_back(mul(gl, fl, alg), mul(fr, gr, alg));
    return h;
}

StdComponents compose_std(const StdComponents& g, const StdComponents& f,
                          const AlgebraSpec& alg) {
    check_square(g.m, alg, "compose_std");
    check_square(f.m, alg, "compose_std");
    int d = alg.dim();
    StdComponents h;
    h.m = RatMatrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rational& gij = g.m.at(i, j);
            if (gij.is_zero()) continue;
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const Rational& fkl = f.m.at(k, l);
                    if (fkl.is_zero()) continue;
                    Rational c = gij * fkl;
                    for (const auto& [p, b1] : alg.product_row(i, k))
                        for (const auto& [r, b2] : alg.product_row(l, j))
                            h.m.at(p, r) += c * b1 * b2;
                }
        }
    return h;
}

CoordMatrix transform_coords(const CoordMatrix& m, const RatMatrix& a_mat) {
    if (a_mat.rows() != m.m.rows() || a_mat.cols() != m.m.cols())
        throw DimensionError("transform_coords: shape mismatch");
    CoordMatrix out;
    out.m = a_mat * m.m * a_mat.inverse();
    return out;
}

CoordMatrix generated_coords(const GeneratedMap& f, const AlgebraSpec& alg) {
    check_square(f.generator.m, alg, "generated_coords");
    CoordMatrix d = std_to_coord(f.components, alg);
    CoordMatrix out;
    out.m = f.generator.m * d.m;
    return out;
}

CrReport cauchy_riemann_check(const CoordMatrix& m) {
    if (m.m.rows() != 2 || m.m.cols() != 2)
        throw DimensionError("cauchy_riemann_check needs a 2x2 matrix");
    CrReport rep;
    rep.residuals = {m.m.at(0, 0) - m.m.at(1, 1), m.m.at(0, 1) + m.m.at(1, 0)};
    rep.satisfied = rep.residuals[0].is_zero() && rep.residuals[1].is_zero();
    return rep;
}

double map_norm(const CoordMatrix& m, const AlgebraSpec& alg) {
    check_square(m.m, alg, "map_norm");
    const auto& sig = alg.norm_signature();
    if (!sig)
        throw UnsupportedOperation("map_norm requires a Euclidean norm signature");
    for (const auto& s : *sig)
        if (s != 1)
            throw UnsupportedOperation(
                "map_norm requires the all-ones norm signature");
    int d = m.m.rows();
    std::vector<double> md(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) md[static_cast<size_t>(i) * d + j] = to_double(m.m.at(i, j));
    // s = M M^T (same top singular value as M); power iteration from each
    // basis vector and the all-ones vector, keep the largest Rayleigh limit.
    auto mat_vec = [&](const std::vector<double>& v) {
        std::vector<double> mv(d, 0.0), smv(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) mv[i] += md[static_cast<size_t>(i) * d + j] * v[j];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) smv[j] += md[static_cast<size_t>(i) * d + j] * mv[i];
        // smv = M^T (M v); spectrum of M^T M
        return smv;
    };
    auto norm2 = [](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    };
    double best = 0.0;
    for (int start = 0; start <= d; ++start) {
        std::vector<double> v(d, start == d ? 1.0 : 0.0);
        if (start < d) v[start] = 1.0;
        double nv = norm2(v);
        for (double& x : v) x /= nv;
        double lambda = 0.0;
        for (int it = 0; it < 20000; ++it) {
            std::vector<double> w = mat_vec(v);
            double nw = norm2(w);
            if (nw < 1e-300) {
                lambda = 0.0;
                break;
            }
            double next = 0.0;
            for (int i = 0; i < d; ++i) next += v[i] * w[i];
            for (int i = 0; i < d; ++i) v[i] = w[i] / nw;
            if (it > 0 && std::abs(next - lambda) <= 1e-9 * std::max(std::abs(next), 1e-30)) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        best = std::max(best, lambda);
    }
    return std::sqrt(std::max(best, 0.0));
}

std::vector<std::vector<std::string>> matrix_to_strings(const RatMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(to_string(m.at(i, j)));
    }
    return rows;
}

RatMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = parse_rational(rows[i][j]);
    }
    return m;
}

}  // namespace ncq
