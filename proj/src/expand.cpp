// Coordinate expansion of noncommutative polynomials: the parallel kernel
// (expand) and the straightforward dense serial reference (expand_serial).
// Both produce the identical exact CoordinateForm; tests compare them.

#include <cstddef>
#include <vector>

#include "ncq/errors.hpp"
#include "ncq/nc_poly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncq {

namespace {

void check_word_dims(const NcPoly& p, const AlgebraSpec& alg) {
    for (const auto& w : p.words) {
        if (w.constants.size() != w.vars.size() + 1)
            throw DimensionError("malformed word: constant/variable count mismatch");
        for (const auto& c : w.constants)
            if (c.dim() != alg.dim())
                throw DimensionError("word constant dimension mismatch");
    }
}

void add_term(CommPoly& poly, const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = poly.find(mono);
    if (it == poly.end()) {
        poly.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) poly.erase(it);
    }
}

Monomial mono_times_indet(const Monomial& mono, int pid) {
    Monomial m = mono;
    auto it = std::lower_bound(
        m.begin(), m.end(), pid,
        [](const std::pair<int, int>& term, int id) { return term.first < id; });
    if (it != m.end() && it->first == pid)
        ++it->second;
    else
        m.insert(it, {pid, 1});
    return m;
}

// Expands one word over the sparse product table.
void expand_word_sparse(const NcWord& w, const AlgebraSpec& alg,
                        std::vector<CommPoly>& out) {
    int dim = alg.dim();
    std::vector<CommPoly> state(dim);
    for (int p = 0; p < dim; ++p)
        if (!w.constants.front()[p].is_zero())
            state[p].emplace(Monomial{}, w.constants.front()[p]);
    std::vector<CommPoly> next(dim);
    for (size_t t = 0; t < w.vars.size(); ++t) {
        // multiply by the variable
        for (auto& comp : next) comp.clear();
        for (int p = 0; p < dim; ++p) {
            if (state[p].empty()) continue;
            for (int l = 0; l < dim; ++l) {
                int pid = pack_indet(w.vars[t], l);
                for (const auto& [q, coeff] : alg.product_row(p, l))
                    for (const auto& [mono, r] : state[p])
                        add_term(next[q], mono_times_indet(mono, pid), r * coeff);
            }
        }
        state.swap(next);
        // multiply by the interior/trailing constant
        const Element& c = w.constants[t + 1];
        for (auto& comp : next) comp.clear();
        for (int q = 0; q < dim; ++q) {
            if (state[q].empty()) continue;
            for (int r = 0; r < dim; ++r) {
                if (c[r].is_zero()) continue;
                for (const auto& [p2, coeff] : alg.product_row(q, r))
                    for (const auto& [mono, rat] : state[q])
                        add_term(next[p2], mono, rat * c[r] * coeff);
            }
        }
        state.swap(next);
    }
    for (int j = 0; j < dim; ++j)
        for (const auto& [mono, coeff] : state[j]) add_term(out[j], mono, coeff);
}

}  // namespace

CoordinateForm expand(const NcPoly& p, const AlgebraSpec& alg) {
    check_word_dims(p, alg);
    int dim = alg.dim();
    CoordinateForm out;
    out.dim = dim;
    out.components.resize(dim);
    long long n = static_cast<long long>(p.words.size());
#ifdef _OPENMP
#pragma omp parallel if (n > 8)
    {
        std::vector<CommPoly> local(dim);
#pragma omp for schedule(dynamic) nowait
        for (long long i = 0; i < n; ++i)
            expand_word_sparse(p.words[static_cast<size_t>(i)], alg, local);
#pragma omp critical(ncq_expand_merge)
        for (int j = 0; j < dim; ++j)
            for (const auto& [mono, coeff] : local[j])
                add_term(out.components[j], mono, coeff);
    }
#else
    for (long long i = 0; i < n; ++i)
        expand_word_sparse(p.words[static_cast<size_t>(i)], alg, out.components);
#endif
    return out;
}

CoordinateForm expand_serial(const NcPoly& p, const AlgebraSpec& alg) {
    check_word_dims(p, alg);
    int dim = alg.dim();
    CoordinateForm out;
    out.dim = dim;
    out.components.resize(dim);
    for (const auto& w : p.words) {
        // state[p] = commutative polynomial giving coordinate p of the
        // partial product; straightforward dense contraction against B.
        std::vector<CommPoly> state(dim);
        for (int p2 = 0; p2 < dim; ++p2)
            if (!w.constants.front()[p2].is_zero())
                state[p2].emplace(Monomial{}, w.constants.front()[p2]);
        for (size_t t = 0; t < w.vars.size(); ++t) {
            std::vector<CommPoly> after_var(dim);
            for (int p2 = 0; p2 < dim; ++p2)
                for (int l = 0; l < dim; ++l) {
                    int pid = pack_indet(w.vars[t], l);
                    for (int q = 0; q < dim; ++q) {
                        const Rational& coeff = alg.b(p2, l, q);
                        if (coeff.is_zero()) continue;
                        for (const auto& [mono, r] : state[p2])
                            add_term(after_var[q], mono_times_indet(mono, pid),
                                     r * coeff);
                    }
                }
            state.swap(after_var);
            const Element& c = w.constants[t + 1];
            std::vector<CommPoly> after_const(dim);
            for (int q = 0; q < dim; ++q)
                for (int r2 = 0; r2 < dim; ++r2) {
                    if (c[r2].is_zero()) continue;
                    for (int p3 = 0; p3 < dim; ++p3) {
                        const Rational& coeff = alg.b(q, r2, p3);
                        if (coeff.is_zero()) continue;
                        for (const auto& [mono, rat] : state[q])
                            add_term(after_const[p3], mono, rat * c[r2] * coeff);
                    }
                }
            state.swap(after_const);
        }
        for (int j = 0; j < dim; ++j)
            for (const auto& [mono, coeff] : state[j]) add_term(out.components[j], mono, coeff);
    }
    return out;
}

}  // namespace ncq
