#include "ncq/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncq/errors.hpp"

namespace ncq {

bool Element::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void check_dim(const Element& x, const AlgebraSpec& alg, const char* what) {
    if (x.dim() != alg.dim())
        throw DimensionError(std::string(what) + ": element has dimension " +
                             std::to_string(x.dim()) + ", algebra " +
                             std::to_string(alg.dim()));
}

size_t b_index(int dim, int k, int l, int p) {
    return (static_cast<size_t>(k) * dim + l) * dim + p;
}

std::vector<Rational> dense_b_for_dim4(const Rational& a, const Rational& b) {
    // e0 = 1, e1 = i, e2 = j, e3 = k with i^2 = a, j^2 = b, ij = -ji = k,
    // ik = aj, ki = -aj, jk = -bi, kj = bi, k^2 = -ab.
    int d = 4;
    std::vector<Rational> t(d * d * d);
    auto set = [&](int k, int l, int p, const Rational& v) {
        t[b_index(d, k, l, p)] = v;
    };
    for (int k = 0; k < d; ++k) {
        set(0, k, k, 1);
        if (k != 0) set(k, 0, k, 1);
    }
    set(1, 1, 0, a);
    set(1, 2, 3, 1);
    set(1, 3, 2, a);
    set(2, 1, 3, -1);
    set(2, 2, 0, b);
    set(2, 3, 1, -b);
    set(3, 1, 2, -a);
    set(3, 2, 1, b);
    set(3, 3, 0, -a * b);
    return t;
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::string name, int dim, std::vector<Rational> b_dense,
                         int unit_index,
                         std::optional<std::vector<Rational>> norm_signature,
                         bool has_involution, bool is_division)
    : name_(std::move(name)),
      dim_(dim),
      b_(std::move(b_dense)),
      unit_index_(unit_index),
      norm_signature_(std::move(norm_signature)),
      has_involution_(has_involution),
      is_division_(is_division) {
    if (dim_ <= 0 || b_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
        throw DimensionError("structural constant table has wrong size");
    if (unit_index_ < 0 || unit_index_ >= dim_)
        throw DimensionError("unit index out of range");
    if (norm_signature_ && norm_signature_->size() != static_cast<size_t>(dim_))
        throw DimensionError("norm signature has wrong size");
    validate();
    prod_.resize(static_cast<size_t>(dim_) * dim_);
    for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
            auto& row = prod_[static_cast<size_t>(k) * dim_ + l];
            for (int p = 0; p < dim_; ++p)
                if (!b(k, l, p).is_zero()) row.emplace_back(p, b(k, l, p));
        }
    b_double_.resize(b_.size());
    for (size_t i = 0; i < b_.size(); ++i) b_double_[i] = to_double(b_[i]);
}

void AlgebraSpec::validate() const {
    // Two-sided unit law on every basis vector.
    for (int k = 0; k < dim_; ++k)
        for (int p = 0; p < dim_; ++p) {
            Rational want = (p == k) ? 1 : 0;
            if (b(unit_index_, k, p) != want || b(k, unit_index_, p) != want)
                throw UnsupportedOperation(
                    "structural constants violate the unit law at basis index " +
                    std::to_string(k));
        }
    // Associativity on every basis triple.
    for (int x = 0; x < dim_; ++x)
        for (int y = 0; y < dim_; ++y)
            for (int z = 0; z < dim_; ++z)
                for (int q = 0; q < dim_; ++q) {
                    Rational lhs = 0, rhs = 0;
                    for (int p = 0; p < dim_; ++p) {
                        lhs += b(x, y, p) * b(p, z, q);
                        rhs += b(y, z, p) * b(x, p, q);
                    }
                    if (lhs != rhs)
                        throw UnsupportedOperation(
                            "structural constants are not associative at (" +
                            std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(z) + ")");
                }
}

AlgebraSpec AlgebraSpec::complex_algebra() {
    int d = 2;
    std::vector<Rational> t(d * d * d);
    t[b_index(d, 0, 0, 0)] = 1;
    t[b_index(d, 0, 1, 1)] = 1;
    t[b_index(d, 1, 0, 1)] = 1;
    t[b_index(d, 1, 1, 0)] = -1;
    return AlgebraSpec("complex", d, std::move(t), 0,
                       std::vector<Rational>{1, 1}, true, true);
}

AlgebraSpec AlgebraSpec::quaternions() {
    return AlgebraSpec("quaternion", 4, dense_b_for_dim4(-1, -1), 0,
                       std::vector<Rational>{1, 1, 1, 1}, true, true);
}

AlgebraSpec AlgebraSpec::generalized_quaternions(const Rational& a,
                                                 const Rational& b) {
    // x conj(x) = (x0)^2 - a (x1)^2 - b (x2)^2 + ab (x3)^2.
    std::vector<Rational> sig{1, -a, -b, a * b};
    bool division = a < 0 && b < 0;
    return AlgebraSpec("efab:" + to_string(a) + "/" + to_string(b), 4,
                       dense_b_for_dim4(a, b), 0, std::move(sig), true, division);
}

AlgebraSpec AlgebraSpec::from_name(std::string_view name) {
    if (name == "complex") return complex_algebra();
    if (name == "quaternion") return quaternions();
    constexpr std::string_view prefix = "efab:";
    if (name.substr(0, prefix.size()) == prefix) {
        std::string body(name.substr(prefix.size()));
        // Two rationals joined by '/'; a rational is integer[/positive-integer],
        // so split on '/' and resolve which slashes are fraction bars.
        std::vector<std::string> seg;
        size_t pos = 0;
        while (true) {
            size_t slash = body.find('/', pos);
            seg.push_back(body.substr(pos, slash - pos));
            if (slash == std::string::npos) break;
            pos = slash + 1;
        }
        auto positive_int = [](const std::string& s) {
            return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos &&
                   s != "0";
        };
        try {
            if (seg.size() == 2)
                return generalized_quaternions(parse_rational(seg[0]),
                                               parse_rational(seg[1]));
            if (seg.size() == 3) {
                if (positive_int(seg[1]))  // a = s0/s1, b = s2
                    return generalized_quaternions(
                        parse_rational(seg[0] + "/" + seg[1]), parse_rational(seg[2]));
                return generalized_quaternions(
                    parse_rational(seg[0]), parse_rational(seg[1] + "/" + seg[2]));
            }
            if (seg.size() == 4)
                return generalized_quaternions(
                    parse_rational(seg[0] + "/" + seg[1]),
                    parse_rational(seg[2] + "/" + seg[3]));
        } catch (const SemanticError&) {
            // fall through to the uniform error below
        }
        throw SemanticError("malformed algebra name '" + std::string(name) +
                            "': expected efab:a/b with rational a, b");
    }
    throw SemanticError("unknown algebra '" + std::string(name) +
                        "' (use complex, quaternion, or efab:a/b)");
}

AlgebraSpec AlgebraSpec::change_basis(const RatMatrix& a_mat) const {
    if (a_mat.rows() != dim_ || a_mat.cols() != dim_)
        throw DimensionError("basis-change matrix has wrong shape");
    if (a_mat == RatMatrix::identity(dim_)) return *this;
    RatMatrix inv = a_mat.inverse();  // throws SingularTransform if singular
    std::vector<Rational> nb(b_.size());
    for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
            // (e'_k e'_l) in old coordinates, then back to the new basis.
            std::vector<Rational> old_coords(dim_);
            for (int a = 0; a < dim_; ++a) {
                if (a_mat.at(k, a).is_zero()) continue;
                for (int bidx = 0; bidx < dim_; ++bidx) {
                    if (a_mat.at(l, bidx).is_zero()) continue;
                    Rational f = a_mat.at(k, a) * a_mat.at(l, bidx);
                    for (const auto& [p, coeff] : product_row(a, bidx))
                        old_coords[p] += f * coeff;
                }
            }
            for (int q = 0; q < dim_; ++q) {
                Rational v = 0;
                for (int p = 0; p < dim_; ++p)
                    if (!old_coords[p].is_zero()) v += old_coords[p] * inv.at(p, q);
                nb[b_index(dim_, k, l, q)] = v;
            }
        }
    // The identity expressed in the new basis must again be a basis vector.
    int new_unit = -1;
    for (int i = 0; i < dim_; ++i) {
        bool match = true;
        for (int j = 0; j < dim_; ++j) {
            Rational want = (j == i) ? 1 : 0;
            if (inv.at(unit_index_, j) != want) {
                match = false;
                break;
            }
        }
        if (match) {
            new_unit = i;
            break;
        }
    }
    if (new_unit < 0)
        throw UnsupportedOperation(
            "basis change does not keep the identity a basis vector");
    return AlgebraSpec(name_ + "@basis", dim_, std::move(nb), new_unit, std::nullopt,
                       false, is_division_);
}

Element AlgebraSpec::zero() const {
    return Element(std::vector<Rational>(dim_));
}

Element AlgebraSpec::unit() const { return basis_element(unit_index_); }

Element AlgebraSpec::basis_element(int k) const {
    if (k < 0 || k >= dim_) throw DimensionError("basis index out of range");
    std::vector<Rational> c(dim_);
    c[k] = 1;
    return Element(std::move(c));
}

Element AlgebraSpec::from_rational(const Rational& r) const {
    std::vector<Rational> c(dim_);
    c[unit_index_] = r;
    return Element(std::move(c));
}

Element add(const Element& x, const Element& y) {
    if (x.dim() != y.dim()) throw DimensionError("element sum dimension mismatch");
    std::vector<Rational> c(x.coords());
    for (int i = 0; i < y.dim(); ++i) c[i] += y[i];
    return Element(std::move(c));
}

Element sub(const Element& x, const Element& y) {
    if (x.dim() != y.dim())
        throw DimensionError("element difference dimension mismatch");
    std::vector<Rational> c(x.coords());
    for (int i = 0; i < y.dim(); ++i) c[i] -= y[i];
    return Element(std::move(c));
}

Element neg(const Element& x) {
    std::vector<Rational> c(x.coords());
    for (auto& v : c) v = -v;
    return Element(std::move(c));
}

Element scale(const Rational& s, const Element& x) {
    std::vector<Rational> c(x.coords());
    for (auto& v : c) v *= s;
    return Element(std::move(c));
}

Element mul(const Element& x, const Element& y, const AlgebraSpec& alg) {
    check_dim(x, alg, "mul");
    check_dim(y, alg, "mul");
    std::vector<Rational> c(alg.dim());
    for (int k = 0; k < alg.dim(); ++k) {
        if (x[k].is_zero()) continue;
        for (int l = 0; l < alg.dim(); ++l) {
            if (y[l].is_zero()) continue;
            Rational f = x[k] * y[l];
            for (const auto& [p, coeff] : alg.product_row(k, l)) c[p] += f * coeff;
        }
    }
    return Element(std::move(c));
}

Element conj(const Element& x, const AlgebraSpec& alg) {
    check_dim(x, alg, "conj");
    if (!alg.has_involution())
        throw UnsupportedOperation("algebra '" + alg.name() +
                                   "' exposes no involution");
    std::vector<Rational> c(x.coords());
    for (int i = 0; i < alg.dim(); ++i)
        if (i != alg.unit_index()) c[i] = -c[i];
    return Element(std::move(c));
}

Rational abs_sq(const Element& x, const AlgebraSpec& alg) {
    check_dim(x, alg, "abs_sq");
    if (!alg.norm_signature())
        throw UnsupportedOperation("algebra '" + alg.name() + "' has no norm form");
    const auto& s = *alg.norm_signature();
    Rational r = 0;
    for (int i = 0; i < alg.dim(); ++i) r += s[i] * x[i] * x[i];
    return r;
}

Element inverse(const Element& x, const AlgebraSpec& alg) {
    check_dim(x, alg, "inverse");
    if (!alg.is_division() || !alg.has_involution())
        throw UnsupportedOperation("algebra '" + alg.name() +
                                   "' is not a division preset");
    if (x.is_zero()) throw DivisionByZero("inverse of zero");
    Rational n = abs_sq(x, alg);
    if (n.is_zero()) throw DivisionByZero("inverse of a norm-zero element");
    return scale(Rational(1) / n, conj(x, alg));
}

double abs_double(const Element& x, const AlgebraSpec& alg) {
    return std::sqrt(to_double(abs_sq(x, alg)));
}

std::string to_string(const Element& x) {
    static const char* letters4[] = {"", "i", "j", "k"};
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < x.dim(); ++i) {
        const Rational& c = x[i];
        if (c.is_zero()) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? '-' : '+');
        }
        std::string letter;
        if (i != 0) {
            if (x.dim() == 2 && i == 1)
                letter = "i";
            else if (x.dim() == 4)
                letter = letters4[i];
            else
                letter = "e" + std::to_string(i);
        }
        if (letter.empty())
            out << to_string(mag);
        else if (mag == 1)
            out << letter;
        else
            out << to_string(mag) << letter;
    }
    if (first) return "0";
    return out.str();
}

}  // namespace ncq
