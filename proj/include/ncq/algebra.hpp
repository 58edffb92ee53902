#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncq/rat_matrix.hpp"
#include "ncq/rational.hpp"

namespace ncq {

class AlgebraSpec;

// Element of a finite-dimensional algebra, stored as exact coordinates in
// the algebra's basis.  Elements do not carry their algebra; operations
// that need structural constants take the AlgebraSpec explicitly and
// check dimensions.
class Element {
  public:
    Element() = default;
    explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rational>& coords() const { return coords_; }
    Rational& operator[](int i) { return coords_[i]; }
    const Rational& operator[](int i) const { return coords_[i]; }

    bool operator==(const Element& o) const { return coords_ == o.coords_; }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return coords_ < o.coords_; }

    bool is_zero() const;

  private:
    std::vector<Rational> coords_;
};

// Immutable description of a finite-dimensional associative algebra with
// unit over the rationals: basis size, structural constants
// e_k e_l = sum_p B[k][l][p] e_p, index of the unit basis vector, and the
// optional extras available on the built-in presets (involution,
// diagonal norm form |x|^2 = sum_i s_i (x^i)^2).
//
// Construction validates associativity and the two-sided unit law on all
// basis triples/pairs and throws on violation, so every AlgebraSpec in
// flight is a genuine associative unital algebra.
class AlgebraSpec {
  public:
    AlgebraSpec(std::string name, int dim, std::vector<Rational> b_dense,
                int unit_index,
                std::optional<std::vector<Rational>> norm_signature,
                bool has_involution, bool is_division);

    // Presets. "efab:a/b" is the four-dimensional algebra with
    // i^2 = a, j^2 = b, ij = -ji = k; it is treated as a division algebra
    // exactly when a < 0 and b < 0.
    static AlgebraSpec complex_algebra();
    static AlgebraSpec quaternions();
    static AlgebraSpec generalized_quaternions(const Rational& a, const Rational& b);
    // Accepts "complex", "quaternion", "efab:a/b" (a, b rationals).
    static AlgebraSpec from_name(std::string_view name);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    int unit_index() const { return unit_index_; }
    bool has_involution() const { return has_involution_; }
    bool is_division() const { return is_division_; }
    const std::optional<std::vector<Rational>>& norm_signature() const {
        return norm_signature_;
    }

    // Structural constant B[k][l][p]: coefficient of e_p in e_k * e_l.
    const Rational& b(int k, int l, int p) const {
        return b_[(static_cast<size_t>(k) * dim_ + l) * dim_ + p];
    }
    // Nonzero (p, coeff) entries of the product e_k * e_l.
    const std::vector<std::pair<int, Rational>>& product_row(int k, int l) const {
        return prod_[static_cast<size_t>(k) * dim_ + l];
    }
    // Same table in doubles, for the numeric-oracle paths.
    const std::vector<double>& b_double() const { return b_double_; }

    // Returns the algebra expressed in the new basis e'_i = sum_j A[i][j] e_j.
    // A must be invertible and must keep the identity a basis vector
    // (otherwise UnsupportedOperation).  Associativity is re-verified by
    // construction.  Involution and norm signature are dropped unless A is
    // the identity: they are defined relative to the preset basis.
    AlgebraSpec change_basis(const RatMatrix& a_mat) const;

    Element zero() const;
    Element unit() const;
    Element basis_element(int k) const;
    Element from_rational(const Rational& r) const;

  private:
    std::string name_;
    int dim_ = 0;
    std::vector<Rational> b_;  // dense dim^3, index ((k*dim)+l)*dim+p
    int unit_index_ = 0;
    std::optional<std::vector<Rational>> norm_signature_;
    bool has_involution_ = false;
    bool is_division_ = false;
    std::vector<std::vector<std::pair<int, Rational>>> prod_;
    std::vector<double> b_double_;

    void validate() const;
};

// --- Element arithmetic -------------------------------------------------

Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element neg(const Element& x);
Element scale(const Rational& c, const Element& x);
Element mul(const Element& x, const Element& y, const AlgebraSpec& alg);

// Involution x -> conj(x) (negates the non-unit coordinates).  Presets only.
Element conj(const Element& x, const AlgebraSpec& alg);

// |x|^2 = sum_i s_i (x^i)^2; equals the unit coordinate of x * conj(x).
// Requires a norm signature.
Rational abs_sq(const Element& x, const AlgebraSpec& alg);

// Two-sided inverse conj(x) / |x|^2.  Requires a division preset;
// DivisionByZero at x = 0.
Element inverse(const Element& x, const AlgebraSpec& alg);

// Euclidean-style magnitude in doubles (sqrt of abs_sq); numeric paths only.
double abs_double(const Element& x, const AlgebraSpec& alg);

// Renders "1+2i-3j+1/2k" style text (basis letters for dim 4: i, j, k;
// dim 2: i).  Zero prints "0".
std::string to_string(const Element& x);

}  // namespace ncq
