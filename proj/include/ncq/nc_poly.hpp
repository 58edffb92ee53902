#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncq/algebra.hpp"

namespace ncq {

// Variable identifiers for noncommutative polynomials.
//   var_x()      the map argument x
//   var_h(k)     increment variables h1..h32 (k is 1-based)
//   var_y()      the dependent variable of the exponent equation
// Encoded as ints: x = 0, h_k = k, y = -1.
constexpr int kVarX = 0;
constexpr int kVarY = -1;
constexpr int kMaxH = 32;
inline int var_x() { return kVarX; }
inline int var_y() { return kVarY; }
int var_h(int k);  // OrderTooHigh unless 1 <= k <= 32
std::string var_name(int v);

// One word c_0 * v_1 * c_1 * v_2 * ... * v_m * c_m: interleaved constants
// (elements of the algebra) and variables.  constants.size() == vars.size()+1.
struct NcWord {
    std::vector<Element> constants;
    std::vector<int> vars;

    bool operator==(const NcWord& o) const {
        return vars == o.vars && constants == o.constants;
    }
};

// Formal finite sum of words.  Words are kept as written: addition and
// multiplication never merge or reorder terms by themselves; use
// normalized() for the canonical representative and semantic_eq() for
// semantic comparison.
struct NcPoly {
    std::vector<NcWord> words;

    static NcPoly zero() { return {}; }
    // The constant polynomial c (one variable-free word).
    static NcPoly constant(const Element& c);
    // The bare variable v with unit constants around it.
    static NcPoly variable(int v, const AlgebraSpec& alg);

    bool operator==(const NcPoly& o) const { return words == o.words; }
};

NcPoly add(const NcPoly& p, const NcPoly& q);
NcPoly sub(const NcPoly& p, const NcPoly& q);
NcPoly neg(const NcPoly& p);
// Word-by-word concatenation product; boundary constants multiply in alg.
NcPoly mul(const NcPoly& p, const NcPoly& q, const AlgebraSpec& alg);
NcPoly scale(const Rational& c, const NcPoly& p);
NcPoly pow(const NcPoly& p, int n, const AlgebraSpec& alg);  // n >= 0

// Canonical word-sum representative: words with a zero constant are
// dropped; each constant is scaled to make its first nonzero coordinate 1,
// with the collected central scalar folded into the leading constant;
// identical words merge by adding those scalars; zero merges are dropped;
// words are sorted.  Two polynomials with equal normalized() forms denote
// the same map (the converse may fail: use semantic_eq / expand).
NcPoly normalized(const NcPoly& p);

// Variable occurrence counts.
int degree_in(const NcPoly& p, int v);   // max occurrences of v in a word
int total_degree(const NcPoly& p);       // max word length
bool uses_var(const NcPoly& p, int v);
std::vector<int> variables_of(const NcPoly& p);  // sorted, distinct

// Substitutes the polynomial r for every occurrence of v (each word with
// k occurrences expands into (#r.words)^k words).  Result is normalized.
NcPoly substitute(const NcPoly& p, int v, const NcPoly& r, const AlgebraSpec& alg);
// Substitutes a constant for v (cheap special case; constants fold).
NcPoly substitute_const(const NcPoly& p, int v, const Element& c,
                        const AlgebraSpec& alg);
// Renames variable v to w (w may already occur; labels just merge).
NcPoly rename_var(const NcPoly& p, int v, int w);

// --- Coordinate expansion (the semantic normal form) ---------------------

// Commutative monomial in the coordinate indeterminates x^l, h_k^l, y^l:
// sorted (packed indeterminate, exponent) pairs, exponents > 0.
using Monomial = std::vector<std::pair<int, int>>;
int pack_indet(int var, int coord);
std::pair<int, int> unpack_indet(int packed);

// Total-degree-then-lexicographic order on monomials.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using CommPoly = std::map<Monomial, Rational, MonomialOrder>;

// f(x, h, ...) = sum_j components[j] e_j with each component a commutative
// polynomial over the coordinate indeterminates.  This is the canonical
// semantic form: two NcPolys denote the same map on the algebra (for all
// values of all variables) iff their expansions are equal.
struct CoordinateForm {
    int dim = 0;
    std::vector<CommPoly> components;

    bool operator==(const CoordinateForm& o) const {
        return dim == o.dim && components == o.components;
    }
    bool is_zero() const;
};

// Expansion via the structural constants.  expand() may parallelize over
// words (exact arithmetic, so the result is identical to the serial
// reference expand_serial(), which uses the straightforward dense
// contraction and is kept for cross-checking).
CoordinateForm expand(const NcPoly& p, const AlgebraSpec& alg);
CoordinateForm expand_serial(const NcPoly& p, const AlgebraSpec& alg);

CoordinateForm cf_sub(const CoordinateForm& a, const CoordinateForm& b);

// Semantic equality: fast path compares normalized() word sums, complete
// fallback compares expansions.
bool semantic_eq(const NcPoly& p, const NcPoly& q, const AlgebraSpec& alg);
bool is_semantically_zero(const NcPoly& p, const AlgebraSpec& alg);

// --- Evaluation ----------------------------------------------------------

// Bindings var -> value; UnboundVariable if a word uses an unbound var,
// DimensionError on dim mismatch.
using Bindings = std::vector<std::pair<int, Element>>;
Element eval(const NcPoly& p, const Bindings& bind, const AlgebraSpec& alg);

// --- Multilinear coordinates ---------------------------------------------

// Rank-(n+1) tensor of values f(e_{i1}, ..., e_{in}); entry (i1..in) is an
// Element, stored row-major over the n indices.
struct PolyTensor {
    int arity = 0;
    int dim = 0;
    std::vector<Element> entries;
    const Element& at(const std::vector<int>& idx) const;
};

// Requires p multilinear in h1..hn (no other variables, each h_i exactly
// once per word); NotMultilinear otherwise.  n is inferred from p.
PolyTensor polylinear_coords(const NcPoly& p, const AlgebraSpec& alg);

// True iff p is invariant (semantically) under every transposition of the
// listed variables.
bool is_symmetric(const NcPoly& p, const std::vector<int>& vars,
                  const AlgebraSpec& alg);

// --- Canonical text --------------------------------------------------------

// Canonical printed form of normalized(p): words joined with " + "/" - ",
// factors joined with "*", runs of a repeated variable collapsed to v^n,
// unit constants omitted, non-rational constants parenthesized like
// "(1+2i)".  parse(print(p)) reproduces normalized(p).
std::string to_string(const NcPoly& p);
// Prints words exactly as stored, without normalizing first.
std::string to_string_raw(const NcPoly& p);

}  // namespace ncq
