#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncq/nc_poly.hpp"

namespace ncq {

// Expression AST produced by the grammar
//   expr     := term { ("+" | "-") term }
//   term     := factor { "*" factor }
//   factor   := primary [ "^" signed-integer ]
//   primary  := "x" | "h" [digits] | "1" | "i" | "j" | "k" | rational
//             | "(" expr ")" | "conj" "(" expr ")"
//   rational := integer [ "/" positive-integer ]
// plus implicit multiplication between a rational literal and an
// immediately following basis letter ("2i", "1/2k"), which the canonical
// printer emits inside constants.
struct Expr {
    enum class Kind { Sum, Prod, Pow, Var, RationalLit, BasisLit, Conj };
    Kind kind;
    // Sum: children + signs; Prod: children; Pow: child + exponent;
    // Var: var id (x / h_k); RationalLit: value; BasisLit: basis index.
    std::vector<std::unique_ptr<Expr>> children;
    std::vector<int> signs;  // +1 / -1 per Sum child
    int exponent = 0;
    int var = 0;
    Rational value;
    int basis = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

struct ParseOptions {
    // Negative exponents are grammatical only on x and only when the
    // caller evaluates through the numeric/closed-form machinery.
    bool allow_negative_powers = false;
};

// Throws ParseError (with 1-based line/column) on malformed input.
ExprPtr parse_expression(std::string_view text, const ParseOptions& opts = {});

// Lowers an AST to a polynomial over the algebra.  Basis letters must
// exist in the algebra (i needs dim >= 2; j, k need dim 4).  conj(...)
// lowers to the involution polynomial -1/2 (e + i e i + j e j + k e k)
// over 4-dimensional presets with signature (1,1,1,1); SemanticError
// otherwise (over the complex algebra conjugation is not an NcPoly).
// Negative powers are SemanticError here even when parsed.
NcPoly lower_to_poly(const Expr& e, const AlgebraSpec& alg);

// Convenience: parse + lower.
NcPoly parse_poly(std::string_view text, const AlgebraSpec& alg);

// Constant-expression parser for "--at" style literals ("1+2i-3j+1/2k"):
// same grammar, but the result must contain no variables.
Element parse_element(std::string_view text, const AlgebraSpec& alg);

}  // namespace ncq
