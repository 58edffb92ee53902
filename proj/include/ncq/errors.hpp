#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ncq {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operand dimensions do not match the algebra.
struct DimensionError : Error {
    using Error::Error;
};

// Operation not defined for this algebra (no involution, not a division
// algebra, unsupported conversion, ...).
struct UnsupportedOperation : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Basis-change or coordinate-transform matrix is not invertible.
struct SingularTransform : Error {
    using Error::Error;
};

// A coordinate matrix admits no standard-components preimage over the
// requested algebra.  Carries the exact defect of the realizability
// conditions (for the complex algebra: the two Cauchy-Riemann residuals).
struct NotRealizable : Error {
    std::vector<std::string> residuals;  // exact rationals, printed as "p/q"
    NotRealizable(const std::string& msg, std::vector<std::string> res)
        : Error(msg), residuals(std::move(res)) {}
};

// Polynomial is not multilinear in the requested variables.
struct NotMultilinear : Error {
    using Error::Error;
};

// Evaluation bindings do not cover every variable of a polynomial.
struct UnboundVariable : Error {
    using Error::Error;
};

// Requested derivative/series order exceeds the variable alphabet.
struct OrderTooHigh : Error {
    using Error::Error;
};

// Numeric evaluation failed (singular point, non-finite value).
struct EvaluationError : Error {
    using Error::Error;
};

// ODE solver hit max_order with a nonvanishing derivative.
struct TruncatedError : Error {
    using Error::Error;
};

// Expression is grammatical but not meaningful in this context
// (negative power outside oracle mode, conj over a non-quaternion
// algebra, unknown variable, ...).
struct SemanticError : Error {
    using Error::Error;
};

// Tokenizer/parser failure; positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " +
                std::to_string(col_)),
          line(line_),
          column(col_) {}
};

}  // namespace ncq
