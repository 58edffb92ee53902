#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "ncq/errors.hpp"

namespace ncq {

// Exact scalar used everywhere outside the numeric-oracle code paths.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Prints "p" when the denominator is 1, else "p/q" (q > 0, canonical).
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Parses "p" or "p/q" with signed p and positive q.  Throws SemanticError
// on malformed input; this is the low-level helper used by JSON/matrix IO
// (the expression parser has its own tokenizer with positions).
Rational parse_rational(std::string_view text);

}  // namespace ncq
