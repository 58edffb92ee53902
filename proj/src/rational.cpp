#include "ncq/rational.hpp"

#include <cctype>

namespace ncq {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num) || (slash != std::string_view::npos &&
                                (!valid_integer(den) || den[0] == '-' || den == "0")))
        throw SemanticError("malformed rational '" + std::string(text) + "'");
    boost::multiprecision::cpp_int n{std::string(num)};
    boost::multiprecision::cpp_int d =
        den.empty() ? boost::multiprecision::cpp_int(1)
                    : boost::multiprecision::cpp_int(std::string(den));
    if (d == 0) throw SemanticError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace ncq
