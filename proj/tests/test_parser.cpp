#include "doctest.h"
#include "ncq/algebra.hpp"
#include "ncq/errors.hpp"
#include "ncq/nc_poly.hpp"
#include "ncq/parser.hpp"

using namespace ncq;

TEST_SUITE("parser") {

TEST_CASE("expression grammar basics") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(to_string(parse_poly("x", H)) == "x");
    CHECK(to_string(parse_poly("x*x*x", H)) == "x^3");
    CHECK(to_string(parse_poly("x^2 + x^2", H)) == "2*x^2");
    CHECK(semantic_eq(parse_poly("(x + i)^2", H),
                      parse_poly("x^2 + x*i + i*x - 1", H), H));
    CHECK(to_string(parse_poly("1/2", H)) == "1/2");
    CHECK(to_string(parse_poly("2/4", H)) == "1/2");
    // precedence: power binds tighter than product, product tighter than sum
    CHECK(semantic_eq(parse_poly("2*x^2 + 3*x", H),
                      parse_poly("(2*(x^2)) + (3*x)", H), H));
}

TEST_CASE("rational literals with implicit basis factors") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(eval(parse_poly("2i", H), {}, H) ==
          Element({Rational(0), Rational(2), Rational(0), Rational(0)}));
    CHECK(eval(parse_poly("1/2k", H), {}, H) ==
          Element({Rational(0), Rational(0), Rational(0), Rational(1, 2)}));
    CHECK(eval(parse_poly("-3j", H), {}, H) ==
          Element({Rational(0), Rational(0), Rational(-3), Rational(0)}));
    // explicit product form means the same thing
    CHECK(eval(parse_poly("2*i", H), {}, H) == eval(parse_poly("2i", H), {}, H));
}

TEST_CASE("leading minus is a signed term") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(semantic_eq(parse_poly("-x", H), neg(NcPoly::variable(kVarX, H)), H));
    CHECK(semantic_eq(parse_poly("-1*x", H), parse_poly("-x", H), H));
    CHECK(semantic_eq(parse_poly("1 - 2 - 3", H),
                      NcPoly::constant(scale(Rational(-4), H.unit())), H));
    // unary minus on non-numeric primaries ("-i", "(-k)") keeps the
    // canonical text reparseable
    CHECK(eval(parse_poly("-i", H), {}, H) == neg(H.basis_element(1)));
    CHECK(eval(parse_poly("(-k)", H), {}, H) == neg(H.basis_element(3)));
    CHECK(semantic_eq(parse_poly("-conj(x)", H),
                      neg(parse_poly("conj(x)", H)), H));
    // unary minus binds below the exponent
    CHECK(semantic_eq(parse_poly("-x^2", H), neg(parse_poly("x^2", H)), H));
    CHECK(eval(parse_poly("-2^2", H), {}, H) == scale(Rational(-4), H.unit()));
    CHECK(semantic_eq(parse_poly("2*-x", H), parse_poly("-2*x", H), H));
}

TEST_CASE("increment variables h1..h32") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(to_string(parse_poly("h1*h2", H)) == "h1*h2");
    CHECK(uses_var(parse_poly("h32", H), var_h(32)));
    // out-of-range increments are positioned parse errors, not API errors
    CHECK_THROWS_AS(parse_poly("h33", H), ParseError);
    CHECK_THROWS_AS(parse_poly("h0", H), ParseError);
}

TEST_CASE("conjugation lowers to the involution identity") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly c = parse_poly("conj(x)", H);
    Element q({Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(eval(c, {{kVarX, q}}, H) == conj(q, H));
    CHECK(semantic_eq(parse_poly("conj(conj(x))", H), parse_poly("x", H), H));
    CHECK(semantic_eq(parse_poly("x*conj(x)", H),
                      parse_poly("conj(x)*x", H), H));
    // only available where the involution identity holds
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    CHECK_THROWS_AS(parse_poly("conj(x)", C), SemanticError);
    AlgebraSpec E = AlgebraSpec::generalized_quaternions(Rational(-1), Rational(-2));
    CHECK_THROWS_AS(parse_poly("conj(x)", E), SemanticError);
}

TEST_CASE("basis letters respect the algebra dimension") {
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    CHECK(eval(parse_poly("i", C), {}, C) == C.basis_element(1));
    CHECK_THROWS_AS(parse_poly("j", C), SemanticError);
    CHECK_THROWS_AS(parse_poly("k", C), SemanticError);
}

TEST_CASE("negative powers are rejected outside oracle contexts") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK_THROWS_AS(parse_poly("x^-1", H), SemanticError);
    ParseOptions oracle;
    oracle.allow_negative_powers = true;
    // grammatical with the flag, and only on x
    CHECK_NOTHROW(parse_expression("x^-1", oracle));
    CHECK_NOTHROW(parse_expression("x*i*x^-1", oracle));
    CHECK_THROWS_AS(parse_expression("(x+1)^-1", oracle), SemanticError);
    CHECK_THROWS_AS(parse_expression("h1^-1", oracle), SemanticError);
}

TEST_CASE("parse errors carry positions") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK_THROWS_AS(parse_poly("x + ", H), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", H), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ y", H), ParseError);
    CHECK_THROWS_AS(parse_poly("x^999999999999999999999", H), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", H), ParseError);
    try {
        parse_poly("x + )", H);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("element literals") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(parse_element("1+2i-3j+1/2k", H) ==
          Element({Rational(1), Rational(2), Rational(-3), Rational(1, 2)}));
    CHECK(parse_element("0", H) == H.zero());
    CHECK(parse_element("(1+i)*(1+j)", H) ==
          Element({Rational(1), Rational(1), Rational(1), Rational(1)}));
    CHECK_THROWS_AS(parse_element("x+1", H), SemanticError);
    CHECK_THROWS_AS(parse_element("h1", H), SemanticError);
}

TEST_CASE("round trip through canonical text") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    for (const char* text :
         {"x^2*h1 + x*h1*x + h1*x^2", "(1+2i)*x*(j)*x", "-3 + 3*x",
          "1/2*x^4", "h1*h2 + h2*h1", "x*(i)*x*(j)*x"}) {
        NcPoly p = parse_poly(text, H);
        std::string printed = to_string(p);
        CHECK(to_string(parse_poly(printed, H)) == printed);
    }
}

}  // TEST_SUITE
