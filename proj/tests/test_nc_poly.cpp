#include <random>

#include "doctest.h"
#include "ncq/algebra.hpp"
#include "ncq/errors.hpp"
#include "ncq/nc_poly.hpp"
#include "ncq/parser.hpp"

using namespace ncq;

namespace {

NcPoly random_poly(std::mt19937_64& rng, const AlgebraSpec& alg, int max_words,
                   int max_len, const std::vector<int>& vars) {
    std::uniform_int_distribution<int> nwords(1, max_words), wlen(0, max_len),
        coord(-3, 3), pick(0, static_cast<int>(vars.size()) - 1);
    NcPoly p = NcPoly::zero();
    for (int w = nwords(rng); w > 0; --w) {
        auto rand_const = [&] {
            std::vector<Rational> c(alg.dim());
            for (auto& v : c) v = Rational(coord(rng));
            return Element(std::move(c));
        };
        NcPoly word = NcPoly::constant(rand_const());
        for (int t = wlen(rng); t > 0; --t) {
            word = mul(word, NcPoly::variable(vars[pick(rng)], alg), alg);
            word = mul(word, NcPoly::constant(rand_const()), alg);
        }
        p = add(p, word);
    }
    return p;
}

}  // namespace

TEST_SUITE("nc_poly") {

TEST_CASE("canonical form merges words that differ by scalar factors") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly p = parse_poly("x*j*x + 2*i*x*j*x", H);
    CHECK(to_string(p) == "(1+2i)*x*(j)*x");
    // idempotent
    CHECK(to_string(normalized(normalized(p))) == "(1+2i)*x*(j)*x");
    // exact cancellation collapses to zero
    NcPoly q = parse_poly("x*j*x - x*j*x", H);
    CHECK(normalized(q).words.empty());
    CHECK(to_string(q) == "0");
}

TEST_CASE("arithmetic and powers") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly x = NcPoly::variable(kVarX, H);
    NcPoly sq = mul(x, x, H);
    CHECK(to_string(sq) == "x^2");
    CHECK(to_string(pow(x, 5, H)) == "x^5");
    CHECK(to_string(pow(x, 0, H)) == "1");
    // (x+1)^2 = 1 + 2x + x^2 (the unit commutes)
    NcPoly p = pow(parse_poly("x+1", H), 2, H);
    CHECK(semantic_eq(p, parse_poly("x^2 + 2*x + 1", H), H));
    // but (x+i)(x-i) keeps the order of the mixed terms
    NcPoly m = mul(parse_poly("x+i", H), parse_poly("x-i", H), H);
    CHECK(semantic_eq(m, parse_poly("x^2 - x*i + i*x + 1", H), H));
    CHECK_FALSE(semantic_eq(m, parse_poly("x^2 + 1", H), H));
    // over the complex numbers the mixed terms cancel
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    NcPoly mc = mul(parse_poly("x+i", C), parse_poly("x-i", C), C);
    CHECK(semantic_eq(mc, parse_poly("x^2 + 1", C), C));
}

TEST_CASE("degree bookkeeping and variable queries") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly p = parse_poly("x^2*h1 + h1*x + 3", H);
    CHECK(total_degree(p) == 3);
    CHECK(degree_in(p, kVarX) == 2);
    CHECK(degree_in(p, var_h(1)) == 1);
    CHECK(uses_var(p, kVarX));
    CHECK_FALSE(uses_var(p, var_h(2)));
    CHECK(variables_of(p) == std::vector<int>{kVarX, var_h(1)});
    CHECK_THROWS_AS(var_h(0), OrderTooHigh);
    CHECK_THROWS_AS(var_h(33), OrderTooHigh);
}

TEST_CASE("substitution composes maps") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly p = parse_poly("x^2", H);
    NcPoly shifted = substitute(p, kVarX, parse_poly("x+1", H), H);
    CHECK(semantic_eq(shifted, parse_poly("x^2 + 2*x + 1", H), H));
    // substituting a constant evaluates that slot
    NcPoly at_i = substitute_const(parse_poly("x*h1*x", H), kVarX,
                                   H.basis_element(1), H);
    CHECK(semantic_eq(at_i, parse_poly("i*h1*i", H), H));
    NcPoly renamed = rename_var(parse_poly("x*h1", H), var_h(1), var_h(2));
    CHECK(to_string(renamed) == "x*h2");
}

TEST_CASE("evaluation binds variables exactly") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    NcPoly p = parse_poly("x^2", H);
    Element x0 = Element({Rational(1), Rational(1), Rational(0), Rational(0)});
    CHECK(eval(p, {{kVarX, x0}}, H) ==
          Element({Rational(0), Rational(2), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(eval(parse_poly("x*h1", H), {{kVarX, x0}}, H),
                    UnboundVariable);
    Element wrong_dim = Element({Rational(1), Rational(0)});
    CHECK_THROWS_AS(eval(p, {{kVarX, wrong_dim}}, H), DimensionError);
}

TEST_CASE("coordinate expansion is a faithful semantic normal form") {
    std::mt19937_64 rng(2024);
    AlgebraSpec H = AlgebraSpec::quaternions();
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    for (int t = 0; t < 30; ++t) {
        NcPoly p = random_poly(rng, H, 4, 3, {kVarX, var_h(1)});
        NcPoly q = random_poly(rng, H, 4, 3, {kVarX, var_h(1)});
        // expansion is additive
        CoordinateForm sum = expand(add(p, q), H);
        CHECK(cf_sub(sum, expand(q, H)) == expand(p, H));
    }
    // a nonzero word expands to a nonzero form
    CHECK_FALSE(expand(parse_poly("x*i - i*x", H), H).is_zero());
    CHECK(expand(parse_poly("x*i - i*x", C), C).is_zero());
}

TEST_CASE("parallel expansion equals the serial reference") {
    std::mt19937_64 rng(555);
    AlgebraSpec H = AlgebraSpec::quaternions();
    for (int t = 0; t < 10; ++t) {
        NcPoly p = random_poly(rng, H, 16, 4, {kVarX, var_h(1), var_h(2)});
        CHECK(expand(p, H) == expand_serial(p, H));
    }
    AlgebraSpec E = AlgebraSpec::generalized_quaternions(Rational(-1), Rational(-2));
    for (int t = 0; t < 5; ++t) {
        NcPoly p = random_poly(rng, E, 12, 3, {kVarX, var_h(1)});
        CHECK(expand(p, E) == expand_serial(p, E));
    }
}

TEST_CASE("semantic equality distinguishes algebras") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    CHECK(semantic_eq(parse_poly("x*i", C), parse_poly("i*x", C), C));
    CHECK_FALSE(semantic_eq(parse_poly("x*i", H), parse_poly("i*x", H), H));
    CHECK(is_semantically_zero(parse_poly("x*h1 - x*h1", H), H));
    // conjugation identity: x + i x i + j x j + k x k = -2 conj(x)
    NcPoly lhs = parse_poly("x + i*x*i + j*x*j + k*x*k", H);
    NcPoly rhs = parse_poly("-2*conj(x)", H);
    CHECK(semantic_eq(lhs, rhs, H));
}

TEST_CASE("multilinear coordinate tensor") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    // the product map (h1, h2) -> h1 h2 has the structural constants as tensor
    NcPoly prod = parse_poly("h1*h2", H);
    PolyTensor t = polylinear_coords(prod, H);
    CHECK(t.arity == 2);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            Element v = t.at({k, l});
            for (int p = 0; p < 4; ++p) CHECK(v[p] == H.b(k, l, p));
        }
    // rejects words that are not multilinear in h1..hn
    CHECK_THROWS_AS(polylinear_coords(parse_poly("h1*h1", H), H), NotMultilinear);
    CHECK_THROWS_AS(polylinear_coords(parse_poly("x*h1", H), H), NotMultilinear);
    CHECK_THROWS_AS(polylinear_coords(parse_poly("h1 + h1*h2", H), H),
                    NotMultilinear);
}

TEST_CASE("symmetry detection") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(is_symmetric(parse_poly("h1*h2 + h2*h1", H), {var_h(1), var_h(2)}, H));
    CHECK_FALSE(is_symmetric(parse_poly("h1*h2 - h2*h1", H),
                             {var_h(1), var_h(2)}, H));
    CHECK_FALSE(is_symmetric(parse_poly("h1*x*h2", H), {var_h(1), var_h(2)}, H));
    // commutativity rescues the asymmetric word over the complex numbers
    AlgebraSpec C = AlgebraSpec::complex_algebra();
    CHECK(is_symmetric(parse_poly("h1*h2", C), {var_h(1), var_h(2)}, C));
    CHECK_FALSE(is_symmetric(parse_poly("h1*h2", H), {var_h(1), var_h(2)}, H));
}

TEST_CASE("canonical text output") {
    AlgebraSpec H = AlgebraSpec::quaternions();
    CHECK(to_string(parse_poly("x^2*h1 + x*h1*x + h1*x^2", H)) ==
          "x^2*h1 + x*h1*x + h1*x^2");
    CHECK(to_string(parse_poly("3*x - 3", H)) == "-3 + 3*x");
    CHECK(to_string(NcPoly::zero()) == "0");
    CHECK(to_string(parse_poly("1/2*k*x", H)) == "(1/2k)*x");
    // printing then reparsing is the identity on canonical forms
    for (const char* text : {"x^2*h1 + x*h1*x + h1*x^2", "(1+2i)*x*(j)*x",
                             "-3 + 3*x", "x*(j)*x*(k)", "1/2 + x^3"}) {
        NcPoly p = parse_poly(text, H);
        CHECK(to_string(parse_poly(to_string(p), H)) == to_string(p));
        CHECK(semantic_eq(p, parse_poly(to_string(p), H), H));
    }
}

}  // TEST_SUITE
