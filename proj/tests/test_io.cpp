#include <doctest.h>

#include <sstream>

#include "toricflip/errors.hpp"
#include "toricflip/io.hpp"

using namespace toricflip;

TEST_CASE("monomial text round trip") {
    Exponent u{2, 0, 1, 0, 3};
    CHECK(format_monomial(u, VariableNames::Letters) == "a^2ce^3");
    CHECK(format_monomial(u, VariableNames::Indexed) == "x1^2*x3*x5^3");
    CHECK(parse_monomial("a^2ce^3", 5) == u);
    CHECK(parse_monomial("x1^2*x3 x5^3", 5) == u);
    CHECK(parse_monomial("a^2 * c * e^3", 5) == u);
    CHECK(parse_monomial("1", 5) == Exponent(5, 0));
    CHECK(format_monomial(Exponent(3, 0), VariableNames::Letters) == "1");
    CHECK_THROWS_AS(parse_monomial("f", 5), Error);
    CHECK_THROWS_AS(parse_monomial("x0", 5), Error);
    CHECK_THROWS_AS(parse_monomial("a^", 5), Error);
    CHECK_THROWS_AS(parse_monomial("", 5), Error);
}

TEST_CASE("binomial text round trip") {
    auto b = parse_binomial("a^5c - b^6", 5);
    CHECK(b.lead == Exponent{5, 0, 1, 0, 0});
    CHECK(b.trail == Exponent{0, 6, 0, 0, 0});
    CHECK(b.coeff == 1);
    auto c = parse_binomial("a^5c - 3/7*b^6", 5);
    CHECK(c.coeff == Rational(3, 7));
    CHECK(format_binomial(c, VariableNames::Letters) == "a^5c - 3/7*b^6");
    CHECK(parse_binomial(format_binomial(c, VariableNames::Indexed), 5) == c);
    CHECK(parse_binomial("x1^2 - x2", 2).trail == Exponent{0, 1});
    CHECK(parse_binomial("c - a^7", 3).trail == Exponent{7, 0, 0});
    CHECK(parse_binomial("b^2c", 3).is_monomial());
}

TEST_CASE("ideal files") {
    std::istringstream in("# J-like\n2 0 0\n0 1 1  # comment\n\n3 0 0\n");
    auto M = parse_ideal(in);
    CHECK(M.nvars() == 3);
    CHECK(M.size() == 2);
    std::ostringstream out;
    write_ideal(out, M);
    std::istringstream back(out.str());
    CHECK(parse_ideal(back) == M);
    std::istringstream ragged("1 0\n1 0 0\n");
    CHECK_THROWS_AS(parse_ideal(ragged), Error);
    std::istringstream negative("1 -1\n");
    CHECK_THROWS_AS(parse_ideal(negative), Error);
    CHECK(format_ideal(M, VariableNames::Letters) == "<bc, a^2>");
}
