#pragma once

// Text forms of monomials, binomials and ideals.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "toricflip/groebner.hpp"

namespace toricflip {

enum class VariableNames { Letters, Indexed };

/// Letters a, b, c, ... when n <= 26, otherwise x1, x2, ...
VariableNames default_names(std::size_t n);

/// "a^2c" or "x1^2*x3"; the empty monomial prints as "1".
std::string format_monomial(ExponentView u, VariableNames names);
/// "lead - trail", "lead - 3/2*trail", or just "lead" for a monomial.
std::string format_binomial(const Binomial& f, VariableNames names);
std::string format_ideal(const MonomialIdeal& M, VariableNames names);

/// Accepts both naming styles: "a^2bc", "a^2*b*c", "x1^2*x2 x3", "1".
Exponent parse_monomial(std::string_view text, std::size_t n);
/// "u - v" or "u - c*v" with a rational c.
Binomial parse_binomial(std::string_view text, std::size_t n);
MonomialIdeal parse_ideal_text(const std::vector<std::string>& generators, std::size_t n);

/// One generator per line as n nonnegative integers; '#' comments. With
/// n == 0 the width is taken from the first row.
MonomialIdeal parse_ideal(std::istream& in, std::size_t n = 0);
MonomialIdeal read_ideal_file(const std::string& path, std::size_t n = 0);
void write_ideal(std::ostream& out, const MonomialIdeal& M);

}  // namespace toricflip
