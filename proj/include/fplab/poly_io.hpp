#ifndef FPLAB_POLY_IO_HPP
#define FPLAB_POLY_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "fplab/polynomial.hpp"

namespace fplab {

/// Parses the polynomial text grammar
///
///     poly    := term (('+'|'-') term)*
///     term    := coeff | coeff '*' factors | factors
///     factors := var ('^' nat)? ('*' var ('^' nat)?)*
///
/// with variables x1..xm (plain `x` is accepted when m == 1), integer
/// coefficients reduced mod p, optional whitespace and an optional leading
/// sign. Throws std::invalid_argument with the offending column on error.
Polynomial parse_polynomial(std::string_view text, const PrimeField& field, std::size_t num_vars);

/// Canonical text: terms in decreasing graded-lex order (x1 > ... > xm),
/// coefficients in [0, p), unit coefficients omitted, "0" for zero.
/// parse_polynomial(format_polynomial(f)) == f.
std::string format_polynomial(const Polynomial& f);

/// "x1^2*x2", or "1" for the zero multiindex.
std::string format_monomial(const Multiindex& i);

/// Parses a single monomial such as "x1^2*x2" or "1".
Multiindex parse_monomial(std::string_view text, std::size_t num_vars);

}  // namespace fplab

#endif  // FPLAB_POLY_IO_HPP
