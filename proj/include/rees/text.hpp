// Canonical text rendering and parsing.
//
// Rendering is byte-stable for fixed input and order: x-monomials list
// variables by ascending index (`x1^2*x3`), T-variables render as
// `T[x1*x2,t1]` (`T[1,t2]` for a unit generator), S-monomials put the x-part
// first followed by the T-factors sorted descending under compare_T, and a
// binomial prints `<lead> - <trail>`.
#pragma once

#include "rees/binomial.hpp"
#include "rees/monomial.hpp"
#include "rees/order.hpp"

#include <stdexcept>
#include <string>

namespace rees {

// Bad user-supplied text or JSON; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const XMonomial& m);
std::string to_string(const TVariable& t);
std::string to_string(const SMonomial& u, const TermOrder& ord);
std::string to_string(const Binomial& b, const TermOrder& ord);
std::string to_string(const ImageMonomial& mu);

// Parsers for the same grammar the renderer emits (whitespace tolerated):
//   binomial  := smonomial '-' smonomial
//   smonomial := factor ('*' factor)* | '1'
//   factor    := 'x'INT('^'INT)? | 'T[' xmono ',' 't'INT ']'
// n and r bound the allowed variable and block indices.  Throws InputError
// with a position on malformed text.
SMonomial parse_smonomial(const std::string& text, int n, int r);
Binomial parse_binomial(const std::string& text, int n, int r, const TermOrder& ord);
XMonomial parse_xmonomial(const std::string& text, int n);

} // namespace rees
