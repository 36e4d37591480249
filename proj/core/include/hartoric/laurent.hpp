#pragma once

#include <stdexcept>
#include <string>

#include "hartoric/polytope.hpp"

namespace hartoric {

// Syntax error in a Laurent polynomial, with the 0-based offset into the
// input where parsing failed.
struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Parses a Laurent polynomial in variables z1..zn.
//
//   poly   := [sign] term (sign term)*          sign: '+' or '-'
//   term   := factor (('*' | '/') factor)*
//   factor := nonnegative-integer | 'z' index ['^' signed-integer]
//
// '/' inverts the factor on its right: "1/z2" is the monomial z2^-1 and
// "3/2*z1" has coefficient 3/2.  Whitespace between tokens is ignored.
// Terms with equal exponents merge; a polynomial whose terms all cancel is
// rejected, as is a variable index outside 1..n.
LaurentSupport parse_polynomial(const std::string& text, int n);

}  // namespace hartoric
