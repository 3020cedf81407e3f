#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jacarena/polynomial.hpp"

namespace jacarena {

// Syntactic content of a ring description such as "ZZ[x,y]/(x^2, 3)".
struct RingSyntax {
  CoefficientRing coeffs = CoefficientRing::integers();
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;
  SpacePtr space;
};

// Grammar:
//   ring := base ("[" ident ("," ident)* "]")? ("/(" poly ("," poly)* ")" | "/" integer)?
//   base := "ZZ" | "QQ" | "GF(" integer ")"
//   poly := +, -, *, ^ (nonnegative integer exponent), parentheses, integer
//           literals, identifiers; "/" by a nonzero constant is also accepted
//           so that printed rational coefficients read back.
// Errors carry kParseError with the character offset, or kUnknownVariable.
RingSyntax parse_ring_syntax(std::string_view text);
Polynomial parse_polynomial(std::string_view text, const SpacePtr& space);

}  // namespace jacarena
