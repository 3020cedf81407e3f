#pragma once

#include <random>
#include <string>
#include <vector>

#include "jacarena/parser.hpp"
#include "jacarena/polynomial.hpp"

namespace jacarena::testing {

inline SpacePtr space_of(const std::string& ring) { return parse_ring_syntax(ring).space; }

inline Polynomial P(const std::string& text, const SpacePtr& space) {
  return parse_polynomial(text, space).in_space(space);
}

// Random polynomial with up to `terms` terms, exponents <= max_exp per
// variable and integer coefficients in [-bound, bound].
inline Polynomial random_poly(std::mt19937_64& rng, const SpacePtr& space, int terms, int max_exp, int bound) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> count(0, terms);
  std::vector<Term> out;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<std::uint32_t> e(space->vars.size());
    for (auto& v : e) v = static_cast<std::uint32_t>(exp(rng));
    out.push_back(Term{Monomial(std::move(e)), space->coeffs.normalize(Scalar(coef(rng)))});
  }
  return Polynomial::from_terms(space, std::move(out));
}

}  // namespace jacarena::testing
