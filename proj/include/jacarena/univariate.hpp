#pragma once

#include <vector>

#include "jacarena/polynomial.hpp"

namespace jacarena {

// Dense univariate arithmetic over a field, used by the Euclidean paths.
// Index i holds the coefficient of var^i; vectors carry no trailing zeros.
namespace univariate {

using Dense = std::vector<Scalar>;

Dense to_dense(const Polynomial& p, std::size_t var);
Polynomial from_dense(const Dense& d, const SpacePtr& space, std::size_t var);

long degree(const Dense& a);  // -1 for zero
Dense sub(const Dense& a, const Dense& b, const CoefficientRing& k);
Dense mul(const Dense& a, const Dense& b, const CoefficientRing& k);
// a = q*b + r with deg r < deg b; b nonzero.
void divmod(const Dense& a, const Dense& b, const CoefficientRing& k, Dense& q, Dense& r);
Dense mod(const Dense& a, const Dense& b, const CoefficientRing& k);
// Monic gcd g together with s, t such that s*a + t*b == g.
Dense gcdext(const Dense& a, const Dense& b, const CoefficientRing& k, Dense& s, Dense& t);

}  // namespace univariate
}  // namespace jacarena
