#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacarena/ring.hpp"

namespace jacarena {

// Monomials that can occur in a normal form, each with the number of residues
// its coefficient ranges over (0 when unbounded: QQ, or ZZ without a dividing
// leading coefficient).
struct Staircase {
  std::vector<Monomial> monomials;
  std::vector<Integer> residues;

  bool finite_ring() const;
  // Product of the residues; meaningful only when finite_ring().
  Integer cardinality() const;
};

// nullopt when infinitely many monomials survive reduction.
std::optional<Staircase> staircase(const RingPresentation& ring);

// Monic generator of the annihilator of x in K[T]; returned over a fresh
// one-variable space named T. Requires a field of coefficients and a finite
// staircase.
Polynomial minimal_polynomial(const Polynomial& x, const RingPresentation& ring);

struct ZeroDimWitness {
  std::uint64_t exponent = 0;
  Polynomial a;
};

// x^e (1 - a x) == 0 in ring; checked before returning.
ZeroDimWitness zero_dim_witness(const Polynomial& x, const RingPtr& ring);
bool witness_holds(const Polynomial& x, const RingPresentation& ring, const ZeroDimWitness& w);

}  // namespace jacarena
