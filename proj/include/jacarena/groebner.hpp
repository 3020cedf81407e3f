#pragma once

#include <optional>
#include <vector>

#include "jacarena/polynomial.hpp"

namespace jacarena {

// Gröbner basis of the ideal generated by `generators`. Over QQ and GF(p) the
// basis is reduced and monic; over ZZ it is a reduced strong basis with
// positive leading coefficients, so remainders are canonical in every case.
class GroebnerBasis {
 public:
  struct Division {
    Polynomial remainder;
    // p == sum_j cofactors[j] * generators[j] + remainder
    std::vector<Polynomial> cofactors;
  };

  GroebnerBasis() = default;

  const SpacePtr& space() const noexcept { return space_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  // basis()[i] == sum_j transformation()[i][j] * generators()[j]; empty when
  // the basis was computed without tracking.
  const std::vector<std::vector<Polynomial>>& transformation() const noexcept { return transformation_; }
  bool tracked() const noexcept { return tracked_; }

  Polynomial reduce(const Polynomial& p) const;
  // Requires tracked().
  Division divide(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
  bool is_unit_ideal() const;

 private:
  friend GroebnerBasis groebner(const std::vector<Polynomial>&, MonomialOrder, bool);

  SpacePtr space_;
  MonomialOrder order_;
  bool tracked_ = false;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<Polynomial>> transformation_;
  // basis_ terms sorted by order_, used by the reduction loops.
  std::vector<std::vector<Term>> sorted_;
};

// Buchberger with Gebauer-Moeller pair pruning over fields; Kandri-Rody-Kapur
// style completion (S-polynomials plus gcd pairs) over ZZ. Pairs are taken by
// the normal strategy with a deterministic tie-break.
GroebnerBasis groebner(const std::vector<Polynomial>& gens,
                       MonomialOrder order = MonomialOrder::degrevlex(), bool track = false);

// Cofactors c with x == sum c_i * gens_i, or nullopt when x is not in the ideal.
std::optional<std::vector<Polynomial>> ideal_member(const Polynomial& x, const std::vector<Polynomial>& gens);

// S-polynomial and (over ZZ) gcd-polynomial of two basis elements; exposed so
// tests can check the completion invariant directly.
std::vector<Polynomial> critical_pairs(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Leading term under `order` (precondition: p nonzero).
Term leading_term(const Polynomial& p, MonomialOrder order);

}  // namespace jacarena
