#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jacarena/groebner.hpp"
#include "jacarena/polynomial.hpp"

namespace jacarena {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

// coeffs[vars] / <relations>, with the degrevlex Gröbner basis computed once
// at construction.
class RingPresentation {
 public:
  static RingPtr create(SpacePtr space, std::vector<Polynomial> relations);
  static RingPtr create(CoefficientRing coeffs, std::vector<std::string> vars,
                        std::vector<Polynomial> relations = {});
  static RingPtr parse(std::string_view text);

  const SpacePtr& space() const noexcept { return space_; }
  const CoefficientRing& coeffs() const noexcept { return space_->coeffs; }
  const std::vector<std::string>& vars() const noexcept { return space_->vars; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  const GroebnerBasis& basis() const noexcept { return basis_; }

  // Normal form, expressed over this ring's space.
  Polynomial reduce(const Polynomial& p) const;
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return is_zero(a - b); }
  bool is_trivial() const { return basis_.is_unit_ideal(); }

  Polynomial constant(long value) const { return Polynomial::constant(space_, Scalar(value)); }
  Polynomial variable(std::size_t index) const { return Polynomial::variable(space_, index); }
  // Parses an expression over this ring's variables, without reducing.
  Polynomial parse_polynomial(std::string_view text) const;

  std::string to_string() const;

 private:
  RingPresentation(SpacePtr space, std::vector<Polynomial> relations, GroebnerBasis basis);
  friend RingPtr quotient_extend(const RingPtr& ring, const std::vector<Polynomial>& extra);

  SpacePtr space_;
  std::vector<Polynomial> relations_;
  GroebnerBasis basis_;
};

// ring / <relations, extra>; the new basis is seeded with the old one.
RingPtr quotient_extend(const RingPtr& ring, const std::vector<Polynomial>& extra);

class RingElement {
 public:
  RingElement(RingPtr ring, const Polynomial& value);

  const RingPtr& ring() const noexcept { return ring_; }
  // Unique normal form representative.
  const Polynomial& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  RingElement operator-() const { return RingElement(ring_, -value_); }
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement pow(std::uint64_t e) const;
  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  std::string to_string() const { return value_.to_string(); }

 private:
  RingPtr ring_;
  Polynomial value_;
};

RingElement parse_expr(std::string_view text, const RingPtr& ring);

}  // namespace jacarena
