#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacarena/coefficient.hpp"
#include "jacarena/monomial.hpp"

namespace jacarena {

// Coefficient ring plus an ordered variable list. Polynomials share spaces
// through shared_ptr; binary operations merge variable lists by name.
struct PolySpace {
  CoefficientRing coeffs;
  std::vector<std::string> vars;

  std::optional<std::size_t> index_of(std::string_view name) const;
};

using SpacePtr = std::shared_ptr<const PolySpace>;

SpacePtr make_space(CoefficientRing coeffs, std::vector<std::string> vars);
// Space with one extra variable appended; the name avoids collisions.
SpacePtr extend_space(const SpacePtr& space, std::string_view preferred_name);
bool same_space(const SpacePtr& a, const SpacePtr& b);

struct Term {
  Monomial monomial;
  Scalar coeff;
};

class Polynomial {
 public:
  // A default-constructed polynomial is the zero of an unspecified space; it
  // adopts the space of whatever it is combined with.
  Polynomial() = default;
  explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}

  static Polynomial constant(SpacePtr space, const Scalar& value);
  static Polynomial variable(SpacePtr space, std::size_t index, std::uint32_t power = 1);
  static Polynomial variable(SpacePtr space, std::string_view name);
  static Polynomial monomial(SpacePtr space, const Monomial& m, const Scalar& c);
  // Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(SpacePtr space, std::vector<Term> terms);

  const SpacePtr& space() const noexcept { return space_; }
  const CoefficientRing& coeffs() const;
  // Terms in degrevlex-descending order, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  std::uint32_t degree_in(std::size_t var) const;
  std::uint64_t total_degree() const;

  // p = sum_i c_i * var^i with c_i free of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  // Re-expresses this polynomial over `target` (a superset of its variables).
  Polynomial in_space(const SpacePtr& target) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::uint64_t exponent) const;

  // Simultaneous substitution; unbound variables are left in place.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Brings both operands into a common space (merging variables by name).
  static SpacePtr unify(const Polynomial& a, const Polynomial& b);

 private:
  SpacePtr space_;
  std::vector<Term> terms_;
};

// Result of an integer or constant-ring literal in `space`.
inline Polynomial constant(const SpacePtr& space, long value) {
  return Polynomial::constant(space, Scalar(value));
}

}  // namespace jacarena
