#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace jacarena {

// Exponent vector with trailing zeros trimmed, so monomials over a common
// variable prefix compare equal regardless of how many slots follow.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents)
      : Monomial(std::vector<std::uint32_t>(exponents)) {}

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return exps_.empty(); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  // Precondition: this->divides(numerator)... callers write numerator / divisor.
  friend Monomial operator/(const Monomial& num, const Monomial& den);
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  // Returns the monomial with slot `index` removed (later slots shift down).
  Monomial without(std::size_t index) const;
  Monomial with_exponent(std::size_t index, std::uint32_t value) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  void trim();

  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { kLex, kDegRevLex };

  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(Kind kind) : kind_(kind) {}
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::kLex); }
  static constexpr MonomialOrder degrevlex() { return MonomialOrder(Kind::kDegRevLex); }

  Kind kind() const noexcept { return kind_; }
  // Negative, zero, positive as a <, ==, > b. Variable 0 is the largest.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const { return kind_ == Kind::kLex ? "lex" : "degrevlex"; }

  friend bool operator==(MonomialOrder a, MonomialOrder b) { return a.kind_ == b.kind_; }

 private:
  Kind kind_ = Kind::kDegRevLex;
};

}  // namespace jacarena
