#pragma once

#include <gmpxx.h>

#include <string>

namespace jacarena {

using Integer = mpz_class;
// Every coefficient is carried as a reduced rational. Over ZZ and GF(p) the
// denominator is always 1; over GF(p) the numerator lies in [0, p).
using Scalar = mpq_class;

enum class CoefficientKind { kIntegers, kRationals, kPrimeField };

class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(CoefficientKind::kIntegers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(CoefficientKind::kRationals, 0); }
  // Throws kInvalidArgument unless p is prime (trial division).
  static CoefficientRing prime_field(const Integer& p);

  CoefficientKind kind() const noexcept { return kind_; }
  const Integer& characteristic() const noexcept { return p_; }
  bool is_field() const noexcept { return kind_ != CoefficientKind::kIntegers; }
  bool is_integers() const noexcept { return kind_ == CoefficientKind::kIntegers; }

  // Canonical representative; throws kInvalidArgument for a non-integral
  // value over ZZ or a denominator divisible by p over GF(p).
  Scalar normalize(Scalar value) const;
  Scalar inverse(const Scalar& value) const;
  bool is_unit(const Scalar& value) const;

  std::string to_string() const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const CoefficientRing& a, const CoefficientRing& b) { return !(a == b); }

 private:
  CoefficientRing(CoefficientKind kind, Integer p) : kind_(kind), p_(std::move(p)) {}

  CoefficientKind kind_;
  Integer p_;
};

bool is_prime(const Integer& n);

// Integer helpers used by the Euclidean strategies and refuters.
Integer floor_div(const Integer& a, const Integer& b);
Integer pos_mod(const Integer& a, const Integer& m);

}  // namespace jacarena
