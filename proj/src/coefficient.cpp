#include "jacarena/coefficient.hpp"

#include "jacarena/error.hpp"

namespace jacarena {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIncompatibleRings: return "IncompatibleRings";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kInvalidCertificate: return "InvalidCertificate";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kNotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::kNotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::kNotMonogenic: return "NotMonogenic";
    case ErrorCode::kLeadingCoefficientZero: return "LeadingCoefficientZero";
    case ErrorCode::kNonMonicDependence: return "NonMonicDependence";
    case ErrorCode::kSaturationCapExceeded: return "SaturationCapExceeded";
    case ErrorCode::kIllegalMove: return "IllegalMove";
    case ErrorCode::kNotInJacobsonRadical: return "NotInJacobsonRadical";
    case ErrorCode::kUnsupportedRing: return "UnsupportedRing";
    case ErrorCode::kBudgetOverflow: return "BudgetOverflow";
    case ErrorCode::kWrongBudget: return "WrongBudget";
    case ErrorCode::kNotFinite: return "NotFinite";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer pos_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

CoefficientRing CoefficientRing::prime_field(const Integer& p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, "GF(" + p.get_str() + ") needs a prime modulus");
  }
  return CoefficientRing(CoefficientKind::kPrimeField, p);
}

Scalar CoefficientRing::normalize(Scalar value) const {
  switch (kind_) {
    case CoefficientKind::kRationals:
      value.canonicalize();
      return value;
    case CoefficientKind::kIntegers:
      if (value.get_den() != 1) {
        throw Error(ErrorCode::kInvalidArgument, "non-integral coefficient " + value.get_str() + " over ZZ");
      }
      return value;
    case CoefficientKind::kPrimeField: {
      Integer num = pos_mod(value.get_num(), p_);
      if (value.get_den() != 1) {
        Integer inv;
        Integer den = pos_mod(value.get_den(), p_);
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0) {
          throw Error(ErrorCode::kInvalidArgument, "denominator divisible by " + p_.get_str());
        }
        num = pos_mod(num * inv, p_);
      }
      return Scalar(num);
    }
  }
  return value;
}

bool CoefficientRing::is_unit(const Scalar& value) const {
  if (kind_ == CoefficientKind::kIntegers) return abs(value) == 1;
  return sgn(value) != 0;
}

Scalar CoefficientRing::inverse(const Scalar& value) const {
  if (!is_unit(value)) {
    throw Error(ErrorCode::kNotAUnit, value.get_str() + " is not invertible over " + to_string());
  }
  if (kind_ == CoefficientKind::kIntegers) return value;
  return normalize(Scalar(1) / value);
}

std::string CoefficientRing::to_string() const {
  switch (kind_) {
    case CoefficientKind::kIntegers: return "ZZ";
    case CoefficientKind::kRationals: return "QQ";
    case CoefficientKind::kPrimeField: return "GF(" + p_.get_str() + ")";
  }
  return "?";
}

}  // namespace jacarena
