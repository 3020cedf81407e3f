#include "jacarena/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "jacarena/error.hpp"

namespace jacarena {
namespace {

constexpr MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

bool term_greater(const Term& a, const Term& b) {
  return kStorageOrder.compare(a.monomial, b.monomial) > 0;
}

// Remaps monomials from `from`'s variable slots into `to`'s slots; slots the
// target lacks map to npos and must carry exponent zero.
constexpr std::size_t kMissing = static_cast<std::size_t>(-1);

std::vector<std::size_t> slot_map(const PolySpace& from, const PolySpace& to) {
  std::vector<std::size_t> map(from.vars.size());
  for (std::size_t i = 0; i < from.vars.size(); ++i) {
    auto idx = to.index_of(from.vars[i]);
    map[i] = idx ? *idx : kMissing;
  }
  return map;
}

bool is_identity_map(const std::vector<std::size_t>& map) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != i) return false;
  }
  return true;
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                            const CoefficientRing& ring, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = kStorageOrder.compare(a[i].monomial, b[j].monomial);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Term t = b[j++];
      if (subtract) t.coeff = ring.normalize(-t.coeff);
      out.push_back(std::move(t));
    } else {
      Scalar c = subtract ? Scalar(a[i].coeff - b[j].coeff) : Scalar(a[i].coeff + b[j].coeff);
      c = ring.normalize(std::move(c));
      if (sgn(c) != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> PolySpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  return std::nullopt;
}

SpacePtr make_space(CoefficientRing coeffs, std::vector<std::string> vars) {
  return std::make_shared<const PolySpace>(PolySpace{std::move(coeffs), std::move(vars)});
}

SpacePtr extend_space(const SpacePtr& space, std::string_view preferred_name) {
  std::string name(preferred_name);
  while (space->index_of(name)) name += "_";
  auto vars = space->vars;
  vars.push_back(name);
  return make_space(space->coeffs, std::move(vars));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->coeffs == b->coeffs && a->vars == b->vars;
}

const CoefficientRing& Polynomial::coeffs() const {
  if (!space_) throw Error(ErrorCode::kInvalidArgument, "polynomial without a space");
  return space_->coeffs;
}

Polynomial Polynomial::constant(SpacePtr space, const Scalar& value) {
  Polynomial p(std::move(space));
  Scalar c = p.coeffs().normalize(value);
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial(), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::size_t index, std::uint32_t power) {
  Polynomial p(std::move(space));
  p.terms_.push_back(Term{Monomial::variable(index, power), Scalar(1)});
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::string_view name) {
  auto idx = space->index_of(name);
  if (!idx) throw Error(ErrorCode::kUnknownVariable, std::string(name));
  return variable(std::move(space), *idx);
}

Polynomial Polynomial::monomial(SpacePtr space, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(space));
  Scalar v = p.coeffs().normalize(c);
  if (sgn(v) != 0) p.terms_.push_back(Term{m, std::move(v)});
  return p;
}

Polynomial Polynomial::from_terms(SpacePtr space, std::vector<Term> terms) {
  Polynomial p(std::move(space));
  const auto& ring = p.coeffs();
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty()) {
        p.terms_.back().coeff = ring.normalize(p.terms_.back().coeff);
        if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      }
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty()) {
    p.terms_.back().coeff = ring.normalize(p.terms_.back().coeff);
    if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  }
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return kStorageOrder.compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Scalar(0);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    buckets[t.monomial[var]].push_back(Term{t.monomial.with_exponent(var, 0), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(space_, std::move(b)));
  return out;
}

Polynomial Polynomial::in_space(const SpacePtr& target) const {
  if (same_space(space_, target) || !space_) {
    Polynomial p(target);
    p.terms_ = terms_;
    return p;
  }
  if (space_->coeffs != target->coeffs) {
    throw Error(ErrorCode::kIncompatibleRings, space_->coeffs.to_string() + " vs " + target->coeffs.to_string());
  }
  const auto map = slot_map(*space_, *target);
  if (is_identity_map(map)) {
    Polynomial p(target);
    p.terms_ = terms_;
    return p;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(target->vars.size(), 0);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] == kMissing) {
        throw Error(ErrorCode::kUnknownVariable, "variable " + space_->vars[i] + " missing from target space");
      }
      e[map[i]] = t.monomial[i];
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(terms));
}

SpacePtr Polynomial::unify(const Polynomial& a, const Polynomial& b) {
  if (!a.space_) return b.space_;
  if (!b.space_) return a.space_;
  if (same_space(a.space_, b.space_)) return a.space_;
  if (a.space_->coeffs != b.space_->coeffs) {
    throw Error(ErrorCode::kIncompatibleRings,
                a.space_->coeffs.to_string() + " vs " + b.space_->coeffs.to_string());
  }
  // Prefer whichever space already contains the other's variables.
  auto contains_all = [](const PolySpace& big, const PolySpace& small) {
    for (const auto& v : small.vars) {
      if (!big.index_of(v)) return false;
    }
    return true;
  };
  if (contains_all(*a.space_, *b.space_)) return a.space_;
  if (contains_all(*b.space_, *a.space_)) return b.space_;
  auto vars = a.space_->vars;
  for (const auto& v : b.space_->vars) {
    if (!a.space_->index_of(v)) vars.push_back(v);
  }
  return make_space(a.space_->coeffs, std::move(vars));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(space_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial, coeffs().normalize(-t.coeff)});
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  auto space = unify(*this, other);
  if (!space) return *this;
  Polynomial a = in_space(space);
  Polynomial b = other.in_space(space);
  terms_ = merge_add(a.terms_, b.terms_, space->coeffs, false);
  space_ = space;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  auto space = unify(*this, other);
  if (!space) return *this;
  Polynomial a = in_space(space);
  Polynomial b = other.in_space(space);
  terms_ = merge_add(a.terms_, b.terms_, space->coeffs, true);
  space_ = space;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  auto space = Polynomial::unify(a, b);
  if (!space) return Polynomial();
  if (a.is_zero() || b.is_zero()) return Polynomial(space);
  Polynomial x = a.in_space(space);
  Polynomial y = b.in_space(space);
  if (x.terms_.size() == 1) return y.times(x.terms_[0].monomial, x.terms_[0].coeff);
  if (y.terms_.size() == 1) return x.times(y.terms_[0].monomial, y.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) prod.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(space, std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (!space_) return *this;
  Scalar v = coeffs().normalize(c);
  Polynomial p(space_);
  if (sgn(v) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar w = coeffs().normalize(t.coeff * v);
    if (sgn(w) != 0) p.terms_.push_back(Term{t.monomial, std::move(w)});
  }
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial p(space_);
  if (!space_) return p;
  Scalar v = coeffs().normalize(c);
  if (sgn(v) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar w = coeffs().normalize(t.coeff * v);
    if (sgn(w) != 0) p.terms_.push_back(Term{t.monomial * m, std::move(w)});
  }
  return p;
}

Polynomial Polynomial::pow(std::uint64_t exponent) const {
  Polynomial result = Polynomial::constant(space_, Scalar(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  if (!space_) return *this;
  std::vector<const Polynomial*> slot(space_->vars.size(), nullptr);
  for (std::size_t i = 0; i < space_->vars.size(); ++i) {
    auto it = bindings.find(space_->vars[i]);
    if (it != bindings.end()) slot[i] = &it->second;
  }
  Polynomial result(space_);
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> kept(t.monomial.size(), 0);
    Polynomial factor = Polynomial::constant(space_, t.coeff);
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (slot[i]) {
        factor *= slot[i]->pow(t.monomial[i]);
      } else {
        kept[i] = t.monomial[i];
      }
    }
    result += factor * Polynomial::monomial(space_, Monomial(std::move(kept)), Scalar(1));
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (same_space(a.space_, b.space_)) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  return (a - b).is_zero();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    const bool negative = sgn(c) < 0 && coeffs().kind() != CoefficientKind::kPrimeField;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_->vars[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace jacarena
