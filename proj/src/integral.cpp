#include "jacarena/integral.hpp"

#include <algorithm>
#include <cstdlib>

#include "jacarena/error.hpp"

namespace jacarena {

std::uint64_t saturation_cap() {
  if (const char* env = std::getenv("JACARENA_SATURATION_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 16;
}

Localization::Localization(RingPtr base, Polynomial a) : base_(std::move(base)), a_(base_->reduce(a)) {
  scalar_a_ = a_.is_constant() ? a_.constant_term() : Scalar(0);
}

LocalizedElement Localization::normalize(LocalizedElement x) const {
  x.numerator = base_->reduce(x.numerator);
  if (x.numerator.is_zero()) {
    x.exponent = 0;
    return x;
  }
  if (scalar_a_ == 0 || x.exponent == 0) return x;
  const CoefficientRing& k = base_->coeffs();
  if (k.is_field()) {
    Scalar inv = 1;
    const Scalar ia = k.inverse(scalar_a_);
    for (std::uint64_t i = 0; i < x.exponent; ++i) inv = k.normalize(inv * ia);
    x.numerator = base_->reduce(x.numerator.scaled(inv));
    x.exponent = 0;
    return x;
  }
  const Integer d = abs(scalar_a_.get_num());
  while (x.exponent > 0) {
    bool divisible = true;
    for (const auto& t : x.numerator.terms()) {
      if (!mpz_divisible_p(t.coeff.get_num_mpz_t(), d.get_mpz_t())) {
        divisible = false;
        break;
      }
    }
    if (!divisible) break;
    std::vector<Term> terms;
    for (const auto& t : x.numerator.terms()) terms.push_back(Term{t.monomial, t.coeff / scalar_a_});
    x.numerator = Polynomial::from_terms(x.numerator.space(), std::move(terms));
    --x.exponent;
  }
  x.numerator = base_->reduce(x.numerator);
  return x;
}

Polynomial Localization::numerator_at(const LocalizedElement& x, std::uint64_t exponent) const {
  return x.numerator * a_.pow(exponent - x.exponent);
}

LocalizedElement Localization::add(const LocalizedElement& x, const LocalizedElement& y) const {
  const std::uint64_t e = std::max(x.exponent, y.exponent);
  return normalize({numerator_at(x, e) + numerator_at(y, e), e});
}

LocalizedElement Localization::sub(const LocalizedElement& x, const LocalizedElement& y) const {
  const std::uint64_t e = std::max(x.exponent, y.exponent);
  return normalize({numerator_at(x, e) - numerator_at(y, e), e});
}

LocalizedElement Localization::mul(const LocalizedElement& x, const LocalizedElement& y) const {
  return normalize({x.numerator * y.numerator, x.exponent + y.exponent});
}

LocalizedElement Localization::neg(const LocalizedElement& x) const { return {-x.numerator, x.exponent}; }

LocalizedElement Localization::over_a(const LocalizedElement& x) const {
  return normalize({x.numerator, x.exponent + 1});
}

bool Localization::equal(const LocalizedElement& x, const LocalizedElement& y, std::uint64_t bound) const {
  const std::uint64_t e = std::max(x.exponent, y.exponent);
  Polynomial diff = base_->reduce(numerator_at(x, e) - numerator_at(y, e));
  for (std::uint64_t k = 0; k <= bound; ++k) {
    if (diff.is_zero()) return true;
    diff = base_->reduce(diff * a_);
  }
  return false;
}

MonogenicAlgebra MonogenicAlgebra::make(RingPtr base, RingPtr algebra, std::string_view generator,
                                        const Polynomial& relation) {
  const auto gen = algebra->space()->index_of(generator);
  if (!gen) throw Error(ErrorCode::kNotMonogenic, "generator " + std::string(generator) + " is not a variable");
  if (base->coeffs() != algebra->coeffs()) throw Error(ErrorCode::kNotMonogenic, "coefficient rings differ");
  for (const auto& v : base->vars()) {
    if (v == generator || !algebra->space()->index_of(v)) {
      throw Error(ErrorCode::kNotMonogenic, "base variable " + v + " missing from the algebra");
    }
  }
  for (const auto& v : algebra->vars()) {
    if (v != generator && !base->space()->index_of(v)) {
      throw Error(ErrorCode::kNotMonogenic, "algebra variable " + v + " is neither the generator nor in the base");
    }
  }
  const Polynomial rel = relation.in_space(algebra->space());
  if (!algebra->is_zero(rel)) {
    throw Error(ErrorCode::kInvalidArgument, "relation " + rel.to_string() + " does not hold in the algebra");
  }
  MonogenicAlgebra mono;
  mono.base = std::move(base);
  mono.algebra = std::move(algebra);
  mono.generator = *gen;
  for (const auto& c : rel.coefficients_in(*gen)) {
    mono.relation.push_back(mono.base->reduce(c.in_space(mono.base->space())));
  }
  if (mono.relation.back().is_zero()) {
    throw Error(ErrorCode::kLeadingCoefficientZero, "leading coefficient of " + rel.to_string() + " vanishes");
  }
  return mono;
}

namespace {

// Class of q in A_a[X]/<relation>, as coordinates on 1, X, ..., X^(k-1).
std::vector<LocalizedElement> coordinates(const Polynomial& q, const MonogenicAlgebra& mono, const Localization& loc) {
  const std::size_t k = mono.degree();
  std::vector<LocalizedElement> cs;
  for (const auto& c : q.in_space(mono.algebra->space()).coefficients_in(mono.generator)) {
    cs.push_back(loc.from(c.in_space(mono.base->space())));
  }
  while (cs.size() < k) cs.push_back(loc.from(Polynomial(mono.base->space())));
  for (std::size_t top = cs.size(); top-- > k;) {
    if (cs[top].numerator.is_zero()) continue;
    // X^k = -(p_0 + ... + p_{k-1} X^(k-1)) / p_k
    const LocalizedElement t = loc.over_a(cs[top]);
    for (std::size_t i = 0; i < k; ++i) {
      cs[top - k + i] = loc.sub(cs[top - k + i], loc.mul(t, loc.from(mono.relation[i])));
    }
    cs[top] = loc.from(Polynomial(mono.base->space()));
  }
  cs.resize(k);
  return cs;
}

Polynomial power_sum(const std::vector<Polynomial>& c, const Polynomial& y, const RingPresentation& ring) {
  Polynomial sum(ring.space());
  Polynomial p = ring.constant(1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    sum += c[j].in_space(ring.space()) * p;
    p = ring.reduce(p * y);
  }
  return sum;
}

}  // namespace

std::vector<LocalizedElement> localized_dependence(const Polynomial& b, const MonogenicAlgebra& mono) {
  const Localization loc(mono.base, mono.leading());
  const std::size_t k = mono.degree();
  const Polynomial bs = b.in_space(mono.algebra->space());
  std::vector<std::vector<LocalizedElement>> m(k, std::vector<LocalizedElement>(k));
  Polynomial xj = mono.algebra->constant(1);
  const Polynomial gen = mono.algebra->variable(mono.generator);
  for (std::size_t j = 0; j < k; ++j) {
    const auto col = coordinates(xj * bs, mono, loc);
    for (std::size_t i = 0; i < k; ++i) m[i][j] = col[i];
    xj = xj * gen;
  }
  const LocalizedElement one = loc.from(mono.base->constant(1));
  const auto vec = berkowitz<LocalizedElement>(
      m, one, [&](const LocalizedElement& x, const LocalizedElement& y) { return loc.add(x, y); },
      [&](const LocalizedElement& x, const LocalizedElement& y) { return loc.mul(x, y); },
      [&](const LocalizedElement& x) { return loc.neg(x); });
  std::vector<LocalizedElement> q(k);
  for (std::size_t j = 0; j < k; ++j) q[j] = vec[k - j];
  return q;
}

IntegralRelation IntegralRelation::make(const MonogenicAlgebra& mono, Polynomial y, Polynomial a, std::uint64_t l,
                                        std::vector<Polynomial> c) {
  IntegralRelation r{std::move(y), std::move(a), l, c.size(), std::move(c)};
  if (!r.holds(mono)) throw Error(ErrorCode::kInvalidCertificate, "integral relation does not hold");
  return r;
}

bool IntegralRelation::holds(const MonogenicAlgebra& mono) const {
  const RingPresentation& b = *mono.algebra;
  const Polynomial ys = b.reduce(y);
  const Polynomial lhs = a.in_space(b.space()).pow(l) * ys.pow(d);
  return b.is_zero(lhs - power_sum(c, ys, b));
}

IntegralRelation integral_dependence(const Polynomial& b, const MonogenicAlgebra& mono) {
  const Localization loc(mono.base, mono.leading());
  const auto q = localized_dependence(b, mono);
  const std::size_t d = q.size();
  std::uint64_t big = 0;
  for (const auto& e : q) big = std::max(big, e.exponent);
  std::vector<Polynomial> c;
  for (const auto& e : q) c.push_back(mono.base->reduce(-loc.numerator_at(e, big)));

  const RingPresentation& alg = *mono.algebra;
  const Polynomial a = mono.leading();
  const Polynomial ab = alg.reduce(a.in_space(alg.space()));
  const Polynomial ys = alg.reduce(b);
  Polynomial expr = alg.reduce(ab.pow(big) * ys.pow(d) - power_sum(c, ys, alg));
  const std::uint64_t cap = saturation_cap();
  for (std::uint64_t extra = 0; extra <= cap; ++extra) {
    if (expr.is_zero()) {
      const Polynomial ae = a.pow(extra);
      for (auto& cj : c) cj = mono.base->reduce(cj * ae);
      return IntegralRelation::make(mono, ys, a, big + extra, std::move(c));
    }
    expr = alg.reduce(expr * ab);
  }
  throw Error(ErrorCode::kSaturationCapExceeded,
              "integral relation for " + ys.to_string() + " needs a^l beyond the cap");
}

Polynomial invert_in_integral_quotient(const Polynomial& x, const Polynomial& b, const IntegralRelation& dep,
                                       const MonogenicAlgebra& mono) {
  if (dep.l != 0) throw Error(ErrorCode::kNonMonicDependence, "dependence has a^l with l > 0");
  const RingPresentation& base = *mono.base;
  const Polynomial xs = base.reduce(x);
  // b^m = sum c_j b^j, so 1 = x * sum_j c_j x^(m-1-j) once b x = 1.
  Polynomial out(base.space());
  Polynomial p = base.constant(1);
  for (std::size_t j = dep.d; j-- > 0;) {
    out += dep.c[j] * p;
    p = base.reduce(p * xs);
  }
  out = base.reduce(out);
  const RingPresentation& alg = *mono.algebra;
  const Polynomial xb = xs.in_space(alg.space());
  const RingPtr quotient = quotient_extend(mono.algebra, {alg.constant(1) - b.in_space(alg.space()) * xb});
  if (!quotient->is_zero(alg.constant(1) - out.in_space(alg.space()) * xb)) {
    throw Error(ErrorCode::kInvalidCertificate, "inverse check failed");
  }
  return out;
}

Polynomial loc_key_clear(const Polynomial& a, const Polynomial& a1, const Polynomial& a2p, std::uint64_t e) {
  const SpacePtr space = Polynomial::unify(Polynomial(Polynomial::unify(a, a1)), a2p);
  if (!space) throw Error(ErrorCode::kInvalidArgument, "loc_key_clear needs a polynomial space");
  const Polynomial one = Polynomial::constant(space, 1);
  const Polynomial aa = (a1 * a).in_space(space);
  Polynomial sum(space);
  Polynomial p = one;
  for (std::uint64_t i = 0; i < e; ++i) {
    sum += p;
    p *= aa;
  }
  const Polynomial a1e = a1.in_space(space).pow(e);
  const Polynomial a2 = sum + a1e * a2p;
  const Polynomial u = one - aa;
  const Polynomial lhs = one - a2 * u;
  const Polynomial rhs = a1e * (a.in_space(space).pow(e) - a2p * u);
  if (lhs != rhs) throw Error(ErrorCode::kInvalidCertificate, "loc_key_clear identity failed");
  return a2;
}

Polynomial key_elementary_transfer(const Polynomial& a0, const Polynomial& a1, const Polynomial& b2,
                                   const MonogenicAlgebra& mono) {
  const RingPresentation& base = *mono.base;
  const RingPresentation& alg = *mono.algebra;
  const Localization loc(mono.base, mono.leading());
  const Polynomial& a = mono.leading();
  const Polynomial a1a0 = base.reduce(a1.in_space(base.space()) * a0.in_space(base.space()));
  const Polynomial x = base.reduce(base.constant(1) - a1a0 * a);

  // Integral inverse over A_a: a2' = -sum_j q_j x^(m-1-j).
  const auto q = localized_dependence(b2, mono);
  const std::size_t m = q.size();
  LocalizedElement a2p = loc.from(Polynomial(base.space()));
  Polynomial xp = base.constant(1);
  for (std::size_t j = m; j-- > 0;) {
    a2p = loc.sub(a2p, loc.mul(q[j], loc.from(xp)));
    xp = base.reduce(xp * x);
  }
  const std::uint64_t e = a2p.exponent;
  const Polynomial& a2pp = a2p.numerator;

  const Polynomial xb = x.in_space(alg.space());
  const RingPtr quotient = quotient_extend(mono.algebra, {alg.constant(1) - b2.in_space(alg.space()) * xb});
  const Polynomial ab = a.in_space(alg.space());
  Polynomial probe = quotient->reduce(ab.pow(e) - a2pp.in_space(alg.space()) * xb);
  const std::uint64_t cap = saturation_cap();
  std::uint64_t sat = 0;
  while (!probe.is_zero()) {
    if (++sat > cap) throw Error(ErrorCode::kSaturationCapExceeded, "saturation exponent beyond the cap");
    probe = quotient->reduce(probe * ab);
  }
  const Polynomial a2 = base.reduce(loc_key_clear(a, a1a0, base.reduce(a.pow(sat) * a2pp), e + sat));
  if (!quotient->is_zero(alg.constant(1) - a2.in_space(alg.space()) * xb)) {
    throw Error(ErrorCode::kInvalidCertificate, "key elementary transfer check failed");
  }
  return a2;
}

}  // namespace jacarena
