#include "jacarena/univariate.hpp"

#include "jacarena/error.hpp"

namespace jacarena::univariate {

namespace {

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense scale(const Dense& a, const Scalar& c, const CoefficientRing& k) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.normalize(a[i] * c);
  trim(out);
  return out;
}

}  // namespace

Dense to_dense(const Polynomial& p, std::size_t var) {
  Dense out(p.is_zero() ? 0 : p.degree_in(var) + 1, Scalar(0));
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (i != var && t.monomial[i] != 0) {
        throw Error(ErrorCode::kInvalidArgument, "polynomial is not univariate: " + p.to_string());
      }
    }
    out[t.monomial[var]] = t.coeff;
  }
  return out;
}

Polynomial from_dense(const Dense& d, const SpacePtr& space, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) terms.push_back(Term{Monomial::variable(var, static_cast<std::uint32_t>(i)), d[i]});
  }
  return Polynomial::from_terms(space, std::move(terms));
}

long degree(const Dense& a) { return static_cast<long>(a.size()) - 1; }

Dense sub(const Dense& a, const Dense& b, const CoefficientRing& k) {
  Dense out(std::max(a.size(), b.size()), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = k.normalize(out[i] - b[i]);
  trim(out);
  return out;
}

Dense mul(const Dense& a, const Dense& b, const CoefficientRing& k) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) c = k.normalize(c);
  trim(out);
  return out;
}

void divmod(const Dense& a, const Dense& b, const CoefficientRing& k, Dense& q, Dense& r) {
  if (b.empty()) throw Error(ErrorCode::kInvalidArgument, "division by zero polynomial");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Scalar(0));
  const Scalar inv = k.inverse(b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Scalar c = k.normalize(r.back() * inv);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = k.normalize(r[shift + j] - c * b[j]);
    trim(r);
  }
  trim(q);
}

Dense mod(const Dense& a, const Dense& b, const CoefficientRing& k) {
  Dense q, r;
  divmod(a, b, k, q, r);
  return r;
}

Dense gcdext(const Dense& a, const Dense& b, const CoefficientRing& k, Dense& s, Dense& t) {
  Dense r0 = a, r1 = b, s0{Scalar(1)}, s1{}, t0{}, t1{Scalar(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Dense q, r;
    divmod(r0, r1, k, q, r);
    Dense s2 = sub(s0, mul(q, s1, k), k);
    Dense t2 = sub(t0, mul(q, t1, k), k);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return {};
  }
  const Scalar inv = k.inverse(r0.back());
  s = scale(s0, inv, k);
  t = scale(t0, inv, k);
  return scale(r0, inv, k);
}

}  // namespace jacarena::univariate
