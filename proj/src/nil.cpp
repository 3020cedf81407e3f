#include "jacarena/nil.hpp"

#include <algorithm>

#include "jacarena/error.hpp"
#include "jacarena/groebner.hpp"

namespace jacarena {

namespace {

SpacePtr common_space(const Polynomial& x, const std::vector<Polynomial>& gens) {
  SpacePtr space = x.space();
  for (const auto& g : gens) space = Polynomial::unify(Polynomial(space), g);
  return space;
}

std::vector<Polynomial> lift_all(const std::vector<Polynomial>& gens, const SpacePtr& space) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.in_space(space));
  return out;
}

struct Rabinowitsch {
  SpacePtr space;  // original variables followed by T
  std::vector<Polynomial> gens;
};

Rabinowitsch rabinowitsch_system(const Polynomial& x, const std::vector<Polynomial>& gens, const SpacePtr& space) {
  Rabinowitsch r;
  r.space = extend_space(space, "T");
  r.gens = lift_all(gens, r.space);
  const Polynomial t = Polynomial::variable(r.space, r.space->vars.size() - 1);
  r.gens.push_back(Polynomial::constant(r.space, 1) - t * x.in_space(r.space));
  return r;
}

}  // namespace

bool certificate_holds(const Polynomial& x, const std::vector<Polynomial>& gens, const NilCertificate& cert) {
  if (cert.cofactors.size() != gens.size()) return false;
  Polynomial rhs;
  for (std::size_t i = 0; i < gens.size(); ++i) rhs += cert.cofactors[i] * gens[i];
  Polynomial lhs = x.pow(cert.exponent);
  if (!x.space() && cert.exponent == 0) lhs = Polynomial::constant(rhs.space(), 1);
  return (lhs - rhs).is_zero();
}

bool in_nilradical(const Polynomial& x, const std::vector<Polynomial>& gens) {
  if (x.is_zero()) return true;
  const SpacePtr space = common_space(x, gens);
  const Rabinowitsch r = rabinowitsch_system(x, gens, space);
  return groebner(r.gens).is_unit_ideal();
}

std::optional<NilCertificate> nil_certificate_by_search(const Polynomial& x, const std::vector<Polynomial>& gens,
                                                        std::uint64_t limit) {
  const SpacePtr space = common_space(x, gens);
  if (x.is_zero()) return NilCertificate{1, std::vector<Polynomial>(gens.size(), Polynomial(space))};
  const std::vector<Polynomial> lifted = lift_all(gens, space);
  const Polynomial xs = x.in_space(space);
  const GroebnerBasis gb = groebner(lifted, MonomialOrder::degrevlex(), true);
  // x^e == sum cof_j g_j + rem_e, advanced by multiplying through by x.
  std::vector<Polynomial> cof(lifted.size(), Polynomial(space));
  Polynomial rem = Polynomial::constant(space, 1);
  for (std::uint64_t e = 1; e <= limit; ++e) {
    auto div = gb.divide(rem * xs);
    for (std::size_t j = 0; j < cof.size(); ++j) cof[j] = cof[j] * xs + div.cofactors[j];
    rem = std::move(div.remainder);
    if (rem.is_zero()) return NilCertificate{e, std::move(cof)};
  }
  return std::nullopt;
}

std::optional<NilCertificate> nil_certificate_by_rabinowitsch(const Polynomial& x,
                                                              const std::vector<Polynomial>& gens) {
  const SpacePtr space = common_space(x, gens);
  if (x.is_zero()) return NilCertificate{1, std::vector<Polynomial>(gens.size(), Polynomial(space))};
  const Rabinowitsch r = rabinowitsch_system(x, gens, space);
  const GroebnerBasis gb = groebner(r.gens, MonomialOrder::degrevlex(), true);
  if (!gb.is_unit_ideal()) return std::nullopt;
  const auto div = gb.divide(Polynomial::constant(r.space, 1));
  // 1 == sum c_i(T) g_i + q (1 - T x); put T = 1/x and multiply by x^m.
  const std::size_t t = r.space->vars.size() - 1;
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) m = std::max(m, div.cofactors[i].degree_in(t));
  const Polynomial xs = x.in_space(space);
  std::vector<Polynomial> powers{Polynomial::constant(space, 1)};
  for (std::uint32_t k = 1; k <= m; ++k) powers.push_back(powers.back() * xs);
  NilCertificate cert{m, {}};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto parts = div.cofactors[i].coefficients_in(t);
    Polynomial c(space);
    for (std::size_t j = 0; j < parts.size(); ++j) c += parts[j].in_space(space) * powers[m - j];
    cert.cofactors.push_back(std::move(c));
  }
  return cert;
}

namespace {

// Least e <= limit with x^e reducing to zero, found without cofactors.
std::optional<std::uint64_t> least_exponent(const Polynomial& x, const std::vector<Polynomial>& gens,
                                            std::uint64_t limit) {
  const SpacePtr space = common_space(x, gens);
  if (x.is_zero()) return 1;
  const GroebnerBasis gb = groebner(lift_all(gens, space));
  const Polynomial xs = x.in_space(space);
  Polynomial rem = Polynomial::constant(space, 1);
  for (std::uint64_t e = 1; e <= limit; ++e) {
    rem = gb.reduce(rem * xs);
    if (rem.is_zero()) return e;
  }
  return std::nullopt;
}

// Drops generators one at a time while x^e stays in the ideal. Tracking
// cofactors is far more expensive than plain bases, so this pays for itself
// on long constraint lists.
std::vector<std::size_t> prune_generators(const Polynomial& target, const std::vector<Polynomial>& gens) {
  const SpacePtr space = common_space(target, gens);
  std::vector<std::size_t> keep(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) keep[i] = i;
  for (std::size_t r = gens.size(); r-- > 0;) {
    std::vector<Polynomial> trial;
    for (std::size_t i : keep) {
      if (i != r) trial.push_back(gens[i].in_space(space));
    }
    if (groebner(trial).reduce(target.in_space(space)).is_zero()) {
      keep.erase(std::find(keep.begin(), keep.end(), r));
    }
  }
  return keep;
}

}  // namespace

std::optional<NilCertificate> nil_member(const Polynomial& x, const std::vector<Polynomial>& gens,
                                         const NilOptions& options) {
  if (!in_nilradical(x, gens)) return std::nullopt;
  const SpacePtr space = common_space(x, gens);
  const auto e = least_exponent(x, gens, options.search_limit);
  if (!e) return nil_certificate_by_rabinowitsch(x, gens);
  if (x.is_zero()) return nil_certificate_by_search(x, gens, 1);
  const std::vector<std::size_t> keep = prune_generators(x.in_space(space).pow(*e), gens);
  std::vector<Polynomial> sub;
  for (std::size_t i : keep) sub.push_back(gens[i]);
  auto cert = nil_certificate_by_search(x, sub, *e);
  if (!cert) return nil_certificate_by_rabinowitsch(x, gens);
  NilCertificate out{cert->exponent, std::vector<Polynomial>(gens.size(), Polynomial(space))};
  for (std::size_t k = 0; k < keep.size(); ++k) out.cofactors[keep[k]] = std::move(cert->cofactors[k]);
  return out;
}

NilCertificate radical_combine(const Polynomial& x, const Polynomial& y, const std::vector<Polynomial>& gens,
                               const NilCertificate& cert_xy, const NilCertificate& cert_x) {
  std::vector<Polynomial> with_y = gens;
  with_y.push_back(y);
  if (!certificate_holds(x * y, gens, cert_xy)) {
    throw Error(ErrorCode::kInvalidCertificate, "certificate for xy does not verify");
  }
  if (!certificate_holds(x, with_y, cert_x)) {
    throw Error(ErrorCode::kInvalidCertificate, "certificate for x over U and y does not verify");
  }
  const Polynomial& c = cert_x.cofactors.back();
  if (c.is_zero()) {
    return NilCertificate{cert_x.exponent,
                          std::vector<Polynomial>(cert_x.cofactors.begin(), cert_x.cofactors.end() - 1)};
  }
  // x^n = A + c y with A in <U>. Then
  // x^(nm+m) = c^m (xy)^m + x^m A sum_{k>=1} binom(m,k) A^(k-1) (cy)^(m-k).
  const std::uint64_t n = cert_x.exponent;
  const std::uint64_t m = cert_xy.exponent;
  Polynomial a_part;
  for (std::size_t i = 0; i < gens.size(); ++i) a_part += cert_x.cofactors[i] * gens[i];
  const Polynomial cy = c * y;
  Polynomial tail;
  Polynomial a_pow = Polynomial::constant(Polynomial::unify(x, y), 1);
  mpz_class binom = 1;
  for (std::uint64_t k = 1; k <= m; ++k) {
    binom = binom * (m - k + 1) / k;
    tail += (a_pow * cy.pow(m - k)).scaled(Scalar(binom));
    a_pow *= a_part;
  }
  const Polynomial cm = c.pow(m);
  const Polynomial xm_tail = x.pow(m) * tail;
  NilCertificate out{n * m + m, {}};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.cofactors.push_back(cm * cert_xy.cofactors[i] + xm_tail * cert_x.cofactors[i]);
  }
  return out;
}

UnitDecomposition unit_poly_decompose(const Polynomial& u, const Polynomial& v,
                                      const std::vector<Polynomial>& base_relations, std::size_t var) {
  SpacePtr space = Polynomial::unify(u, v);
  for (const auto& r : base_relations) space = Polynomial::unify(Polynomial(space), r);
  const std::vector<Polynomial> rels = lift_all(base_relations, space);
  const Polynomial us = u.in_space(space);
  const Polynomial vs = v.in_space(space);
  const GroebnerBasis gb = groebner(rels);
  const Polynomial one = Polynomial::constant(space, 1);
  if (!gb.reduce(us * vs - one).is_zero()) {
    throw Error(ErrorCode::kNotAUnit, us.to_string() + " times " + vs.to_string() + " is not 1");
  }

  UnitDecomposition out;
  const auto uc = us.coefficients_in(var);
  const auto vc = vs.coefficients_in(var);
  out.constant_part = uc[0];
  out.constant_inverse = vc[0];
  if (!gb.reduce(uc[0] * vc[0] - one).is_zero()) {
    throw Error(ErrorCode::kNotAUnit, "constant coefficients are not inverse");
  }
  for (std::size_t j = 1; j < uc.size(); ++j) {
    if (gb.reduce(uc[j]).is_zero()) continue;
    auto cert = nil_member(uc[j], rels);
    if (!cert) throw Error(ErrorCode::kInvalidCertificate, "coefficient " + uc[j].to_string() + " is not nilpotent");
    out.nilpotent_coefficients.push_back({static_cast<std::uint32_t>(j), uc[j], std::move(*cert)});
  }
  out.leading_bound = static_cast<std::uint64_t>(vs.degree_in(var)) + 1;
  if (uc.size() > 1 && !gb.reduce(uc.back().pow(out.leading_bound)).is_zero()) {
    throw Error(ErrorCode::kInvalidCertificate, "leading coefficient bound fails");
  }
  return out;
}

}  // namespace jacarena
