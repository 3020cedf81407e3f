#include "jacarena/zero_dim.hpp"

#include <deque>
#include <set>
#include <unordered_map>

#include "jacarena/error.hpp"
#include "jacarena/univariate.hpp"

namespace jacarena {

bool Staircase::finite_ring() const {
  for (const auto& r : residues) {
    if (r == 0) return false;
  }
  return true;
}

Integer Staircase::cardinality() const {
  Integer n = 1;
  for (const auto& r : residues) n *= r;
  return n;
}

namespace {

bool monomial_less(const Monomial& a, const Monomial& b) { return MonomialOrder::degrevlex().compare(a, b) < 0; }

}  // namespace

std::optional<Staircase> staircase(const RingPresentation& ring) {
  Staircase out;
  if (ring.is_trivial()) return out;
  const auto& basis = ring.basis().basis();
  const bool over_zz = ring.coeffs().is_integers();
  std::vector<Monomial> unit_leads;
  for (const auto& g : basis) {
    const Term& lt = g.terms().front();
    if (!over_zz || lt.coeff == 1) unit_leads.push_back(lt.monomial);
  }
  const std::size_t n = ring.vars().size();
  for (std::size_t i = 0; i < n; ++i) {
    bool bounded = false;
    for (const auto& m : unit_leads) {
      if (m.degree() == m[i]) bounded = true;
    }
    if (!bounded) return std::nullopt;
  }
  auto reducible = [&](const Monomial& m) {
    for (const auto& l : unit_leads) {
      if (l.divides(m)) return true;
    }
    return false;
  };
  std::set<Monomial, decltype(&monomial_less)> seen(&monomial_less);
  std::deque<Monomial> queue;
  if (!reducible(Monomial())) {
    queue.push_back(Monomial());
    seen.insert(Monomial());
  }
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.monomials.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial c = m * Monomial::variable(i, 1);
      if (!reducible(c) && seen.insert(c).second) queue.push_back(c);
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(), monomial_less);
  for (const auto& m : out.monomials) {
    if (ring.coeffs().kind() == CoefficientKind::kPrimeField) {
      out.residues.push_back(ring.coeffs().characteristic());
    } else if (!over_zz) {
      out.residues.push_back(0);
    } else {
      Integer d = 0;
      for (const auto& g : basis) {
        const Term& lt = g.terms().front();
        if (lt.monomial.divides(m) && (d == 0 || lt.coeff.get_num() < d)) d = lt.coeff.get_num();
      }
      out.residues.push_back(d);
    }
  }
  return out;
}

Polynomial minimal_polynomial(const Polynomial& x, const RingPresentation& ring) {
  const CoefficientRing& k = ring.coeffs();
  if (!k.is_field()) throw Error(ErrorCode::kUnsupportedRing, "minimal polynomial needs field coefficients");
  const auto stairs = staircase(ring);
  if (!stairs) throw Error(ErrorCode::kNotFiniteDimensional, ring.to_string() + " has an infinite staircase");
  const SpacePtr tspace = make_space(k, {"T"});

  // Rows of an echelon form: reduced power vector, pivot monomial, and the
  // T-polynomial expressing the row in terms of powers of x.
  struct Row {
    Polynomial vec;
    Monomial pivot;
    Polynomial comb;
  };
  std::vector<Row> rows;
  const Polynomial xs = ring.reduce(x);
  Polynomial power = ring.reduce(ring.constant(1));
  for (std::size_t i = 0; i <= stairs->monomials.size(); ++i) {
    Polynomial v = power;
    Polynomial comb = Polynomial::variable(tspace, 0, static_cast<std::uint32_t>(i));
    for (const auto& row : rows) {
      const Scalar c = v.coefficient(row.pivot);
      if (c == 0) continue;
      const Scalar f = k.normalize(c * k.inverse(row.vec.coefficient(row.pivot)));
      v -= row.vec.scaled(f);
      comb -= row.comb.scaled(f);
    }
    if (v.is_zero()) return comb;
    rows.push_back(Row{v, v.terms().front().monomial, comb});
    power = ring.reduce(power * xs);
  }
  throw Error(ErrorCode::kNotFiniteDimensional, "no linear dependence among powers");
}

bool witness_holds(const Polynomial& x, const RingPresentation& ring, const ZeroDimWitness& w) {
  const Polynomial xs = x.in_space(ring.space());
  const Polynomial one = ring.constant(1);
  return ring.is_zero(xs.pow(w.exponent) * (one - w.a.in_space(ring.space()) * xs));
}

namespace {

// Z/n: split n = n1*n2 with n2 the part coprime to x; then x^e kills n1 and
// a = 1/x mod n2 kills n2.
std::pair<std::uint64_t, Integer> integer_witness(const Integer& x, const Integer& n) {
  Integer n2 = n;
  for (;;) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), n2.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
    n2 /= g;
  }
  const Integer n1 = n / n2;
  std::uint64_t e = 1;
  Integer p = pos_mod(x, n1);
  while (p != 0) {
    p = pos_mod(p * x, n1);
    ++e;
  }
  Integer a = 0;
  if (n2 != 1) mpz_invert(a.get_mpz_t(), x.get_mpz_t(), n2.get_mpz_t());
  return {e, a};
}

ZeroDimWitness univariate_witness(const Polynomial& x, const Polynomial& m, const SpacePtr& space) {
  using namespace univariate;
  const CoefficientRing& k = space->coeffs;
  const Dense md = to_dense(m, 0);
  const Dense xd = mod(to_dense(x, 0), md, k);
  Dense n2 = md;
  for (;;) {
    Dense s, t;
    const Dense g = gcdext(n2, xd, k, s, t);
    if (degree(g) <= 0) break;
    Dense q, r;
    divmod(n2, g, k, q, r);
    n2 = q;
  }
  Dense m1, r;
  divmod(md, n2, k, m1, r);
  ZeroDimWitness w;
  Dense p = mod(Dense{Scalar(1)}, m1, k);
  while (!p.empty()) {
    p = mod(mul(p, xd, k), m1, k);
    ++w.exponent;
  }
  w.a = Polynomial(space);
  if (degree(n2) > 0) {
    Dense s, t;
    gcdext(mod(xd, n2, k), n2, k, s, t);
    w.a = from_dense(s, space, 0);
  }
  return w;
}

ZeroDimWitness minimal_polynomial_witness(const Polynomial& x, const RingPresentation& ring) {
  const Polynomial mu = minimal_polynomial(x, ring);
  const CoefficientRing& k = ring.coeffs();
  const auto coeffs = univariate::to_dense(mu, 0);
  ZeroDimWitness w;
  while (coeffs[w.exponent] == 0) ++w.exponent;
  // mu = T^e g with g(0) != 0; g = g(0) + T r, so a = -r(x)/g(0).
  const Scalar g0 = coeffs[w.exponent];
  const Scalar scale = k.normalize(-k.inverse(g0));
  const Polynomial xs = ring.reduce(x);
  Polynomial a(ring.space());
  Polynomial power = ring.constant(1);
  for (std::size_t j = w.exponent + 1; j < coeffs.size(); ++j) {
    a += power.scaled(k.normalize(coeffs[j] * scale));
    power = ring.reduce(power * xs);
  }
  w.a = ring.reduce(a);
  return w;
}

ZeroDimWitness cycle_witness(const Polynomial& x, const RingPresentation& ring, const Integer& limit) {
  std::unordered_map<std::string, std::uint64_t> seen;
  const Polynomial xs = ring.reduce(x);
  Polynomial power = xs;
  for (std::uint64_t i = 1; Integer(static_cast<unsigned long>(i)) <= limit + 1; ++i) {
    if (power.is_zero()) return ZeroDimWitness{i, Polynomial(ring.space())};
    auto [it, fresh] = seen.emplace(power.to_string(), i);
    if (!fresh) {
      const std::uint64_t first = it->second;
      return ZeroDimWitness{first, xs.pow(i - first - 1)};
    }
    power = ring.reduce(power * xs);
  }
  throw Error(ErrorCode::kNotZeroDimensional, "no repetition among powers");
}

}  // namespace

ZeroDimWitness zero_dim_witness(const Polynomial& x, const RingPtr& ring) {
  const Polynomial xs = ring->reduce(x);
  const auto& basis = ring->basis().basis();
  const CoefficientRing& k = ring->coeffs();
  const std::size_t nvars = ring->vars().size();
  ZeroDimWitness w;
  bool found = false;
  if (ring->is_trivial()) {
    w = ZeroDimWitness{0, Polynomial(ring->space())};
    found = true;
  } else if (k.is_integers() && nvars == 0 && basis.size() == 1) {
    const Integer n = basis[0].constant_term().get_num();
    const auto [e, a] = integer_witness(xs.constant_term().get_num(), n);
    w = ZeroDimWitness{e, Polynomial::constant(ring->space(), Scalar(a))};
    found = true;
  } else if (k.is_field() && nvars == 0) {
    if (xs.is_zero()) {
      w = ZeroDimWitness{1, Polynomial(ring->space())};
    } else {
      w = ZeroDimWitness{0, Polynomial::constant(ring->space(), k.inverse(xs.constant_term()))};
    }
    found = true;
  } else if (k.is_field() && nvars == 1 && basis.size() == 1) {
    w = univariate_witness(xs, basis[0], ring->space());
    found = true;
  } else if (k.is_field()) {
    if (staircase(*ring)) {
      w = minimal_polynomial_witness(xs, *ring);
      found = true;
    }
  } else if (auto stairs = staircase(*ring); stairs && stairs->finite_ring()) {
    w = cycle_witness(xs, *ring, stairs->cardinality());
    found = true;
  }
  if (!found) throw Error(ErrorCode::kNotZeroDimensional, ring->to_string() + " is not a finite ring or algebra");
  w.a = ring->reduce(w.a);
  if (!witness_holds(xs, *ring, w)) {
    throw Error(ErrorCode::kNotZeroDimensional, "witness check failed for " + xs.to_string());
  }
  return w;
}

}  // namespace jacarena
