#include "jacarena/groebner.hpp"

#include <algorithm>
#include <map>

#include "jacarena/error.hpp"

namespace jacarena {
namespace {

using TermVec = std::vector<Term>;

struct Context {
  const CoefficientRing& ring;
  MonomialOrder order;
  bool over_integers;
};

TermVec sorted_terms(const Polynomial& p, MonomialOrder order) {
  TermVec v = p.terms();
  if (order.kind() != MonomialOrder::Kind::kDegRevLex) {
    std::sort(v.begin(), v.end(), [order](const Term& a, const Term& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  }
  return v;
}

Polynomial to_poly(const SpacePtr& space, TermVec v) { return Polynomial::from_terms(space, std::move(v)); }

// a[from..] - c * m * b, all sorted descending by ctx.order.
TermVec sub_scaled(const TermVec& a, std::size_t from, const Scalar& c, const Monomial& m, const TermVec& b,
                   const Context& ctx) {
  TermVec out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from;
  std::size_t j = 0;
  Monomial bm;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      bm = b[j].monomial * m;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() || have_b) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (!have_b) cmp = 1;
    else cmp = ctx.order.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Scalar v = ctx.ring.normalize(-(c * b[j].coeff));
      if (sgn(v) != 0) out.push_back(Term{bm, std::move(v)});
      ++j;
      load_b();
    } else {
      Scalar v = ctx.ring.normalize(a[i].coeff - c * b[j].coeff);
      if (sgn(v) != 0) out.push_back(Term{bm, std::move(v)});
      ++i;
      ++j;
      load_b();
    }
  }
  return out;
}

TermVec scale_vec(const TermVec& a, const Scalar& c, const Monomial& m, const Context& ctx) {
  TermVec out;
  out.reserve(a.size());
  for (const auto& t : a) {
    Scalar v = ctx.ring.normalize(t.coeff * c);
    if (sgn(v) != 0) out.push_back(Term{t.monomial * m, std::move(v)});
  }
  return out;
}

TermVec mul_vec(const TermVec& a, const TermVec& b, const Context& ctx) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return scale_vec(b, a[0].coeff, a[0].monomial, ctx);
  if (b.size() == 1) return scale_vec(a, b[0].coeff, b[0].monomial, ctx);
  TermVec prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a) {
    for (const auto& t : b) prod.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  }
  std::sort(prod.begin(), prod.end(), [&ctx](const Term& x, const Term& y) {
    return ctx.order.compare(x.monomial, y.monomial) > 0;
  });
  TermVec out;
  for (auto& t : prod) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty()) {
        out.back().coeff = ctx.ring.normalize(out.back().coeff);
        if (sgn(out.back().coeff) == 0) out.pop_back();
      }
      out.push_back(std::move(t));
    }
  }
  if (!out.empty()) {
    out.back().coeff = ctx.ring.normalize(out.back().coeff);
    if (sgn(out.back().coeff) == 0) out.pop_back();
  }
  return out;
}

struct Elem {
  TermVec poly;
  std::vector<TermVec> cof;  // empty when untracked
};

using Quotients = std::map<std::size_t, TermVec>;

// Index of the reducer for monomial m among `active`: over a field the first
// whose leading monomial divides m, over ZZ the one with the smallest leading
// coefficient (first on ties). Returns -1 when none applies.
long find_reducer(const Monomial& m, const std::vector<const TermVec*>& polys, const Context& ctx) {
  long best = -1;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const TermVec& g = *polys[k];
    if (!g.front().monomial.divides(m)) continue;
    if (!ctx.over_integers) return static_cast<long>(k);
    if (best < 0 || cmp(g.front().coeff, polys[static_cast<std::size_t>(best)]->front().coeff) < 0) {
      best = static_cast<long>(k);
    }
  }
  return best;
}

// Full reduction of p by `polys` (leading coefficients 1 over fields,
// positive over ZZ). Quotient terms per reducer index go to `quotients`.
TermVec reduce_full(TermVec p, const std::vector<const TermVec*>& polys, const Context& ctx, Quotients* quotients) {
  TermVec rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lt = p[head];
    const long k = find_reducer(lt.monomial, polys, ctx);
    if (k < 0) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const TermVec& g = *polys[static_cast<std::size_t>(k)];
    Scalar c;
    if (ctx.over_integers) {
      c = Scalar(floor_div(lt.coeff.get_num(), g.front().coeff.get_num()));
      if (sgn(c) == 0) {
        rem.push_back(lt);
        ++head;
        continue;
      }
    } else {
      c = ctx.ring.normalize(lt.coeff / g.front().coeff);
    }
    const Monomial m = lt.monomial / g.front().monomial;
    if (quotients) (*quotients)[static_cast<std::size_t>(k)].push_back(Term{m, c});
    p = sub_scaled(p, head, c, m, g, ctx);
    head = 0;
  }
  return rem;
}

// cof -= sum_k Q_k * cofs_k
void apply_quotients(std::vector<TermVec>& cof, const Quotients& quotients,
                     const std::vector<const std::vector<TermVec>*>& cofs, const Context& ctx) {
  for (const auto& [k, q] : quotients) {
    TermVec qs = mul_vec(q, TermVec{Term{Monomial(), Scalar(1)}}, ctx);  // sorted + merged
    const auto& src = *cofs[k];
    for (std::size_t j = 0; j < cof.size(); ++j) {
      if (src[j].empty()) continue;
      TermVec prod = mul_vec(qs, src[j], ctx);
      cof[j] = sub_scaled(cof[j], 0, Scalar(1), Monomial(), prod, ctx);
    }
  }
}

void scale_elem(Elem& e, const Scalar& c, const Context& ctx) {
  e.poly = scale_vec(e.poly, c, Monomial(), ctx);
  for (auto& v : e.cof) v = scale_vec(v, c, Monomial(), ctx);
}

// Makes the leading coefficient 1 (fields) or positive (ZZ).
void normalize_elem(Elem& e, const Context& ctx) {
  const Scalar& lc = e.poly.front().coeff;
  if (ctx.over_integers) {
    if (sgn(lc) < 0) scale_elem(e, Scalar(-1), ctx);
  } else if (lc != 1) {
    scale_elem(e, ctx.ring.inverse(lc), ctx);
  }
}

// a*m_a*f + b*m_b*g including cofactors.
Elem combine(const Elem& f, const Scalar& a, const Monomial& ma, const Elem& g, const Scalar& b,
             const Monomial& mb, const Context& ctx) {
  Elem out;
  out.poly = sub_scaled(scale_vec(f.poly, a, ma, ctx), 0, Scalar(-b), mb, g.poly, ctx);
  out.cof.resize(f.cof.size());
  for (std::size_t j = 0; j < f.cof.size(); ++j) {
    out.cof[j] = sub_scaled(scale_vec(f.cof[j], a, ma, ctx), 0, Scalar(-b), mb, g.cof[j], ctx);
  }
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const Context& ctx, bool track) : ctx_(ctx), track_(track) {}

  void run(std::vector<Elem> inputs) {
    for (auto& e : inputs) {
      if (e.poly.empty()) continue;
      add(reduce_elem(std::move(e)));
    }
    while (!pairs_.empty()) {
      const std::size_t pick = select_pair();
      const Pair pr = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& cand : pair_polys(pr)) add(reduce_elem(std::move(cand)));
    }
    finish();
  }

  std::vector<Elem> take() { return std::move(result_); }

 private:
  Elem reduce_elem(Elem e) {
    std::vector<const TermVec*> polys;
    std::vector<const std::vector<TermVec>*> cofs;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (!active_[k]) continue;
      polys.push_back(&elems_[k].poly);
      cofs.push_back(&elems_[k].cof);
    }
    Quotients q;
    e.poly = reduce_full(std::move(e.poly), polys, ctx_, track_ ? &q : nullptr);
    if (track_) apply_quotients(e.cof, q, cofs, ctx_);
    return e;
  }

  std::vector<Elem> pair_polys(const Pair& pr) {
    const Elem& f = elems_[pr.i];
    const Elem& g = elems_[pr.j];
    const Monomial mf = pr.lcm / f.poly.front().monomial;
    const Monomial mg = pr.lcm / g.poly.front().monomial;
    std::vector<Elem> out;
    if (!ctx_.over_integers) {
      out.push_back(combine(f, Scalar(1), mf, g, Scalar(-1), mg, ctx_));
      return out;
    }
    const Integer& cf = f.poly.front().coeff.get_num();
    const Integer& cg = g.poly.front().coeff.get_num();
    Integer l;
    mpz_lcm(l.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    out.push_back(combine(f, Scalar(Integer(l / cf)), mf, g, Scalar(Integer(-(l / cg))), mg, ctx_));
    if (cg % cf != 0 && cf % cg != 0) {
      Integer d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
      out.push_back(combine(f, Scalar(s), mf, g, Scalar(t), mg, ctx_));
    }
    return out;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (pair_less(pairs_[k], pairs_[best])) best = k;
    }
    return best;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    const int c = ctx_.order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void add(Elem e) {
    if (e.poly.empty()) return;
    normalize_elem(e, ctx_);
    const std::size_t h = elems_.size();
    elems_.push_back(std::move(e));
    active_.push_back(true);
    if (ctx_.over_integers) {
      for (std::size_t k = 0; k < h; ++k) {
        pairs_.push_back(Pair{k, h, lcm(elems_[k].poly.front().monomial, elems_[h].poly.front().monomial)});
      }
      return;
    }
    gebauer_moeller(h);
  }

  void gebauer_moeller(std::size_t h) {
    const Monomial& lh = elems_[h].poly.front().monomial;
    std::vector<Pair> c;
    for (std::size_t k = 0; k < h; ++k) {
      if (active_[k]) c.push_back(Pair{k, h, lcm(elems_[k].poly.front().monomial, lh)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool keep = lh.coprime(elems_[p.i].poly.front().monomial);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (d[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (const Pair& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        lcm(elems_[p.i].poly.front().monomial, lh) != p.lcm &&
                        lcm(elems_[p.j].poly.front().monomial, lh) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (const Pair& p : d) {
      if (!lh.coprime(elems_[p.i].poly.front().monomial)) kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (std::size_t k = 0; k < h; ++k) {
      if (active_[k] && lh.divides(elems_[k].poly.front().monomial)) active_[k] = false;
    }
  }

  void finish() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (active_[k]) live.push_back(k);
    }
    // Drop elements whose leading term is (strongly) divisible by another's.
    std::vector<std::size_t> minimal;
    for (std::size_t a : live) {
      const Term& ta = elems_[a].poly.front();
      bool redundant = false;
      for (std::size_t b : live) {
        if (a == b) continue;
        const Term& tb = elems_[b].poly.front();
        if (!tb.monomial.divides(ta.monomial)) continue;
        if (ctx_.over_integers && ta.coeff.get_num() % tb.coeff.get_num() != 0) continue;
        const bool same = tb.monomial == ta.monomial && (!ctx_.over_integers || tb.coeff == ta.coeff);
        if (!same || b < a) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    // Tail-reduce each element by the others.
    for (std::size_t a : minimal) {
      std::vector<const TermVec*> polys;
      std::vector<const std::vector<TermVec>*> cofs;
      for (std::size_t b : minimal) {
        if (b == a) continue;
        polys.push_back(&elems_[b].poly);
        cofs.push_back(&elems_[b].cof);
      }
      Elem& e = elems_[a];
      TermVec tail(e.poly.begin() + 1, e.poly.end());
      Quotients q;
      tail = reduce_full(std::move(tail), polys, ctx_, track_ ? &q : nullptr);
      if (track_) apply_quotients(e.cof, q, cofs, ctx_);
      TermVec full;
      full.reserve(tail.size() + 1);
      full.push_back(e.poly.front());
      full.insert(full.end(), tail.begin(), tail.end());
      e.poly = std::move(full);
    }
    for (std::size_t a : minimal) result_.push_back(std::move(elems_[a]));
    std::sort(result_.begin(), result_.end(), [this](const Elem& x, const Elem& y) {
      const int c = ctx_.order.compare(x.poly.front().monomial, y.poly.front().monomial);
      if (c != 0) return c < 0;
      return x.poly.front().coeff < y.poly.front().coeff;
    });
  }

  Context ctx_;
  bool track_;
  std::vector<Elem> elems_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Elem> result_;
};

}  // namespace

Term leading_term(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "leading term of zero");
  if (order.kind() == MonomialOrder::Kind::kDegRevLex) return p.terms().front();
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder order, bool track) {
  GroebnerBasis gb;
  gb.order_ = order;
  gb.tracked_ = track;
  SpacePtr space;
  for (const auto& g : gens) {
    Polynomial probe(space);
    space = Polynomial::unify(probe, g);
  }
  gb.space_ = space;
  if (!space) {
    gb.generators_ = gens;
    return gb;
  }
  for (const auto& g : gens) gb.generators_.push_back(g.in_space(space));
  const Context ctx{space->coeffs, order, space->coeffs.is_integers()};
  std::vector<Elem> inputs;
  const std::size_t n = gb.generators_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Elem e;
    e.poly = sorted_terms(gb.generators_[i], order);
    if (track) {
      e.cof.resize(n);
      e.cof[i] = TermVec{Term{Monomial(), Scalar(1)}};
    }
    inputs.push_back(std::move(e));
  }
  Engine engine(ctx, track);
  engine.run(std::move(inputs));
  for (auto& e : engine.take()) {
    gb.sorted_.push_back(e.poly);
    gb.basis_.push_back(to_poly(space, std::move(e.poly)));
    if (track) {
      std::vector<Polynomial> row;
      row.reserve(n);
      for (auto& c : e.cof) row.push_back(to_poly(space, std::move(c)));
      gb.transformation_.push_back(std::move(row));
    }
  }
  return gb;
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const {
  if (basis_.empty() || p.is_zero()) return p;
  const SpacePtr target = Polynomial::unify(basis_.front(), p);
  const Context ctx{target->coeffs, order_, target->coeffs.is_integers()};
  std::vector<TermVec> embedded;
  std::vector<const TermVec*> polys;
  if (same_space(target, space_)) {
    for (const auto& v : sorted_) polys.push_back(&v);
  } else {
    for (const auto& b : basis_) embedded.push_back(sorted_terms(b.in_space(target), order_));
    for (const auto& v : embedded) polys.push_back(&v);
  }
  TermVec rem = reduce_full(sorted_terms(p.in_space(target), order_), polys, ctx, nullptr);
  return to_poly(target, std::move(rem));
}

GroebnerBasis::Division GroebnerBasis::divide(const Polynomial& p) const {
  if (!tracked_) throw Error(ErrorCode::kInvalidArgument, "divide() needs a tracked basis");
  Division out;
  const std::size_t n = generators_.size();
  if (basis_.empty()) {
    out.remainder = p;
    out.cofactors.assign(n, Polynomial(space_));
    return out;
  }
  const SpacePtr target = Polynomial::unify(basis_.front(), p);
  if (!same_space(target, space_)) {
    throw Error(ErrorCode::kIncompatibleRings, "divide() operand uses variables outside the basis space");
  }
  const Context ctx{target->coeffs, order_, target->coeffs.is_integers()};
  std::vector<const TermVec*> polys;
  for (const auto& v : sorted_) polys.push_back(&v);
  Quotients q;
  TermVec rem = reduce_full(sorted_terms(p.in_space(target), order_), polys, ctx, &q);
  out.remainder = to_poly(target, std::move(rem));
  out.cofactors.assign(n, Polynomial(space_));
  for (const auto& [k, terms] : q) {
    const Polynomial quotient = to_poly(space_, terms);
    for (std::size_t j = 0; j < n; ++j) {
      if (!transformation_[k][j].is_zero()) out.cofactors[j] += quotient * transformation_[k][j];
    }
  }
  return out;
}

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& b : basis_) {
    if (b.is_constant() && space_->coeffs.is_unit(b.constant_term())) return true;
  }
  return false;
}

std::optional<std::vector<Polynomial>> ideal_member(const Polynomial& x, const std::vector<Polynomial>& gens) {
  SpacePtr space = x.space();
  for (const auto& g : gens) space = Polynomial::unify(Polynomial(space), g);
  std::vector<Polynomial> lifted;
  lifted.reserve(gens.size());
  for (const auto& g : gens) lifted.push_back(g.in_space(space));
  if (x.is_zero()) {
    std::vector<Polynomial> zeros(gens.size(), Polynomial(space));
    return zeros;
  }
  if (gens.empty()) return std::nullopt;
  const GroebnerBasis gb = groebner(lifted, MonomialOrder::degrevlex(), true);
  auto div = gb.divide(x.in_space(space));
  if (!div.remainder.is_zero()) return std::nullopt;
  return div.cofactors;
}

std::vector<Polynomial> critical_pairs(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const SpacePtr space = Polynomial::unify(f, g);
  const Context ctx{space->coeffs, order, space->coeffs.is_integers()};
  Elem ef{sorted_terms(f.in_space(space), order), {}};
  Elem eg{sorted_terms(g.in_space(space), order), {}};
  const Monomial l = lcm(ef.poly.front().monomial, eg.poly.front().monomial);
  const Monomial mf = l / ef.poly.front().monomial;
  const Monomial mg = l / eg.poly.front().monomial;
  std::vector<Polynomial> out;
  if (!ctx.over_integers) {
    const Scalar a = ctx.ring.inverse(ef.poly.front().coeff);
    const Scalar b = ctx.ring.inverse(eg.poly.front().coeff);
    out.push_back(to_poly(space, combine(ef, a, mf, eg, Scalar(-b), mg, ctx).poly));
    return out;
  }
  const Integer cf = ef.poly.front().coeff.get_num();
  const Integer cg = eg.poly.front().coeff.get_num();
  Integer l2;
  mpz_lcm(l2.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const auto spoly = combine(ef, Scalar(Integer(l2 / cf)), mf, eg, Scalar(Integer(-(l2 / cg))), mg, ctx);
  out.push_back(to_poly(space, spoly.poly));
  Integer d, s, t;
  mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  out.push_back(to_poly(space, combine(ef, Scalar(s), mf, eg, Scalar(t), mg, ctx).poly));
  return out;
}

}  // namespace jacarena
