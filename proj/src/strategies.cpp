#include "jacarena/strategies.hpp"

#include <algorithm>
#include <random>

#include "jacarena/error.hpp"

namespace jacarena {

namespace {

class ZeroDim : public ProverStrategy {
 public:
  explicit ZeroDim(Polynomial a) : a_(std::move(a)) {}
  std::uint64_t budget() const override { return 1; }
  ProverTurn open() const override {
    // x^e = x^e (1 - b (1 - a x)) modulo x^e (1 - a x) = 0, whatever b is.
    return ProverTurn{{a_}, false, [](const std::vector<Polynomial>&) { return leaf_strategy(); }};
  }
  std::string name() const override { return "zeroDim"; }

 private:
  Polynomial a_;
};

bool is_integers_without_vars(const RingPresentation& r) {
  return r.coeffs().is_integers() && r.vars().empty();
}

class EuclideanDim1 : public ProverStrategy {
 public:
  EuclideanDim1(RingPtr ring, Polynomial x, Polynomial a, bool unit)
      : ring_(std::move(ring)), x_(std::move(x)), a_(std::move(a)), unit_(unit) {}
  std::uint64_t budget() const override { return unit_ ? 1 : 2; }
  ProverTurn open() const override {
    if (unit_) {
      // 1 - a x = 0, so the constraint is 1 itself.
      return ProverTurn{{a_}, false, [](const std::vector<Polynomial>&) { return leaf_strategy(); }};
    }
    auto ring = ring_;
    auto x = x_;
    auto a = a_;
    return ProverTurn{{a_}, true, [ring, x, a](const std::vector<Polynomial>& replies) -> StrategyPtr {
                        const Polynomial one = ring->constant(1);
                        const Polynomial m = one - replies.at(0) * (one - a * x);
                        auto quotient = quotient_extend(ring, {m});
                        const ZeroDimWitness w = zero_dim_witness(x, quotient);
                        if (w.a.is_zero()) return leaf_strategy();
                        return zero_dim_strategy(w);
                      }};
  }
  std::string name() const override { return "euclideanDim1"; }

 private:
  RingPtr ring_;
  Polynomial x_;
  Polynomial a_;
  bool unit_;
};

class Cut : public ProverStrategy {
 public:
  Cut(StrategyPtr s1, StrategyPtr s2) : s1_(std::move(s1)), s2_(std::move(s2)) {}
  std::uint64_t budget() const override { return std::max(s1_->budget(), s2_->budget()); }
  ProverTurn open() const override {
    ProverTurn t1, t2;
    const bool play1 = !is_leaf(s1_), play2 = !is_leaf(s2_);
    if (play1) t1 = s1_->open();
    if (play2) t2 = s2_->open();
    ProverTurn out;
    out.moves = t1.moves;
    out.moves.insert(out.moves.end(), t2.moves.begin(), t2.moves.end());
    out.uses_replies = (play1 && t1.uses_replies) || (play2 && t2.uses_replies);
    const std::size_t n1 = t1.moves.size();
    const std::uint64_t limit = budget();
    auto s1 = s1_, s2 = s2_;
    out.resume = [=](const std::vector<Polynomial>& replies) -> StrategyPtr {
      auto step = [&](bool play, const ProverTurn& t, const StrategyPtr& s, std::size_t from,
                      std::size_t count) -> StrategyPtr {
        if (!play) return s;
        std::vector<Polynomial> part(replies.begin() + static_cast<std::ptrdiff_t>(from),
                                     replies.begin() + static_cast<std::ptrdiff_t>(from + count));
        StrategyPtr next = t.resume(part);
        if (!next) next = leaf_strategy();
        if (next->budget() >= s->budget()) {
          throw Error(ErrorCode::kBudgetOverflow, s->name() + " did not lower its budget");
        }
        return next;
      };
      StrategyPtr n1s = step(play1, t1, s1, 0, n1);
      StrategyPtr n2s = step(play2, t2, s2, n1, replies.size() - n1);
      if (std::max(n1s->budget(), n2s->budget()) >= limit) {
        throw Error(ErrorCode::kBudgetOverflow, "cut continuation does not fit the budget");
      }
      if (is_leaf(n1s) && is_leaf(n2s)) return leaf_strategy();
      return std::make_shared<Cut>(n1s, n2s);
    };
    return out;
  }
  std::string name() const override { return "cut(" + s1_->name() + "," + s2_->name() + ")"; }

 private:
  StrategyPtr s1_, s2_;
};

class Scale : public ProverStrategy {
 public:
  Scale(StrategyPtr s, Polynomial y) : s_(std::move(s)), y_(std::move(y)) {}
  std::uint64_t budget() const override { return s_->budget(); }
  ProverTurn open() const override {
    ProverTurn inner = s_->open();
    ProverTurn out;
    for (const auto& m : inner.moves) out.moves.push_back(m * y_);
    out.uses_replies = inner.uses_replies;
    auto y = y_;
    out.resume = [inner, y](const std::vector<Polynomial>& replies) -> StrategyPtr {
      StrategyPtr next = inner.resume(replies);
      if (is_leaf(next)) return leaf_strategy();
      return std::make_shared<Scale>(next, y);
    };
    return out;
  }
  std::string name() const override { return "scale(" + s_->name() + ")"; }

 private:
  StrategyPtr s_;
  Polynomial y_;
};

class QuotientPush : public ProverStrategy {
 public:
  explicit QuotientPush(StrategyPtr s) : s_(std::move(s)) {}
  std::uint64_t budget() const override { return s_->budget(); }
  // Moves and replies need no translation: the quotient map is the identity
  // on representatives.
  ProverTurn open() const override { return s_->open(); }
  std::string name() const override { return s_->name(); }

 private:
  StrategyPtr s_;
};

class Transport : public ProverStrategy {
 public:
  Transport(StrategyPtr s, std::shared_ptr<const MonogenicAlgebra> mono, Polynomial a0)
      : s_(std::move(s)), mono_(std::move(mono)), a0_(std::move(a0)) {}
  std::uint64_t budget() const override { return s_->budget(); }
  ProverTurn open() const override {
    ProverTurn inner = s_->open();
    ProverTurn out;
    const Polynomial a = mono_->lift(mono_->leading());
    for (const auto& m : inner.moves) out.moves.push_back(mono_->lift(m) * a);
    out.uses_replies = inner.uses_replies;
    auto mono = mono_;
    auto a0 = a0_;
    out.resume = [inner, mono, a0](const std::vector<Polynomial>& replies) -> StrategyPtr {
      std::vector<Polynomial> carried;
      for (std::size_t i = 0; i < inner.moves.size(); ++i) {
        if (inner.uses_replies) {
          const Polynomial a1 = mono->base->reduce(inner.moves[i]);
          carried.push_back(key_elementary_transfer(a0, a1, replies.at(i), *mono));
        } else {
          carried.push_back(Polynomial(mono->base->space()));
        }
      }
      StrategyPtr next = inner.resume(carried);
      if (is_leaf(next)) return leaf_strategy();
      return std::make_shared<Transport>(next, mono, a0);
    };
    return out;
  }
  std::string name() const override { return "transport(" + s_->name() + ")"; }

 private:
  StrategyPtr s_;
  std::shared_ptr<const MonogenicAlgebra> mono_;
  Polynomial a0_;
};

class PolyLift : public ProverStrategy {
 public:
  PolyLift(RingFactory base, RingPtr ax, std::size_t var, Polynomial f)
      : base_(std::move(base)), ax_(std::move(ax)), var_(var), f_(std::move(f)) {}
  std::uint64_t budget() const override { return base_.budget + 1; }
  ProverTurn open() const override {
    const PolyLift self = *this;
    return ProverTurn{{ax_->variable(var_)}, true,
                      [self](const std::vector<Polynomial>& replies) { return self.descend(replies.at(0)); }};
  }
  std::string name() const override { return "polyLift(" + base_.name + ")"; }

 private:
  // After the reply g the constraint h = 1 - g (1 - X f) = a_d X^d + ... + a_0
  // holds; descend C_d, ..., C_0 with C_k = A[X]/<h, a_{k+1}, ..., a_d>.
  StrategyPtr descend(const Polynomial& g) const {
    const Polynomial one = ax_->constant(1);
    const Polynomial xv = ax_->variable(var_);
    const Polynomial h = ax_->reduce(one - g * (one - xv * f_));
    std::vector<Polynomial> coeffs;
    for (const auto& c : h.coefficients_in(var_)) coeffs.push_back(base_.ring->reduce(c));
    const std::size_t d = coeffs.size() - 1;

    std::vector<RingPtr> c_ring(d + 1);
    c_ring[d] = quotient_extend(ax_, {h});
    for (std::size_t k = d; k > 0; --k) c_ring[k - 1] = quotient_extend(c_ring[k], {coeffs[k].in_space(ax_->space())});

    StrategyPtr chain = leaf_strategy();
    for (std::size_t k = 0; k <= d; ++k) {
      const RingPtr& ck = c_ring[k];
      StrategyPtr level = leaf_strategy();
      if (!ck->is_zero(coeffs[k].in_space(ax_->space()))) {
        Polynomial rel(ax_->space());
        for (std::size_t j = 0; j <= k; ++j) rel += coeffs[j].in_space(ax_->space()) * xv.pow(j);
        const MonogenicAlgebra mono = MonogenicAlgebra::make(base_.ring, ck, ax_->vars()[var_], rel);
        const IntegralRelation dep = integral_dependence(f_, mono);
        level = loc_integral_strategy(mono, dep, base_.make);
      }
      chain = cut_combinator(level, chain);
    }
    return chain;
  }

  RingFactory base_;
  RingPtr ax_;
  std::size_t var_;
  Polynomial f_;
};

class Scripted : public ProverStrategy {
 public:
  Scripted(std::vector<std::vector<Polynomial>> rounds, std::string name)
      : rounds_(std::move(rounds)), name_(std::move(name)) {}
  std::uint64_t budget() const override { return rounds_.size(); }
  ProverTurn open() const override {
    std::vector<std::vector<Polynomial>> rest(rounds_.begin() + 1, rounds_.end());
    auto name = name_;
    return ProverTurn{rounds_.front(), false, [rest, name](const std::vector<Polynomial>&) -> StrategyPtr {
                        if (rest.empty()) return leaf_strategy();
                        return std::make_shared<Scripted>(rest, name);
                      }};
  }
  std::string name() const override { return name_; }

 private:
  std::vector<std::vector<Polynomial>> rounds_;
  std::string name_;
};

std::uint32_t ring_var_of(const RingPresentation& ring, const Polynomial& x) {
  const Polynomial r = x.in_space(ring.space());
  for (std::size_t i = 0; i < ring.vars().size(); ++i) {
    if (r == ring.variable(i)) return static_cast<std::uint32_t>(i);
  }
  throw Error(ErrorCode::kInvalidArgument, "refuterPoly needs x to be a variable, got " + x.to_string());
}

}  // namespace

StrategyPtr zero_dim_strategy(const ZeroDimWitness& witness) { return std::make_shared<ZeroDim>(witness.a); }

StrategyPtr zero_dim_strategy(const RingPtr& ring, const Polynomial& x) {
  return zero_dim_strategy(zero_dim_witness(x, ring));
}

StrategyPtr euclidean_dim1_strategy(const RingPtr& ring, const Polynomial& x_in) {
  const bool integers = is_integers_without_vars(*ring);
  const bool field_line = ring->coeffs().is_field() && ring->vars().size() <= 1;
  if (!(integers || field_line) || !ring->basis().basis().empty()) {
    throw Error(ErrorCode::kUnsupportedRing, "euclideanDim1 needs ZZ or K[X], got " + ring->to_string());
  }
  const Polynomial x = ring->reduce(x_in);
  if (x.is_zero()) return leaf_strategy();
  if (x.is_constant()) {
    const Scalar c = x.constant_term();
    if (ring->coeffs().is_unit(c)) {
      return std::make_shared<EuclideanDim1>(
          ring, x, Polynomial::constant(ring->space(), ring->coeffs().inverse(c)), true);
    }
  }
  // 1 - a x is then neither zero nor a unit.
  const long a = integers ? (sgn(x.constant_term()) > 0 ? -1 : 1) : 1;
  return std::make_shared<EuclideanDim1>(ring, x, ring->constant(a), false);
}

StrategyPtr cut_combinator(StrategyPtr for_xz, StrategyPtr for_quotient) {
  if (!for_xz) for_xz = leaf_strategy();
  if (!for_quotient) for_quotient = leaf_strategy();
  if (is_leaf(for_xz) && is_leaf(for_quotient)) return leaf_strategy();
  if (is_leaf(for_xz)) return for_quotient;
  if (is_leaf(for_quotient)) return for_xz;
  return std::make_shared<Cut>(std::move(for_xz), std::move(for_quotient));
}

StrategyPtr scale_combinator(StrategyPtr s, Polynomial y) {
  if (is_leaf(s)) return leaf_strategy();
  return std::make_shared<Scale>(std::move(s), std::move(y));
}

StrategyPtr quotient_push(StrategyPtr s, std::vector<Polynomial> /*extra*/) {
  if (is_leaf(s)) return leaf_strategy();
  return std::make_shared<QuotientPush>(std::move(s));
}

StrategyPtr transport_strategy(StrategyPtr a_strategy, const MonogenicAlgebra& mono, Polynomial a0) {
  if (is_leaf(a_strategy)) return leaf_strategy();
  return std::make_shared<Transport>(std::move(a_strategy), std::make_shared<const MonogenicAlgebra>(mono),
                                     std::move(a0));
}

StrategyPtr loc_integral_strategy(const MonogenicAlgebra& mono, const IntegralRelation& rel,
                                  const TripleFactory& sub) {
  // No relation left: a^l = 0 in B, so a y is nilpotent.
  if (rel.d == 0) return leaf_strategy();
  const auto& space = mono.algebra->space();
  const Polynomial y = rel.y.in_space(space);
  const Polynomial al = mono.lift(rel.a).pow(rel.l);
  // f_k = a^l y^k - (c_{d-1} y^(k-1) + ... + c_{d-k}).
  std::vector<Polynomial> f(rel.d + 1);
  for (std::size_t k = 0; k <= rel.d; ++k) {
    Polynomial fk = al * y.pow(k);
    for (std::size_t i = 1; i <= k; ++i) fk -= mono.lift(rel.c[rel.d - i]) * y.pow(k - i);
    f[k] = mono.algebra->reduce(fk);
  }
  // Level k lives in B_k = B/<f_k, ..., f_{d-1}>; B_0 kills a^l.
  StrategyPtr chain = leaf_strategy();
  for (std::size_t k = 1; k <= rel.d; ++k) {
    const Polynomial& c = rel.c[rel.d - k];
    const Polynomial target = mono.base->reduce(rel.a * c);
    // c_{d-k} = f_{k-1} y in B_k, so a game on c_{d-k} is a game on y with
    // moves scaled by f_{k-1}.
    StrategyPtr level = scale_combinator(transport_strategy(sub(target), mono, c), f[k - 1]);
    chain = cut_combinator(level, chain);
  }
  return chain;
}

StrategyPtr poly_lift_strategy(const RingFactory& base, const RingPtr& ax, const std::string& var,
                               const Polynomial& f) {
  const auto idx = ax->space()->index_of(var);
  if (!idx) throw Error(ErrorCode::kUnknownVariable, var);
  const Polynomial fr = ax->reduce(f);
  if (fr.is_zero()) return leaf_strategy();
  return std::make_shared<PolyLift>(base, ax, *idx, fr);
}

RingFactory ring_strategy_factory(const RingPtr& ring) {
  RingFactory out;
  out.ring = ring;
  const auto st = staircase(*ring);
  if (st && (st->finite_ring() || ring->coeffs().is_field())) {
    out.budget = 1;
    out.name = "zeroDim";
    out.make = [ring](const Polynomial& t) { return zero_dim_strategy(ring, t); };
    return out;
  }
  if (!ring->basis().basis().empty()) {
    throw Error(ErrorCode::kUnsupportedRing, "no strategy for " + ring->to_string());
  }
  const std::size_t n = ring->vars().size();
  if ((n == 0 && ring->coeffs().is_integers()) || (n == 1 && ring->coeffs().is_field())) {
    out.budget = 2;
    out.name = "euclideanDim1";
    out.make = [ring](const Polynomial& t) { return euclidean_dim1_strategy(ring, t); };
    return out;
  }
  std::vector<std::string> vars(ring->vars().begin(), ring->vars().end() - 1);
  const RingFactory inner = ring_strategy_factory(RingPresentation::create(ring->coeffs(), vars));
  const std::string var = ring->vars().back();
  out.budget = inner.budget + 1;
  out.name = "polyLift(" + inner.name + ")";
  out.make = [inner, ring, var](const Polynomial& t) { return poly_lift_strategy(inner, ring, var, t); };
  return out;
}

StrategyPtr scripted_strategy(std::vector<std::vector<Polynomial>> rounds, std::string name) {
  if (rounds.empty()) return leaf_strategy();
  return std::make_shared<Scripted>(std::move(rounds), std::move(name));
}

std::vector<Polynomial> RandomDelayer::reply(const DelayerView& view, const std::vector<Polynomial>& moves) const {
  const SpacePtr& space = view.ring->space();
  const std::size_t nvars = space->vars.size();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(view.round), static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> coef(-abs_le_, abs_le_);
    std::vector<Term> terms;
    std::vector<std::uint32_t> e(nvars, 0);
    while (true) {
      const Scalar c = space->coeffs.normalize(Scalar(static_cast<long>(coef(rng))));
      if (sgn(c) != 0) terms.push_back(Term{Monomial(e), c});
      std::size_t k = 0;
      while (k < nvars && e[k] == deg_le_) e[k++] = 0;
      if (k == nvars) break;
      ++e[k];
    }
    out.push_back(Polynomial::from_terms(space, std::move(terms)));
  }
  return out;
}

std::string RandomDelayer::name() const {
  return "random(seed=" + std::to_string(seed_) + ",degLE=" + std::to_string(deg_le_) +
         ",absLE=" + std::to_string(abs_le_) + ")";
}

RefuterZ::RefuterZ(Integer n) : n_(std::move(n)) {
  if (abs(n_) < 2) throw Error(ErrorCode::kInvalidArgument, "refuterZ needs |N| >= 2");
}

Integer RefuterZ::constraint(const Integer& n, const std::vector<Integer>& moves) {
  Integer prod = n;
  for (const auto& a : moves) prod *= 1 - a * n;
  return 1 + abs(prod);
}

std::vector<Polynomial> RefuterZ::reply(const DelayerView& view, const std::vector<Polynomial>& moves) const {
  if (view.budget >= 2) {
    throw Error(ErrorCode::kWrongBudget, "refuterZ only answers budget-1 rounds, got " + std::to_string(view.budget));
  }
  if (!is_integers_without_vars(*view.ring) || !view.ring->basis().basis().empty()) {
    throw Error(ErrorCode::kUnsupportedRing, "refuterZ plays over ZZ");
  }
  if (view.x != Polynomial::constant(view.ring->space(), Scalar(n_))) {
    throw Error(ErrorCode::kInvalidArgument, "refuterZ was built for x = " + n_.get_str());
  }
  std::vector<Integer> as;
  for (const auto& m : moves) {
    if (!m.is_constant()) throw Error(ErrorCode::kIllegalMove, "non-constant move " + m.to_string());
    as.push_back(m.constant_term().get_num());
  }
  const Integer c = constraint(n_, as);
  std::vector<Polynomial> out;
  for (const auto& a : as) {
    const Integer d = 1 - a * n_;
    Integer b = (1 - c) / d;  // exact: d divides c - 1
    out.push_back(Polynomial::constant(view.ring->space(), Scalar(b)));
  }
  return out;
}

std::string RefuterZ::name() const { return "refuterZ(N=" + n_.get_str() + ")"; }

bool refuter_z_check(const Integer& n, const Integer& c) {
  if (c == 0) return n != 0;
  Integer rest = abs(c);
  Integer g = gcd(rest, n);
  while (g > 1) {
    rest /= g;
    g = gcd(rest, n);
  }
  return rest > 1;
}

Polynomial RefuterPoly::constraint(const Polynomial& x, const std::vector<Polynomial>& moves) {
  const SpacePtr space = x.space();
  const Polynomial one = Polynomial::constant(space, 1);
  Polynomial prod = x;
  for (const auto& f : moves) prod *= one - f * x;
  return one - prod;
}

std::vector<Polynomial> RefuterPoly::reply(const DelayerView& view, const std::vector<Polynomial>& moves) const {
  if (view.budget >= 2) {
    throw Error(ErrorCode::kWrongBudget,
                "refuterPoly only answers budget-1 rounds, got " + std::to_string(view.budget));
  }
  const std::uint32_t var = ring_var_of(*view.ring, view.x);
  const Polynomial x = view.ring->variable(var);
  const Polynomial one = view.ring->constant(1);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    Polynomial g = x;
    for (std::size_t j = 0; j < moves.size(); ++j) {
      if (j != i) g *= one - moves[j] * x;
    }
    out.push_back(g);
  }
  return out;
}

bool refuter_poly_check(const RingPtr& ring, const Polynomial& x, const Polynomial& h) {
  std::vector<Polynomial> gens = ring->relations();
  gens.push_back(h.in_space(ring->space()));
  return !in_nilradical(x.in_space(ring->space()), gens);
}

namespace {

// All sequences of length <= max_len over `alphabet`, shortest first.
std::vector<std::vector<Polynomial>> sequences(const std::vector<Polynomial>& alphabet, std::size_t max_len) {
  std::vector<std::vector<Polynomial>> out{{}};
  std::vector<std::vector<Polynomial>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Polynomial>> next;
    for (const auto& s : layer) {
      for (const auto& a : alphabet) {
        auto t = s;
        t.push_back(a);
        next.push_back(std::move(t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void tally(RefutationSummary& summary, const Transcript& t, bool checker, const std::vector<Polynomial>& moves) {
  ++summary.games;
  const bool ok = !t.prover_won() && checker && verify_transcript(t).ok;
  if (ok) {
    ++summary.refuted;
    return;
  }
  std::string s = "moves (";
  for (std::size_t i = 0; i < moves.size(); ++i) s += (i ? "," : "") + moves[i].to_string();
  summary.failures.push_back(s + ")");
}

}  // namespace

RefutationSummary refute_z_family(const Integer& n, std::size_t max_moves, long max_abs) {
  const RingPtr zz = RingPresentation::parse("ZZ");
  const Polynomial x = Polynomial::constant(zz->space(), Scalar(n));
  std::vector<Polynomial> alphabet;
  for (long a = -max_abs; a <= max_abs; ++a) alphabet.push_back(zz->constant(a));
  const RefuterZ refuter(n);
  RefutationSummary summary;
  for (const auto& moves : sequences(alphabet, max_moves)) {
    const Transcript t = referee_play(zz, x, x, 1, scripted_strategy({moves}), refuter);
    std::vector<Integer> as;
    for (const auto& m : moves) as.push_back(m.constant_term().get_num());
    tally(summary, t, refuter_z_check(n, RefuterZ::constraint(n, as)), moves);
  }
  return summary;
}

RefutationSummary refute_poly_family(const RingPtr& ring, const std::string& var, std::size_t max_moves,
                                     std::uint32_t max_deg, long max_abs) {
  const auto idx = ring->space()->index_of(var);
  if (!idx) throw Error(ErrorCode::kUnknownVariable, var);
  const Polynomial x = ring->variable(*idx);
  std::vector<Polynomial> alphabet;
  std::vector<std::string> seen;
  std::vector<long> digits(max_deg + 1, -max_abs);
  while (true) {
    Polynomial f(ring->space());
    for (std::uint32_t k = 0; k <= max_deg; ++k) f += ring->constant(digits[k]) * x.pow(k);
    f = ring->reduce(f);
    if (std::find(seen.begin(), seen.end(), f.to_string()) == seen.end()) {
      seen.push_back(f.to_string());
      alphabet.push_back(f);
    }
    std::size_t k = 0;
    while (k <= max_deg && digits[k] == max_abs) digits[k++] = -max_abs;
    if (k > max_deg) break;
    ++digits[k];
  }
  const RefuterPoly refuter;
  RefutationSummary summary;
  for (const auto& moves : sequences(alphabet, max_moves)) {
    const Transcript t = referee_play(ring, x, x, 1, scripted_strategy({moves}), refuter);
    tally(summary, t, refuter_poly_check(ring, x, RefuterPoly::constraint(x, moves)), moves);
  }
  return summary;
}

}  // namespace jacarena
