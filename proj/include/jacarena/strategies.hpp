#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jacarena/game.hpp"
#include "jacarena/integral.hpp"
#include "jacarena/zero_dim.hpp"

namespace jacarena {

// ---- Prover strategies ----------------------------------------------------

// One move a from the witness of x^e (1 - a x) = 0; any reply wins.
StrategyPtr zero_dim_strategy(const RingPtr& ring, const Polynomial& x);
StrategyPtr zero_dim_strategy(const ZeroDimWitness& witness);

// ZZ or K[X] without relations. Budget 0 for x = 0, 1 for units, 2 otherwise.
StrategyPtr euclidean_dim1_strategy(const RingPtr& ring, const Polynomial& x);

// From a strategy for (A, y, xz) and one for (A/<x>, y, z), a strategy for
// (A, y, z). Both children play side by side.
StrategyPtr cut_combinator(StrategyPtr for_xz, StrategyPtr for_quotient);

// From a strategy for (A, xy, x') one for (A, x, x'z): moves are multiplied
// by y. The new target only matters at the leaf, so z is not needed here.
StrategyPtr scale_combinator(StrategyPtr s, Polynomial y);

// The same strategy read in a quotient of its ring.
StrategyPtr quotient_push(StrategyPtr s, std::vector<Polynomial> extra);

// Builds a strategy for (A, t, t) at a fixed budget.
using TripleFactory = std::function<StrategyPtr(const Polynomial& t)>;

// Plays an A-strategy for (A, a a0, a a0) inside B = mono.algebra as a
// strategy for (B, a0, a a0): moves a1 become a1 a and replies are carried
// back to A by key_elementary_transfer.
StrategyPtr transport_strategy(StrategyPtr a_strategy, const MonogenicAlgebra& mono, Polynomial a0);

// Strategy for (B, y, a y) from a^l y^d = c_{d-1} y^(d-1) + ... + c_0 and
// strategies for (A, a c_k, a c_k).
StrategyPtr loc_integral_strategy(const MonogenicAlgebra& mono, const IntegralRelation& rel,
                                  const TripleFactory& sub);

// Strategies for A at some budget, one per element.
struct RingFactory {
  RingPtr ring;
  std::uint64_t budget = 0;
  std::string name;
  TripleFactory make;
};

// Strategy for (A[X], f, f), one round deeper than `base`. `ax` is A[X] with
// X named var.
StrategyPtr poly_lift_strategy(const RingFactory& base, const RingPtr& ax, const std::string& var,
                               const Polynomial& f);

// zeroDim for finite and zero-dimensional rings, euclideanDim1 for ZZ and
// K[X], polyLift over the ring without its last variable beyond that.
RingFactory ring_strategy_factory(const RingPtr& ring);

// Plays the given move lists, one per round, then stops.
StrategyPtr scripted_strategy(std::vector<std::vector<Polynomial>> rounds, std::string name = "scripted");

// ---- Delayer strategies ---------------------------------------------------

// Every coefficient of a reply is drawn from [-abs_le, abs_le] and every
// exponent is at most deg_le. Replies depend only on the seed, the round and
// the move index.
class RandomDelayer : public DelayerStrategy {
 public:
  RandomDelayer(std::uint64_t seed, std::uint32_t deg_le, std::int64_t abs_le)
      : seed_(seed), deg_le_(deg_le), abs_le_(abs_le) {}
  std::vector<Polynomial> reply(const DelayerView& view, const std::vector<Polynomial>& moves) const override;
  std::string name() const override;

 private:
  std::uint64_t seed_;
  std::uint32_t deg_le_;
  std::int64_t abs_le_;
};

// Against (ZZ, N, N) at budget 1: every reply makes the constraint
// c = 1 + |N (1 - a_1 N) ... (1 - a_n N)|.
class RefuterZ : public DelayerStrategy {
 public:
  explicit RefuterZ(Integer n);
  std::vector<Polynomial> reply(const DelayerView& view, const std::vector<Polynomial>& moves) const override;
  std::string name() const override;

  static Integer constraint(const Integer& n, const std::vector<Integer>& moves);

 private:
  Integer n_;
};

// True when N is not in Nil<c> over ZZ: stripping every prime of N from c
// leaves a factor > 1.
bool refuter_z_check(const Integer& n, const Integer& c);

// Against (A[X], X, X) at budget 1: g_i = X prod_{j != i} (1 - f_j X), so every
// constraint equals h = 1 - X prod (1 - f_j X).
class RefuterPoly : public DelayerStrategy {
 public:
  std::vector<Polynomial> reply(const DelayerView& view, const std::vector<Polynomial>& moves) const override;
  std::string name() const override { return "refuterPoly"; }

  static Polynomial constraint(const Polynomial& x, const std::vector<Polynomial>& moves);
};

// True when X is not in Nil<relations, h>.
bool refuter_poly_check(const RingPtr& ring, const Polynomial& x, const Polynomial& h);

// ---- Refutation sweeps ----------------------------------------------------

struct RefutationSummary {
  std::size_t games = 0;
  std::size_t refuted = 0;  // Delayer won, transcript verified, checker agreed
  std::vector<std::string> failures;
};

// Every budget-1 move list a_1..a_n with n <= max_moves and |a_i| <= max_abs
// against RefuterZ on (ZZ, N, N).
RefutationSummary refute_z_family(const Integer& n, std::size_t max_moves, long max_abs);

// Every budget-1 move list of polynomials with degree <= max_deg in X and
// coefficients in [-max_abs, max_abs] against RefuterPoly on (A[X], X, X).
RefutationSummary refute_poly_family(const RingPtr& ring, const std::string& var, std::size_t max_moves,
                                     std::uint32_t max_deg, long max_abs);

}  // namespace jacarena
