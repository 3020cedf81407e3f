#include "jacarena/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "jacarena/error.hpp"
#include "jacarena/zero_dim.hpp"

namespace jacarena {

namespace {

using Mask = FiniteRingTable::Mask;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Keeps only inclusion-minimal ideals.
void keep_minimal(std::vector<Mask>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](Mask a, Mask b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
  std::vector<Mask> out;
  for (Mask m : ideals) {
    bool dominated = false;
    for (Mask k : out) {
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(m);
  }
  ideals = std::move(out);
}

}  // namespace

std::size_t FiniteRingTable::index_of(const Polynomial& p) const {
  const auto it = index_.find(ring_->reduce(p).to_string());
  if (it == index_.end()) throw Error(ErrorCode::kInvalidArgument, "element not in table: " + p.to_string());
  return it->second;
}

Mask FiniteRingTable::ideal(Mask gens) const {
  const std::size_t n = size();
  std::vector<std::size_t> products;
  Mask seen = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (!((gens >> g) & 1U)) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t p = mul(r, g);
      if (!((seen >> p) & 1U)) {
        seen |= bit(p);
        products.push_back(p);
      }
    }
  }
  // Additive closure; in a finite group this also supplies negatives.
  Mask out = bit(zero_);
  std::vector<std::size_t> queue{zero_};
  while (!queue.empty()) {
    const std::size_t e = queue.back();
    queue.pop_back();
    for (std::size_t p : products) {
      const std::size_t s = add(e, p);
      if (!((out >> s) & 1U)) {
        out |= bit(s);
        queue.push_back(s);
      }
    }
  }
  return out;
}

Mask FiniteRingTable::ideal_of(const std::vector<std::size_t>& gens) const {
  Mask m = 0;
  for (std::size_t g : gens) m |= bit(g);
  return ideal(m);
}

FiniteRingTable enumerate_finite(const RingPtr& ring) {
  const auto st = staircase(*ring);
  if (!st || !st->finite_ring()) throw Error(ErrorCode::kNotFinite, ring->to_string() + " is not finite");
  if (st->cardinality() > 1 << 16) {
    throw Error(ErrorCode::kInvalidArgument, ring->to_string() + " is too large to enumerate");
  }
  FiniteRingTable t;
  t.ring_ = ring;
  // Coefficient vectors in mixed radix over the staircase.
  const std::size_t k = st->monomials.size();
  std::vector<unsigned long> digit(k, 0);
  while (true) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < k; ++i) {
      if (digit[i] != 0) terms.push_back(Term{st->monomials[i], Scalar(static_cast<long>(digit[i]))});
    }
    const Polynomial p = ring->reduce(Polynomial::from_terms(ring->space(), std::move(terms)));
    const std::string key = p.to_string();
    if (!t.index_.count(key)) {
      t.index_.emplace(key, t.elements_.size());
      t.elements_.push_back(p);
    }
    std::size_t i = 0;
    while (i < k && digit[i] + 1 == st->residues[i].get_ui()) digit[i++] = 0;
    if (i == k) break;
    ++digit[i];
  }
  const std::size_t n = t.elements_.size();
  if (n > FiniteRingTable::kMaxElements) {
    throw Error(ErrorCode::kInvalidArgument, ring->to_string() + " has more than 64 elements");
  }
  t.add_.resize(n * n);
  t.mul_.resize(n * n);
  t.neg_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.neg_[a] = t.index_of(-t.elements_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      t.add_[a * n + b] = t.index_of(t.elements_[a] + t.elements_[b]);
      t.mul_[a * n + b] = t.index_of(t.elements_[a] * t.elements_[b]);
    }
  }
  t.zero_ = t.index_of(ring->constant(0));
  t.one_ = t.index_of(ring->constant(1));
  return t;
}

bool brute_nil(std::size_t x, const std::vector<std::size_t>& u, const FiniteRingTable& table) {
  const Mask ideal = table.ideal_of(u);
  std::size_t p = table.one();
  // The powers of x repeat within size() steps.
  for (std::size_t e = 0; e <= table.size(); ++e) {
    if (table.contains(ideal, p)) return true;
    p = table.mul(p, x);
  }
  return false;
}

bool brute_jac(std::size_t x, const std::vector<std::size_t>& u, const FiniteRingTable& table) {
  const Mask base = table.ideal_of(u);
  for (std::size_t a = 0; a < table.size(); ++a) {
    const std::size_t w = table.sub(table.one(), table.mul(a, x));
    if (!table.contains(table.ideal(base | bit(w)), table.one())) return false;
  }
  return true;
}

std::optional<std::uint64_t> minimal_alpha(const FiniteRingTable& table, std::size_t x, std::size_t x_prime,
                                           std::uint64_t max_budget) {
  const std::size_t n = table.size();
  Mask powers = 0;
  for (std::size_t e = 0, p = table.one(); e <= n; ++e, p = table.mul(p, x_prime)) powers |= bit(p);

  // constraint[a][b] = 1 - b (1 - a x).
  std::vector<std::vector<std::size_t>> constraint(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t w = table.sub(table.one(), table.mul(a, x));
    for (std::size_t b = 0; b < n; ++b) constraint[a][b] = table.sub(table.one(), table.mul(b, w));
  }

  // Playing every element at once dominates any smaller move set: each extra
  // constraint only enlarges the ideal, and winning is monotone in it.
  // Delayer answers so that the resulting ideal is as small as possible;
  // only the inclusion-minimal outcomes matter.
  std::unordered_map<Mask, std::vector<Mask>> outcomes_memo;
  auto outcomes = [&](Mask ideal) -> const std::vector<Mask>& {
    auto it = outcomes_memo.find(ideal);
    if (it != outcomes_memo.end()) return it->second;
    std::vector<Mask> reach{ideal};
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Mask> next;
      for (Mask j : reach) {
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t c = constraint[a][b];
          next.push_back(table.contains(j, c) ? j : table.ideal(j | bit(c)));
        }
      }
      keep_minimal(next);
      reach = std::move(next);
    }
    return outcomes_memo.emplace(ideal, std::move(reach)).first->second;
  };

  std::map<std::pair<Mask, std::uint64_t>, bool> memo;
  std::function<bool(Mask, std::uint64_t)> wins = [&](Mask ideal, std::uint64_t budget) -> bool {
    if (ideal & powers) return true;
    if (budget == 0) return false;
    const auto key = std::make_pair(ideal, budget);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = true;
    for (Mask j : outcomes(ideal)) {
      if (!wins(j, budget - 1)) {
        result = false;
        break;
      }
    }
    memo[key] = result;
    return result;
  };

  const Mask start = table.ideal(0);
  for (std::uint64_t alpha = 0; alpha <= max_budget; ++alpha) {
    if (wins(start, alpha)) return alpha;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> minimal_alpha_ring(const FiniteRingTable& table, std::uint64_t max_budget) {
  std::uint64_t best = 0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    const auto a = minimal_alpha(table, x, x, max_budget);
    if (!a) return std::nullopt;
    best = std::max(best, *a);
  }
  return best;
}

}  // namespace jacarena
