#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacarena/ring.hpp"

namespace jacarena {

// Every element of a finite ring, with addition and multiplication tables.
// Ideals are bit masks over the element list, so at most 64 elements.
class FiniteRingTable {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kMaxElements = 64;

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const Polynomial& element(std::size_t i) const { return elements_[i]; }
  // Index of the normal form of p.
  std::size_t index_of(const Polynomial& p) const;

  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg_[b]); }

  // Smallest ideal containing the masked elements.
  Mask ideal(Mask gens) const;
  Mask ideal_of(const std::vector<std::size_t>& gens) const;
  bool contains(Mask ideal, std::size_t e) const { return (ideal >> e) & 1U; }

 private:
  friend FiniteRingTable enumerate_finite(const RingPtr& ring);

  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> add_, mul_, neg_;
  std::size_t zero_ = 0, one_ = 0;
};

// Throws kNotFinite for infinite rings and kInvalidArgument beyond
// kMaxElements elements.
FiniteRingTable enumerate_finite(const RingPtr& ring);

bool brute_nil(std::size_t x, const std::vector<std::size_t>& u, const FiniteRingTable& table);
bool brute_jac(std::size_t x, const std::vector<std::size_t>& u, const FiniteRingTable& table);

// Least budget at which Prover wins J(table, x, x'), or nullopt if none up to
// max_budget.
std::optional<std::uint64_t> minimal_alpha(const FiniteRingTable& table, std::size_t x, std::size_t x_prime,
                                           std::uint64_t max_budget = 8);
std::optional<std::uint64_t> minimal_alpha_ring(const FiniteRingTable& table, std::uint64_t max_budget = 8);

}  // namespace jacarena
