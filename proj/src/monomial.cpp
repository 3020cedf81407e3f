#include "jacarena/monomial.hpp"

#include <algorithm>

namespace jacarena {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = 0;
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(index + 1, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size() || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  const std::size_t n = std::min(exps_.size(), other.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator/(const Monomial& num, const Monomial& den) {
  std::vector<std::uint32_t> e = num.exps_;
  for (std::size_t i = 0; i < den.exps_.size(); ++i) e[i] -= den.exps_[i];
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  const auto& longer = a.exps_.size() >= b.exps_.size() ? a : b;
  const auto& shorter = a.exps_.size() >= b.exps_.size() ? b : a;
  Monomial out;
  out.exps_ = longer.exps_;
  for (std::size_t i = 0; i < shorter.exps_.size(); ++i) out.exps_[i] += shorter.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t index) const {
  std::vector<std::uint32_t> e = exps_;
  if (index < e.size()) e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
  return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t index, std::uint32_t value) const {
  std::vector<std::uint32_t> e = exps_;
  if (e.size() <= index) e.resize(index + 1, 0);
  e[index] = value;
  return Monomial(std::move(e));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::kLex) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = std::max(a.size(), b.size()); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace jacarena
