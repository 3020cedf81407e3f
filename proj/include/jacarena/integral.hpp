#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jacarena/ring.hpp"

namespace jacarena {

// Search cap for saturation exponents; JACARENA_SATURATION_CAP overrides the
// default of 16.
std::uint64_t saturation_cap();

// numerator / a^exponent in A_a.
struct LocalizedElement {
  Polynomial numerator;
  std::uint64_t exponent = 0;
};

// Arithmetic in A_a without constructing the localization. Numerators are kept
// in normal form; a scalar a is cancelled whenever it divides exactly.
class Localization {
 public:
  Localization(RingPtr base, Polynomial a);

  const RingPtr& base() const noexcept { return base_; }
  const Polynomial& a() const noexcept { return a_; }

  LocalizedElement from(const Polynomial& p) const { return normalize({p, 0}); }
  LocalizedElement normalize(LocalizedElement x) const;
  LocalizedElement add(const LocalizedElement& x, const LocalizedElement& y) const;
  LocalizedElement sub(const LocalizedElement& x, const LocalizedElement& y) const;
  LocalizedElement mul(const LocalizedElement& x, const LocalizedElement& y) const;
  LocalizedElement neg(const LocalizedElement& x) const;
  // Divides by a once more.
  LocalizedElement over_a(const LocalizedElement& x) const;
  // a^k (x.num a^{y.exp} - y.num a^{x.exp}) == 0 for some k <= bound.
  bool equal(const LocalizedElement& x, const LocalizedElement& y, std::uint64_t bound) const;
  // Numerator scaled to the given exponent (which must not be below x's).
  Polynomial numerator_at(const LocalizedElement& x, std::uint64_t exponent) const;

 private:
  RingPtr base_;
  Polynomial a_;
  Scalar scalar_a_;  // a as a constant, or 0 when a is not constant
};

// Characteristic polynomial det(T*I - M) by the division-free Berkowitz
// recursion. Returns [1, c_1, ..., c_n] with det = T^n + c_1 T^(n-1) + ... + c_n.
template <class T>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& m, const T& one,
                         const std::function<T(const T&, const T&)>& add,
                         const std::function<T(const T&, const T&)>& mul,
                         const std::function<T(const T&)>& neg);

// B = A[X] / <relations>, where `relation` = p_k X^k + ... + p_0 holds in B and
// its coefficients lie in A. B_a is then spanned by 1, X, ..., X^(k-1) over
// A_a for a = p_k.
struct MonogenicAlgebra {
  RingPtr base;
  RingPtr algebra;
  std::size_t generator = 0;           // index of X among algebra's variables
  std::vector<Polynomial> relation;    // p_0..p_k over base's space

  // Throws kNotMonogenic when the variables do not match and
  // kLeadingCoefficientZero when p_k vanishes in A.
  static MonogenicAlgebra make(RingPtr base, RingPtr algebra, std::string_view generator,
                               const Polynomial& relation);

  const Polynomial& leading() const { return relation.back(); }
  std::size_t degree() const { return relation.size() - 1; }
  // Image of an A element in B.
  Polynomial lift(const Polynomial& p) const { return p.in_space(algebra->space()); }
};

// a^l y^d == c_{d-1} y^(d-1) + ... + c_0 in B, c_j in A.
struct IntegralRelation {
  Polynomial y;
  Polynomial a;
  std::uint64_t l = 0;
  std::uint64_t d = 0;
  std::vector<Polynomial> c;

  // Throws kInvalidCertificate unless the identity holds in `algebra`.
  static IntegralRelation make(const MonogenicAlgebra& mono, Polynomial y, Polynomial a, std::uint64_t l,
                               std::vector<Polynomial> c);
  bool holds(const MonogenicAlgebra& mono) const;
};

// Monic characteristic polynomial of multiplication by b on B_a over A_a:
// returns q_0..q_{k-1} with b^k + q_{k-1} b^(k-1) + ... + q_0 == 0 in B_a.
std::vector<LocalizedElement> localized_dependence(const Polynomial& b, const MonogenicAlgebra& mono);

IntegralRelation integral_dependence(const Polynomial& b, const MonogenicAlgebra& mono);

// x in A, dep monic (l == 0) for b. Returns a with 1 - a x in <1 - b x>_B.
Polynomial invert_in_integral_quotient(const Polynomial& x, const Polynomial& b, const IntegralRelation& dep,
                                       const MonogenicAlgebra& mono);

// a2 = (1 + ... + (a1 a)^(e-1)) + a1^e a2', checked against
// 1 - a2 (1 - a1 a) == a1^e (a^e - a2' (1 - a1 a)).
Polynomial loc_key_clear(const Polynomial& a, const Polynomial& a1, const Polynomial& a2p, std::uint64_t e);

// With x = 1 - a1 a a0, returns a2 in A such that 1 - a2 x lies in
// <1 - b2 x>_B, where a = mono.leading().
Polynomial key_elementary_transfer(const Polynomial& a0, const Polynomial& a1, const Polynomial& b2,
                                   const MonogenicAlgebra& mono);

// -------------------------------------------------------------------------

template <class T>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& m, const T& one,
                         const std::function<T(const T&, const T&)>& add,
                         const std::function<T(const T&, const T&)>& mul,
                         const std::function<T(const T&)>& neg) {
  const std::size_t n = m.size();
  std::vector<T> vec{one};
  // Grow from the trailing 1x1 principal submatrix outwards.
  for (std::size_t r = n; r-- > 0;) {
    const std::size_t size = n - r;  // dimension of the current submatrix
    // Toeplitz column: 1, -a_rr, -R C, -R A1 C, ..., -R A1^(size-2) C.
    std::vector<T> col{one, neg(m[r][r])};
    std::vector<T> v;  // A1^j C
    for (std::size_t i = r + 1; i < n; ++i) v.push_back(m[i][r]);
    for (std::size_t j = 0; j + 2 <= size; ++j) {
      T acc = mul(m[r][r + 1], v[0]);
      for (std::size_t i = 1; i < v.size(); ++i) acc = add(acc, mul(m[r][r + 1 + i], v[i]));
      col.push_back(neg(acc));
      if (j + 3 > size) break;
      std::vector<T> next;
      for (std::size_t i = r + 1; i < n; ++i) {
        T s = mul(m[i][r + 1], v[0]);
        for (std::size_t k = 1; k < v.size(); ++k) s = add(s, mul(m[i][r + 1 + k], v[k]));
        next.push_back(s);
      }
      v = std::move(next);
    }
    // new_vec = Toeplitz(col) * vec, sizes (size+1) x size.
    std::vector<T> out;
    for (std::size_t i = 0; i <= size; ++i) {
      bool first = true;
      T s = one;
      for (std::size_t j = 0; j < vec.size() && j <= i; ++j) {
        if (i - j >= col.size()) continue;
        T term = mul(col[i - j], vec[j]);
        s = first ? term : add(s, term);
        first = false;
      }
      out.push_back(first ? add(neg(one), one) : s);
    }
    vec = std::move(out);
  }
  return vec;
}

}  // namespace jacarena
