#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacarena/polynomial.hpp"

namespace jacarena {

// x^exponent == sum_i cofactors[i] * gens[i], where gens is the generator list
// the certificate was produced for.
struct NilCertificate {
  std::uint64_t exponent = 0;
  std::vector<Polynomial> cofactors;
};

// Pure polynomial arithmetic; no Gröbner machinery involved.
bool certificate_holds(const Polynomial& x, const std::vector<Polynomial>& gens, const NilCertificate& cert);

// Decides x in Nil<gens> by testing 1 in <gens, 1 - T*x>.
bool in_nilradical(const Polynomial& x, const std::vector<Polynomial>& gens);

struct NilOptions {
  // Largest exponent tried by the incremental search before falling back to
  // the Rabinowitsch cofactors.
  std::uint64_t search_limit = 64;
};

// Certificate for x in Nil<gens>, or nullopt when x is not in the nilradical.
std::optional<NilCertificate> nil_member(const Polynomial& x, const std::vector<Polynomial>& gens,
                                         const NilOptions& options = {});

// The two certificate constructions separately. Both return nullopt when x is
// not in the nilradical; the search variant also when the limit is reached.
std::optional<NilCertificate> nil_certificate_by_search(const Polynomial& x, const std::vector<Polynomial>& gens,
                                                        std::uint64_t limit);
std::optional<NilCertificate> nil_certificate_by_rabinowitsch(const Polynomial& x,
                                                              const std::vector<Polynomial>& gens);

// From (xy)^m in <U> and x^n in <U, y> builds x^(nm+m) in <U>. `gens` is U;
// cert_x is over U followed by y.
NilCertificate radical_combine(const Polynomial& x, const Polynomial& y, const std::vector<Polynomial>& gens,
                               const NilCertificate& cert_xy, const NilCertificate& cert_x);

struct UnitDecomposition {
  Polynomial constant_part;     // u_0
  Polynomial constant_inverse;  // v_0, with u_0 * v_0 == 1 modulo the relations
  struct Coefficient {
    std::uint32_t degree;
    Polynomial value;
    NilCertificate certificate;  // over the base relations
  };
  std::vector<Coefficient> nilpotent_coefficients;
  // u_m^leading_bound lies in the relation ideal, m = deg u.
  std::uint64_t leading_bound = 0;
};

// u*v == 1 in A[X] where A is presented by `base_relations` (free of X).
UnitDecomposition unit_poly_decompose(const Polynomial& u, const Polynomial& v,
                                      const std::vector<Polynomial>& base_relations, std::size_t var);

}  // namespace jacarena
