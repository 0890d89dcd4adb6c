#pragma once

#include <functional>

#include "leib/catalog.hpp"

namespace leib {

/// Parameter tuple for the closed-form automorphism families.
///   r0: (alpha, beta),            beta != 0
///   r1: (alpha, beta, gamma),     alpha*beta != 0
///   r2: (alpha, beta, gamma, delta), alpha*gamma != 0
///   r3: (alpha, beta, gamma),     alpha*gamma != 0
/// The named constructors enforce admissibility; unchecked() skips it so
/// callers can probe what happens on the degenerate locus.
struct AutParams {
  Family family = Family::r0;
  Scalar alpha, beta, gamma, delta;

  static AutParams r0(Scalar a, Scalar b);
  static AutParams r1(Scalar a, Scalar b, Scalar g);
  static AutParams r2(Scalar a, Scalar b, Scalar g, Scalar d);
  static AutParams r3(Scalar a, Scalar b, Scalar g);
  static AutParams unchecked(Family fam, Scalar a, Scalar b, Scalar g, Scalar d);

  bool admissible() const;
  const FieldConfig& field() const { return alpha.field(); }

  bool operator==(const AutParams& o) const;
  std::string to_string() const;
};

/// Number of parameters the family uses (2, 3, 3 or 4).
std::uint32_t family_param_count(Family fam);

/// The closed-form automorphism matrix for the family at index n.  Columns
/// follow the catalog basis order.  No admissibility check here.
LinearMap aut_matrix(const AutParams& p, std::uint32_t n);

/// Build params + matrix with validation.
LinearMap make_automorphism(Family fam, std::uint32_t n, const AutParams& p);

struct AutVerdict {
  enum class Kind { yes, not_bijective, not_homomorphic } kind;
  std::uint32_t i = 0, j = 0; // lex-first violating basis pair, if not_homomorphic

  bool ok() const { return kind == Kind::yes; }
};

/// Bijective homomorphism test: exact determinant (fraction-free elimination)
/// plus T[e_i,e_j] == [T e_i, T e_j] on all basis pairs.
AutVerdict is_automorphism(const Algebra& a, const LinearMap& t);

/// Composition as matrix product: compose(s, t) applies t first, then s.
LinearMap compose(const LinearMap& s, const LinearMap& t);

/// Parameter-level composition law for r0, fixed against the matrix product:
/// aut(compose_params_r0(p, q)) == compose(aut(p), aut(q)).
AutParams compose_params_r0(const AutParams& p, const AutParams& q);

/// Iterate all admissible parameter tuples over a prime field.
void for_each_admissible_params(Family fam, const FieldConfig& f,
                                const std::function<void(const AutParams&)>& fn);

/// Automorphism set over F_p from the family parametrization, sorted by
/// canonical matrix key.
std::vector<LinearMap> enumerate_aut_parametrized(Family fam, std::uint32_t n,
                                                  const FieldConfig& f);

} // namespace leib
