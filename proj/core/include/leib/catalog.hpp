#pragma once

#include <map>

#include "leib/algebra.hpp"

namespace leib {

enum class Family { nf, r0, r1, r2, r3 };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

/// Minimal n accepted by the family builder (keeps every defining range
/// nonempty: nf/r0 from the chain rules, r1-r3 from the displayed ranges).
std::uint32_t family_min_n(Family fam);

/// Ambient dimension of the family at index n.
std::uint32_t family_dim(Family fam, std::uint32_t n);

/// A built catalog algebra together with the structural data that is part of
/// the construction (not recomputed): the nilradical, a complement to it, and
/// the role of each basis vector.
struct CatalogEntry {
  Family family;
  std::uint32_t n;
  Algebra algebra;
  Subspace nilradical;
  Subspace complement;
  std::map<std::string, std::string> basis_roles; // label -> "e_i" | "e_0" | "x" | "y"
};

/// Null-filiform nilpotent chain on e_1..e_n: [e_i, e_1] = e_{i+1}.
CatalogEntry build_nf(std::uint32_t n, const FieldConfig& f);

/// Solvable extension of nf(n) by e_0: adds [e_i, e_0] = -i e_i.
CatalogEntry build_r0(std::uint32_t n, const FieldConfig& f);

/// Solvable algebras with filiform non-Lie nilradical on e_1..e_n and
/// two-dimensional complement spanned by x, y.
CatalogEntry build_r1(std::uint32_t n, const FieldConfig& f);
CatalogEntry build_r2(std::uint32_t n, const FieldConfig& f);
CatalogEntry build_r3(std::uint32_t n, const FieldConfig& f);

CatalogEntry build_family(Family fam, std::uint32_t n, const FieldConfig& f);

} // namespace leib
