#pragma once

#include "leib/algebra.hpp"

namespace leib {

/// Span of all pairwise brackets of basis vectors of U and V, as a canonical
/// subspace of the algebra.
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

enum class SeriesKind { derived, lower_central };

/// Dimension profile of a descending series.  dims starts at the whole
/// algebra (term 1) and is extended until a term vanishes or repeats; in the
/// repeat case the first repeated value is included once.  stabilized_at is
/// the 1-based index of the first term equal to all later ones.
struct SeriesReport {
  SeriesKind kind;
  std::vector<std::uint32_t> dims;
  std::uint32_t stabilized_at;
  bool terminates_at_zero;
  std::vector<Subspace> terms; // same indexing as dims
};

SeriesReport derived_series(const Algebra& a);
SeriesReport lower_central_series(const Algebra& a);

/// index is the minimal 1-based s with the series term zero (valid iff holds).
struct IndexedPredicate {
  bool holds;
  std::uint32_t index;
};

IndexedPredicate is_solvable(const Algebra& a);   // derived series reaches 0
IndexedPredicate is_nilpotent(const Algebra& a);  // lower central series reaches 0

/// dim L^i == n+1-i for 1 <= i <= n+1 (lower central series).
bool is_null_filiform(const Algebra& a);
/// dim L^i == n-i for 2 <= i <= n (lower central series).
bool is_filiform(const Algebra& a);

/// Associated graded algebra of a nilpotent algebra along its lower central
/// series, on a basis adapted to the filtration.  layer_dims are the
/// homogeneous component dimensions.  Throws not_nilpotent otherwise.
struct GradedAlgebra {
  Algebra algebra;
  std::vector<std::uint32_t> layer_dims;
};

GradedAlgebra associated_graded(const Algebra& a);

} // namespace leib
