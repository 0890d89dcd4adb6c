#include "leib/series.hpp"

namespace leib {

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> gens;
  auto ub = u.basis_vectors();
  auto vb = v.basis_vectors();
  gens.reserve(ub.size() * vb.size());
  for (const auto& x : ub)
    for (const auto& y : vb) gens.push_back(a.bracket(x, y));
  return Subspace::span(a.field(), a.dim(), gens);
}

namespace {

SeriesReport run_series(const Algebra& a, SeriesKind kind) {
  SeriesReport rep;
  rep.kind = kind;
  Subspace whole = Subspace::whole(a.field(), a.dim());
  Subspace cur = whole;
  rep.terms.push_back(cur);
  rep.dims.push_back(cur.dim());
  for (;;) {
    Subspace next = kind == SeriesKind::derived ? subspace_product(a, cur, cur)
                                                : subspace_product(a, cur, whole);
    if (next.dim() == 0) {
      rep.terms.push_back(next);
      rep.dims.push_back(0);
      rep.stabilized_at = static_cast<std::uint32_t>(rep.dims.size());
      rep.terminates_at_zero = true;
      return rep;
    }
    if (next == cur) {
      rep.terms.push_back(next);
      rep.dims.push_back(next.dim());
      rep.stabilized_at = static_cast<std::uint32_t>(rep.dims.size()) - 1;
      rep.terminates_at_zero = false;
      return rep;
    }
    rep.terms.push_back(next);
    rep.dims.push_back(next.dim());
    cur = std::move(next);
  }
}

/// dim of the series term at 1-based index i, reading past the stored tail.
std::uint32_t dim_at(const SeriesReport& rep, std::uint32_t i) {
  if (i <= rep.dims.size()) return rep.dims[i - 1];
  return rep.terminates_at_zero ? 0 : rep.dims.back();
}

} // namespace

SeriesReport derived_series(const Algebra& a) { return run_series(a, SeriesKind::derived); }

SeriesReport lower_central_series(const Algebra& a) {
  return run_series(a, SeriesKind::lower_central);
}

IndexedPredicate is_solvable(const Algebra& a) {
  auto rep = derived_series(a);
  if (!rep.terminates_at_zero) return {false, 0};
  return {true, static_cast<std::uint32_t>(rep.dims.size())};
}

IndexedPredicate is_nilpotent(const Algebra& a) {
  auto rep = lower_central_series(a);
  if (!rep.terminates_at_zero) return {false, 0};
  return {true, static_cast<std::uint32_t>(rep.dims.size())};
}

bool is_null_filiform(const Algebra& a) {
  auto rep = lower_central_series(a);
  if (!rep.terminates_at_zero) return false;
  const std::uint32_t n = a.dim();
  for (std::uint32_t i = 1; i <= n + 1; ++i)
    if (dim_at(rep, i) != n + 1 - i) return false;
  return true;
}

bool is_filiform(const Algebra& a) {
  auto rep = lower_central_series(a);
  if (!rep.terminates_at_zero) return false;
  const std::uint32_t n = a.dim();
  for (std::uint32_t i = 2; i <= n; ++i)
    if (dim_at(rep, i) != n - i) return false;
  return true;
}

GradedAlgebra associated_graded(const Algebra& a) {
  auto rep = lower_central_series(a);
  if (!rep.terminates_at_zero) fail(errc::not_nilpotent, "associated graded needs a nilpotent algebra");
  const auto& f = a.field();
  const std::uint32_t d = a.dim();
  const std::uint32_t depth = static_cast<std::uint32_t>(rep.terms.size()); // terms 1..depth, last zero

  // Adapted basis: walk levels bottom-up so representatives of deeper terms
  // come from extending the span built so far.
  std::vector<Vec> adapted;          // final order: level-1 reps, level-2 reps, ...
  std::vector<std::uint32_t> level;  // level of each adapted vector
  std::vector<std::uint32_t> layer_dims;
  {
    std::vector<std::vector<Vec>> per_level(depth + 1);
    std::vector<Vec> have;
    for (std::uint32_t lvl = depth; lvl >= 1; --lvl) {
      const Subspace& s = rep.terms[lvl - 1];
      for (const auto& row : s.basis_vectors()) {
        Subspace sofar = Subspace::span(f, d, have);
        if (!sofar.contains(row)) {
          per_level[lvl].push_back(row);
          have.push_back(row);
        }
      }
      if (lvl == 1) break;
    }
    for (std::uint32_t lvl = 1; lvl <= depth; ++lvl) {
      layer_dims.push_back(static_cast<std::uint32_t>(per_level[lvl].size()));
      for (auto& v : per_level[lvl]) {
        adapted.push_back(std::move(v));
        level.push_back(lvl);
      }
    }
    while (!layer_dims.empty() && layer_dims.back() == 0) layer_dims.pop_back();
  }
  if (adapted.size() != d) fail(errc::internal, "adapted basis has wrong size");

  // Inverse of the change of basis, via RREF of [P | I].
  Matrix aug(f, d, 2 * d);
  for (std::uint32_t j = 0; j < d; ++j)
    for (std::uint32_t i = 0; i < d; ++i) aug.at(i, j) = adapted[j][i];
  for (std::uint32_t i = 0; i < d; ++i) aug.at(i, d + i) = Scalar::one(f);
  Matrix red = rref(aug);
  Matrix pinv(f, d, d);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) pinv.at(i, j) = red.at(i, d + j);

  std::vector<std::string> names;
  {
    std::vector<std::uint32_t> counter(depth + 1, 0);
    for (std::uint32_t r = 0; r < d; ++r)
      names.push_back("g" + std::to_string(level[r]) + "_" + std::to_string(++counter[level[r]]));
  }

  std::vector<TableEntry> entries;
  for (std::uint32_t r = 0; r < d; ++r)
    for (std::uint32_t s = 0; s < d; ++s) {
      Vec prod = a.bracket(adapted[r], adapted[s]);
      if (prod.is_zero()) continue;
      Vec coords = pinv.apply(prod);
      std::uint32_t target = level[r] + level[s];
      for (std::uint32_t u = 0; u < d; ++u) {
        if (coords[u].is_zero()) continue;
        if (level[u] < target)
          fail(errc::internal, "bracket left its filtration level"); // [L^i,L^j] <= L^{i+j}
        if (level[u] == target) entries.push_back(TableEntry{r, s, u, coords[u]});
      }
    }

  GradedAlgebra out{Algebra(f, std::move(names), entries), std::move(layer_dims)};
  return out;
}

} // namespace leib
