#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leib/linalg.hpp"

namespace leib {

/// One sparse structure-constant entry: [e_i, e_j] has coefficient c on e_k.
struct TableEntry {
  std::uint32_t i, j, k;
  Scalar c;
};

/// Finite-dimensional algebra given by structure constants over an exact
/// field.  The bracket is the bilinear extension of the basis table; nothing
/// here assumes the Leibniz identity — check_leibniz() decides it.
class Algebra {
public:
  Algebra(FieldConfig f, std::vector<std::string> basis_names,
          const std::vector<TableEntry>& entries);

  static Algebra abelian(const FieldConfig& f, std::uint32_t dim);

  const FieldConfig& field() const { return f_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// [e_i, e_j] as a vector.
  const Vec& basis_product(std::uint32_t i, std::uint32_t j) const {
    return prod_[std::size_t{i} * dim_ + j];
  }

  /// Bilinear bracket of arbitrary vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// The sparse table, sorted by (i, j, k), zero entries omitted.
  std::vector<TableEntry> table() const;

  bool leibniz_checked() const { return leibniz_checked_; }
  void mark_leibniz_checked() { leibniz_checked_ = true; }

private:
  FieldConfig f_;
  std::uint32_t dim_;
  std::vector<std::string> names_;
  std::vector<Vec> prod_; // dim*dim basis products, row-major by (i, j)
  bool leibniz_checked_ = false;
};

/// check_leibniz verdict.  On failure, the lexicographically first triple
/// (i, j, k) with [[e_i,e_j],e_k] != [[e_i,e_k],e_j] + [e_i,[e_j,e_k]],
/// together with both evaluated sides.
struct LeibnizViolation {
  std::uint32_t i, j, k;
  Vec lhs, rhs;
};

struct LeibnizReport {
  bool ok;
  std::optional<LeibnizViolation> violation;
};

/// Decide the Leibniz identity on all dim^3 basis triples (enough, by
/// trilinearity).  Marks the algebra when it holds.
LeibnizReport check_leibniz(Algebra& a);
LeibnizReport check_leibniz(const Algebra& a);

/// First basis pair (i, j) with [e_i,e_j] != -[e_j,e_i], if any: a witness
/// that the table is not antisymmetric (hence not a Lie algebra table).
std::optional<std::pair<std::uint32_t, std::uint32_t>> antisymmetry_violation(const Algebra& a);

} // namespace leib
