#include "leib/algebra.hpp"

namespace leib {

Algebra::Algebra(FieldConfig f, std::vector<std::string> basis_names,
                 const std::vector<TableEntry>& entries)
    : f_(f), dim_(static_cast<std::uint32_t>(basis_names.size())), names_(std::move(basis_names)) {
  if (dim_ == 0) fail(errc::dimension_mismatch, "zero-dimensional algebra");
  prod_.assign(std::size_t{dim_} * dim_, Vec(f_, dim_));
  for (const auto& e : entries) {
    if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
      fail(errc::dimension_mismatch, "table index out of range");
    if (e.c.field() != f_) fail(errc::field_mismatch, "table coefficient in wrong field");
    auto& target = prod_[std::size_t{e.i} * dim_ + e.j];
    target[e.k] = target[e.k] + e.c;
  }
}

Algebra Algebra::abelian(const FieldConfig& f, std::uint32_t dim) {
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  Algebra a(f, std::move(names), {});
  a.leibniz_checked_ = true;
  return a;
}

Vec Algebra::bracket(const Vec& x, const Vec& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) fail(errc::dimension_mismatch, "bracket operand dim");
  if (x.field() != f_ || y.field() != f_) fail(errc::field_mismatch, "bracket operand field");
  Vec r(f_, dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      r.add_scaled(basis_product(i, j), x[i] * y[j]);
    }
  }
  return r;
}

std::vector<TableEntry> Algebra::table() const {
  std::vector<TableEntry> out;
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = 0; j < dim_; ++j) {
      const Vec& v = basis_product(i, j);
      for (std::uint32_t k = 0; k < dim_; ++k)
        if (!v[k].is_zero()) out.push_back(TableEntry{i, j, k, v[k]});
    }
  return out;
}

LeibnizReport check_leibniz(const Algebra& a) {
  const std::uint32_t d = a.dim();
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      for (std::uint32_t k = 0; k < d; ++k) {
        // [[e_i,e_j],e_k] vs [[e_i,e_k],e_j] + [e_i,[e_j,e_k]]
        Vec lhs = a.bracket(a.basis_product(i, j), Vec::basis(a.field(), d, k));
        Vec rhs = a.bracket(a.basis_product(i, k), Vec::basis(a.field(), d, j)) +
                  a.bracket(Vec::basis(a.field(), d, i), a.basis_product(j, k));
        if (lhs != rhs)
          return LeibnizReport{false, LeibnizViolation{i, j, k, std::move(lhs), std::move(rhs)}};
      }
  return LeibnizReport{true, std::nullopt};
}

LeibnizReport check_leibniz(Algebra& a) {
  auto rep = check_leibniz(static_cast<const Algebra&>(a));
  if (rep.ok) a.mark_leibniz_checked();
  return rep;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> antisymmetry_violation(const Algebra& a) {
  const std::uint32_t d = a.dim();
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      Vec sum = a.basis_product(i, j) + a.basis_product(j, i);
      if (!sum.is_zero()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

} // namespace leib
