#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leib/scalar.hpp"

namespace leib {

/// Coordinate vector over a fixed field.
class Vec {
public:
  Vec() = default;
  Vec(const FieldConfig& f, std::uint32_t dim) : f_(f), c_(dim, Scalar::zero(f)) {}
  Vec(const FieldConfig& f, std::vector<Scalar> coords) : f_(f), c_(std::move(coords)) {}

  static Vec basis(const FieldConfig& f, std::uint32_t dim, std::uint32_t i);

  const FieldConfig& field() const { return f_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(c_.size()); }
  const Scalar& operator[](std::uint32_t i) const { return c_[i]; }
  Scalar& operator[](std::uint32_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const;
  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(const Scalar& s) const;
  void add_scaled(const Vec& o, const Scalar& s); // *this += s*o

  bool operator==(const Vec& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  FieldConfig f_;
  std::vector<Scalar> c_;

  void check_compatible(const Vec& o) const;
};

/// Dense matrix; for a LinearMap, column j is the image of basis vector j.
class Matrix {
public:
  Matrix() = default;
  Matrix(const FieldConfig& f, std::uint32_t rows, std::uint32_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(std::size_t{rows} * cols, Scalar::zero(f)) {}
  Matrix(const FieldConfig& f, std::uint32_t n) : Matrix(f, n, n) {} // square zero matrix

  static Matrix identity(const FieldConfig& f, std::uint32_t n);
  static Matrix from_columns(const std::vector<Vec>& cols);

  const FieldConfig& field() const { return f_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::uint32_t dim() const { return rows_; } // square-map shorthand

  const Scalar& at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t{i} * cols_ + j]; }
  Scalar& at(std::uint32_t i, std::uint32_t j) { return a_[std::size_t{i} * cols_ + j]; }

  Vec column(std::uint32_t j) const;
  Vec row(std::uint32_t i) const;
  void set_column(std::uint32_t j, const Vec& v);

  Vec apply(const Vec& v) const;       // matrix * vector
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Canonical flat text key (dims + entries); used to sort/dedupe map sets.
  std::string key() const;
  std::string to_string() const;

private:
  FieldConfig f_;
  std::uint32_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

using LinearMap = Matrix;

/// Reduced row echelon form (Gauss-Jordan, exact): unit pivots, zeros above
/// and below, rows ordered by pivot column.  Unique per row space, which is
/// what makes Subspace comparisons structural.
Matrix rref(const Matrix& m, std::uint32_t* rank_out = nullptr);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Scalar det_bareiss(const Matrix& m);

/// Row space of a set of vectors in canonical RREF basis.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(const FieldConfig& f, std::uint32_t ambient);
  static Subspace whole(const FieldConfig& f, std::uint32_t ambient);
  static Subspace span(const FieldConfig& f, std::uint32_t ambient, const std::vector<Vec>& gens);

  const FieldConfig& field() const { return f_; }
  std::uint32_t ambient_dim() const { return ambient_; }
  std::uint32_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; } // canonical RREF rows
  std::vector<Vec> basis_vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  FieldConfig f_;
  std::uint32_t ambient_ = 0;
  Matrix basis_; // rank x ambient, RREF, no zero rows
};

} // namespace leib
