#include "leib/linalg.hpp"

#include <sstream>

namespace leib {

void Vec::check_compatible(const Vec& o) const {
  if (f_ != o.f_) fail(errc::field_mismatch, "vector fields differ");
  if (c_.size() != o.c_.size()) fail(errc::dimension_mismatch, "vector dims differ");
}

Vec Vec::basis(const FieldConfig& f, std::uint32_t dim, std::uint32_t i) {
  Vec v(f, dim);
  v[i] = Scalar::one(f);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  check_compatible(o);
  Vec r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  check_compatible(o);
  Vec r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
  return r;
}

Vec Vec::scaled(const Scalar& s) const {
  Vec r = *this;
  for (auto& x : r.c_) x = x * s;
  return r;
}

void Vec::add_scaled(const Vec& o, const Scalar& s) {
  check_compatible(o);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i] * s;
}

std::string Vec::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].to_string();
  }
  os << ")";
  return os.str();
}

Matrix Matrix::identity(const FieldConfig& f, std::uint32_t n) {
  Matrix m(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) fail(errc::dimension_mismatch, "no columns");
  const auto& f = cols[0].field();
  std::uint32_t rows = cols[0].dim();
  Matrix m(f, rows, static_cast<std::uint32_t>(cols.size()));
  for (std::uint32_t j = 0; j < m.cols(); ++j) {
    if (cols[j].field() != f || cols[j].dim() != rows)
      fail(errc::dimension_mismatch, "ragged column set");
    for (std::uint32_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::uint32_t j) const {
  Vec v(f_, rows_);
  for (std::uint32_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(std::uint32_t i) const {
  Vec v(f_, cols_);
  for (std::uint32_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_column(std::uint32_t j, const Vec& v) {
  if (v.dim() != rows_ || v.field() != f_) fail(errc::dimension_mismatch, "bad column");
  for (std::uint32_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::apply(const Vec& v) const {
  if (v.dim() != cols_) fail(errc::dimension_mismatch, "matrix-vector shape");
  if (v.field() != f_) fail(errc::field_mismatch, "matrix-vector field");
  Vec r(f_, rows_);
  for (std::uint32_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::uint32_t i = 0; i < rows_; ++i) r[i] = r[i] + at(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(errc::dimension_mismatch, "matrix product shape");
  if (f_ != o.f_) fail(errc::field_mismatch, "matrix product field");
  Matrix r(f_, rows_, o.cols_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::uint32_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string Matrix::key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":";
  for (const auto& s : a_) os << s.to_string() << ",";
  return os.str();
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "") << "[";
    for (std::uint32_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    os << "]";
  }
  return os.str();
}

Matrix rref(const Matrix& m, std::uint32_t* rank_out) {
  Matrix r = m;
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < r.cols() && rank < r.rows(); ++col) {
    std::uint32_t pivot = rank;
    while (pivot < r.rows() && r.at(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != rank)
      for (std::uint32_t j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(rank, j));
    Scalar inv = r.at(rank, col).inv();
    for (std::uint32_t j = col; j < r.cols(); ++j) r.at(rank, j) = r.at(rank, j) * inv;
    for (std::uint32_t i = 0; i < r.rows(); ++i) {
      if (i == rank || r.at(i, col).is_zero()) continue;
      Scalar c = r.at(i, col);
      for (std::uint32_t j = col; j < r.cols(); ++j)
        r.at(i, j) = r.at(i, j) - c * r.at(rank, j);
    }
    ++rank;
  }
  if (rank_out) *rank_out = rank;
  return r;
}

Scalar det_bareiss(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "determinant of non-square matrix");
  const auto& f = m.field();
  std::uint32_t n = m.rows();
  if (n == 0) return Scalar::one(f);
  Matrix a = m;
  Scalar prev = Scalar::one(f);
  bool negate = false;
  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::uint32_t swap_row = k + 1;
      while (swap_row < n && a.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Scalar::zero(f);
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      negate = !negate;
    }
    for (std::uint32_t i = k + 1; i < n; ++i)
      for (std::uint32_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  Scalar d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

Subspace Subspace::zero(const FieldConfig& f, std::uint32_t ambient) {
  Subspace s;
  s.f_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::whole(const FieldConfig& f, std::uint32_t ambient) {
  Subspace s;
  s.f_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(f, ambient);
  return s;
}

Subspace Subspace::span(const FieldConfig& f, std::uint32_t ambient, const std::vector<Vec>& gens) {
  Matrix m(f, static_cast<std::uint32_t>(gens.size()), ambient);
  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    if (gens[i].dim() != ambient || gens[i].field() != f)
      fail(errc::dimension_mismatch, "generator outside ambient space");
    for (std::uint32_t j = 0; j < ambient; ++j) m.at(i, j) = gens[i][j];
  }
  std::uint32_t rank = 0;
  Matrix r = rref(m, &rank);
  Subspace s;
  s.f_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, rank, ambient);
  for (std::uint32_t i = 0; i < rank; ++i)
    for (std::uint32_t j = 0; j < ambient; ++j) s.basis_.at(i, j) = r.at(i, j);
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::uint32_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.dim() != ambient_ || v.field() != f_)
    fail(errc::dimension_mismatch, "membership test outside ambient space");
  // reduce v against the RREF rows; member iff the residue vanishes
  Vec r = v;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < ambient_ && row < dim(); ++col) {
    if (basis_.at(row, col).is_zero()) continue; // not this row's pivot
    if (!r[col].is_zero()) {
      Scalar c = r[col];
      for (std::uint32_t j = 0; j < ambient_; ++j) r[j] = r[j] - c * basis_.at(row, j);
    }
    ++row;
  }
  return r.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::uint32_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (f_ != other.f_ || ambient_ != other.ambient_)
    fail(errc::dimension_mismatch, "subspace sum in different ambient spaces");
  std::vector<Vec> gens = basis_vectors();
  auto more = other.basis_vectors();
  gens.insert(gens.end(), more.begin(), more.end());
  return span(f_, ambient_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
  return f_ == o.f_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

} // namespace leib
