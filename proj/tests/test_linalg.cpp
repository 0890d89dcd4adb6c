#include <doctest.h>

#include "leib/linalg.hpp"
#include "leib/rng.hpp"

using namespace leib;

namespace {

Matrix mat3(const FieldConfig& f, std::initializer_list<int> rows) {
  Matrix m(f, 3, 3);
  auto it = rows.begin();
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) m.at(i, j) = Scalar::from_int(*it++, f);
  return m;
}

} // namespace

TEST_CASE("vector arithmetic") {
  const FieldConfig q = FieldConfig::rationals();
  Vec a = Vec::basis(q, 3, 0), b = Vec::basis(q, 3, 2);
  Vec s = a + b.scaled(Scalar::from_int(2, q));
  CHECK(s[0] == Scalar::one(q));
  CHECK(s[1].is_zero());
  CHECK(s[2] == Scalar::from_int(2, q));
  s.add_scaled(a, Scalar::from_int(-1, q));
  CHECK(s[0].is_zero());
  CHECK_FALSE(s.is_zero());
  CHECK((a - a).is_zero());
}

TEST_CASE("matrix application and composition") {
  const FieldConfig q = FieldConfig::rationals();
  const Matrix id = Matrix::identity(q, 3);
  const Matrix m = mat3(q, {1, 2, 0, 0, 1, 0, 3, 0, 1});
  CHECK(m * id == m);
  CHECK(id * m == m);
  const Vec e1 = Vec::basis(q, 3, 1);
  const Vec img = m.apply(e1);
  CHECK(img[0] == Scalar::from_int(2, q)); // column reading: entry (0,1)
  CHECK(img[1] == Scalar::one(q));
  CHECK(img[2].is_zero());
  // (m*n)v == m(n v) on a random sample
  Rng rng(7);
  const Matrix n = mat3(q, {0, 1, 1, 2, 0, 1, 1, 1, 0});
  for (int t = 0; t < 20; ++t) {
    Vec v(q, 3);
    for (std::uint32_t i = 0; i < 3; ++i) v[i] = rng.small_rational();
    CHECK((m * n).apply(v) == m.apply(n.apply(v)));
  }
}

TEST_CASE("rref is canonical") {
  const FieldConfig q = FieldConfig::rationals();
  std::uint32_t rank = 0;
  const Matrix a = mat3(q, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  const Matrix r = rref(a, &rank);
  CHECK(rank == 2);
  // identical row space, different generators -> identical rref
  const Matrix b = mat3(q, {2, 2, 4, 3, 6, 9, 1, 0, 1});
  CHECK(rref(b) == r);
}

TEST_CASE("determinant by fraction-free elimination") {
  const FieldConfig q = FieldConfig::rationals();
  CHECK(det_bareiss(Matrix::identity(q, 4)) == Scalar::one(q));
  CHECK(det_bareiss(mat3(q, {1, 2, 3, 2, 4, 6, 1, 0, 1})).is_zero());
  CHECK(det_bareiss(mat3(q, {2, 0, 0, 0, 3, 0, 0, 0, 5})) == Scalar::from_int(30, q));
  // needs a row swap
  CHECK(det_bareiss(mat3(q, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == Scalar::from_int(-1, q));
  // rational entries
  Matrix m(q, 2, 2);
  m.at(0, 0) = parse_scalar("1/2", q);
  m.at(0, 1) = parse_scalar("1/3", q);
  m.at(1, 0) = parse_scalar("1/4", q);
  m.at(1, 1) = parse_scalar("1/5", q);
  CHECK(det_bareiss(m) == parse_scalar("1/60", q));
}

TEST_CASE("subspaces are canonical") {
  const FieldConfig q = FieldConfig::rationals();
  const Vec e0 = Vec::basis(q, 3, 0), e1 = Vec::basis(q, 3, 1);
  Vec mix = e0 + e1.scaled(Scalar::from_int(5, q));
  const Subspace s1 = Subspace::span(q, 3, {e0, mix});
  const Subspace s2 = Subspace::span(q, 3, {mix, e1, e0 + e1});
  CHECK(s1.dim() == 2);
  CHECK(s1 == s2); // same span, different generators
  CHECK(s1.contains(e1));
  CHECK_FALSE(s1.contains(Vec::basis(q, 3, 2)));
  CHECK(Subspace::zero(q, 3).dim() == 0);
  CHECK(Subspace::whole(q, 3).dim() == 3);
  CHECK(s1.sum(Subspace::span(q, 3, {Vec::basis(q, 3, 2)})) == Subspace::whole(q, 3));
  CHECK(Subspace::whole(q, 3).contains(s1));
}

TEST_CASE("matrix keys sort maps deterministically") {
  const FieldConfig f = FieldConfig::prime(3);
  const Matrix a = Matrix::identity(f, 2);
  Matrix b = Matrix::identity(f, 2);
  b.at(0, 1) = Scalar::one(f);
  CHECK(a.key() != b.key());
  CHECK(a.key() == Matrix::identity(f, 2).key());
}
