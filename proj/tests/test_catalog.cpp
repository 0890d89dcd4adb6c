#include <doctest.h>

#include "leib/catalog.hpp"
#include "leib/series.hpp"

using namespace leib;

namespace {
const FieldConfig kQ = FieldConfig::rationals();
}

TEST_CASE("family naming, minima and dimensions") {
  CHECK(family_from_name("r0") == Family::r0);
  CHECK(family_from_name("nf") == Family::nf);
  CHECK_THROWS_AS(family_from_name("r9"), Error);
  CHECK(family_min_n(Family::nf) == 1);
  CHECK(family_min_n(Family::r0) == 2);
  CHECK(family_min_n(Family::r2) == 4);
  CHECK(family_dim(Family::nf, 4) == 4);
  CHECK(family_dim(Family::r0, 4) == 5);
  CHECK(family_dim(Family::r3, 4) == 6);
}

TEST_CASE("builder validation") {
  CHECK_THROWS_AS(build_r0(1, kQ), Error);
  CHECK_THROWS_AS(build_r1(3, kQ), Error);
  // p must exceed n so the defining coefficients stay invertible
  CHECK_THROWS_AS(build_r0(5, FieldConfig::prime(5)), Error);
  CHECK_NOTHROW(build_r0(5, FieldConfig::prime(7)));
  CHECK_NOTHROW(build_nf(1, kQ)); // one-dimensional abelian chain
}

TEST_CASE("null-filiform chain") {
  CatalogEntry e = build_nf(3, kQ);
  CHECK(e.algebra.dim() == 3);
  CHECK(e.algebra.basis_names() == std::vector<std::string>{"e_1", "e_2", "e_3"});
  // [e_1,e_1] = e_2, [e_2,e_1] = e_3, nothing else
  CHECK(e.algebra.basis_product(0, 0) == Vec::basis(kQ, 3, 1));
  CHECK(e.algebra.basis_product(1, 0) == Vec::basis(kQ, 3, 2));
  CHECK(e.algebra.basis_product(2, 0).is_zero());
  CHECK(e.algebra.basis_product(0, 1).is_zero());
  CHECK(lower_central_series(e.algebra).dims == std::vector<std::uint32_t>{3, 2, 1, 0});
  CHECK(is_null_filiform(e.algebra));
  CHECK(e.nilradical.dim() == 3);
  CHECK(e.complement.dim() == 0);
}

TEST_CASE("solvable extension r0") {
  CatalogEntry e = build_r0(2, kQ);
  REQUIRE(e.algebra.dim() == 3);
  CHECK(e.algebra.basis_names() == std::vector<std::string>{"e_0", "e_1", "e_2"});
  // chain [e_0,e_1]=e_1, [e_1,e_1]=e_2; action [e_1,e_0]=-e_1, [e_2,e_0]=-2e_2
  CHECK(e.algebra.basis_product(0, 1) == Vec::basis(kQ, 3, 1));
  CHECK(e.algebra.basis_product(1, 1) == Vec::basis(kQ, 3, 2));
  CHECK(e.algebra.basis_product(1, 0) == Vec::basis(kQ, 3, 1).scaled(Scalar::from_int(-1, kQ)));
  CHECK(e.algebra.basis_product(2, 0) == Vec::basis(kQ, 3, 2).scaled(Scalar::from_int(-2, kQ)));
  CHECK(e.algebra.basis_product(0, 0).is_zero());

  const SeriesReport d = derived_series(e.algebra);
  CHECK(d.dims == std::vector<std::uint32_t>{3, 2, 1, 0});
  CHECK(is_solvable(e.algebra).index == 4);
  const SeriesReport lc = lower_central_series(e.algebra);
  CHECK(lc.dims == std::vector<std::uint32_t>{3, 2, 2});
  CHECK(lc.stabilized_at == 2);
  CHECK_FALSE(lc.terminates_at_zero);
  CHECK_FALSE(is_nilpotent(e.algebra).holds);
  CHECK(e.nilradical.dim() == 2);
  CHECK(e.complement.dim() == 1);
  CHECK(e.complement.contains(Vec::basis(kQ, 3, 0)));
}

TEST_CASE("r1 table") {
  CatalogEntry e = build_r1(5, kQ);
  REQUIRE(e.algebra.dim() == 7); // e_1..e_5, x, y
  const std::uint32_t x = 5, y = 6;
  CHECK(e.algebra.basis_names()[x] == "x");
  CHECK(e.algebra.basis_names()[y] == "y");
  // chain starts at e_2: [e_1,e_1] = 0 but [e_2,e_1] = e_3
  CHECK(e.algebra.basis_product(0, 0).is_zero());
  CHECK(e.algebra.basis_product(1, 0) == Vec::basis(kQ, 7, 2));
  CHECK(e.algebra.basis_product(3, 0) == Vec::basis(kQ, 7, 4));
  // [e_1,x] = e_1 = -[x,e_1]
  CHECK(e.algebra.basis_product(0, x) == Vec::basis(kQ, 7, 0));
  CHECK(e.algebra.basis_product(x, 0) == Vec::basis(kQ, 7, 0).scaled(Scalar::from_int(-1, kQ)));
  // [e_i,x] = (i-1) e_i and [e_i,y] = e_i for i >= 2; [e_1,y] = 0
  CHECK(e.algebra.basis_product(2, x) == Vec::basis(kQ, 7, 2).scaled(Scalar::from_int(2, kQ)));
  CHECK(e.algebra.basis_product(2, y) == Vec::basis(kQ, 7, 2));
  CHECK(e.algebra.basis_product(0, y).is_zero());
  CHECK(check_leibniz(e.algebra).ok);
}

TEST_CASE("r2 and r3 differ by one action entry") {
  CatalogEntry r2 = build_r2(4, kQ);
  CatalogEntry r3 = build_r3(4, kQ);
  const std::uint32_t x = 4, y = 5;
  // [e_1,e_1] = e_3 heads the chain in both
  CHECK(r2.algebra.basis_product(0, 0) == Vec::basis(kQ, 6, 2));
  CHECK(r3.algebra.basis_product(0, 0) == Vec::basis(kQ, 6, 2));
  CHECK(r2.algebra.basis_product(2, 0) == Vec::basis(kQ, 6, 3));
  // [e_2,y] = e_2 in both; [y,e_2] = -e_2 only in r2
  CHECK(r2.algebra.basis_product(1, y) == Vec::basis(kQ, 6, 1));
  CHECK(r3.algebra.basis_product(1, y) == Vec::basis(kQ, 6, 1));
  CHECK(r2.algebra.basis_product(y, 1) ==
        Vec::basis(kQ, 6, 1).scaled(Scalar::from_int(-1, kQ)));
  CHECK(r3.algebra.basis_product(y, 1).is_zero());
  // [e_i,x] = (i-1) e_i for i >= 3; e_2 is not scaled by x
  CHECK(r2.algebra.basis_product(2, x) == Vec::basis(kQ, 6, 2).scaled(Scalar::from_int(2, kQ)));
  CHECK(r2.algebra.basis_product(1, x).is_zero());
  CHECK(check_leibniz(r2.algebra).ok);
  CHECK(check_leibniz(r3.algebra).ok);
}

TEST_CASE("catalog algebras satisfy the identity over prime fields too") {
  for (Family fam : {Family::nf, Family::r0, Family::r1, Family::r2, Family::r3}) {
    const std::uint32_t n = fam == Family::nf || fam == Family::r0 ? 3 : 5;
    CatalogEntry e = build_family(fam, n, FieldConfig::prime(7));
    CHECK(check_leibniz(e.algebra).ok);
  }
}

TEST_CASE("basis roles") {
  CatalogEntry e = build_r0(3, kQ);
  CHECK(e.basis_roles.at("e_0") == "e_0");
  CHECK(e.basis_roles.at("e_2") == "e_i");
  CatalogEntry r = build_r3(4, kQ);
  CHECK(r.basis_roles.at("x") == "x");
  CHECK(r.basis_roles.at("y") == "y");
}
