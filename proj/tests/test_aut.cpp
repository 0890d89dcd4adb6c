#include <doctest.h>

#include "leib/aut.hpp"
#include "leib/rng.hpp"

using namespace leib;

namespace {
const FieldConfig kQ = FieldConfig::rationals();

Scalar sc(int v) { return Scalar::from_int(v, kQ); }
Scalar sc(const char* v) { return parse_scalar(v, kQ); }
} // namespace

TEST_CASE("admissibility is enforced by the named constructors") {
  CHECK_THROWS_AS(AutParams::r0(sc(1), sc(0)), Error);          // beta != 0
  CHECK_THROWS_AS(AutParams::r1(sc(0), sc(1), sc(2)), Error);   // alpha*beta != 0
  CHECK_THROWS_AS(AutParams::r1(sc(1), sc(0), sc(2)), Error);
  CHECK_THROWS_AS(AutParams::r2(sc(1), sc(5), sc(0), sc(0)), Error); // alpha*gamma != 0
  CHECK_THROWS_AS(AutParams::r3(sc(0), sc(5), sc(1)), Error);
  CHECK_NOTHROW(AutParams::r2(sc(1), sc(0), sc(1), sc(0))); // beta, delta free
  const AutParams degenerate =
      AutParams::unchecked(Family::r0, sc(1), sc(0), sc(0), sc(0));
  CHECK_FALSE(degenerate.admissible());
  CHECK(family_param_count(Family::r0) == 2);
  CHECK(family_param_count(Family::r2) == 4);
  CHECK(family_param_count(Family::r3) == 3);
}

TEST_CASE("r0 closed form at n=2") {
  // (alpha, beta) = (1, 1): e_0 -> e_0 + e_1 + 1/2 e_2, e_1 -> e_1 + e_2, e_2 -> e_2
  const LinearMap m = aut_matrix(AutParams::r0(sc(1), sc(1)), 2);
  REQUIRE(m.rows() == 3);
  CHECK(m.column(0) == Vec(kQ, {sc(1), sc(1), sc("1/2")}));
  CHECK(m.column(1) == Vec(kQ, {sc(0), sc(1), sc(1)}));
  CHECK(m.column(2) == Vec(kQ, {sc(0), sc(0), sc(1)}));

  // (0, 1) is the identity
  CHECK(aut_matrix(AutParams::r0(sc(0), sc(1)), 2) == Matrix::identity(kQ, 3));

  // (2, 3): e_1 -> 3 e_1 + 6 e_2, e_2 -> 9 e_2
  const LinearMap k = aut_matrix(AutParams::r0(sc(2), sc(3)), 2);
  CHECK(k.column(1) == Vec(kQ, {sc(0), sc(3), sc(6)}));
  CHECK(k.column(2) == Vec(kQ, {sc(0), sc(0), sc(9)}));
  CHECK(det_bareiss(k) == sc(27)); // beta^{n(n+1)/2} = 3^3
}

TEST_CASE("r2 closed form at n=4") {
  // (1,1,1,0): e_1 -> e_1 - e_3 + 1/2 e_4
  const LinearMap m = aut_matrix(AutParams::r2(sc(1), sc(1), sc(1), sc(0)), 4);
  REQUIRE(m.rows() == 6);
  CHECK(m.column(0) == Vec(kQ, {sc(1), sc(0), sc(-1), sc("1/2"), sc(0), sc(0)}));
  CHECK(m.column(1) == Vec(kQ, {sc(0), sc(1), sc(0), sc(0), sc(0), sc(0)}));
  // x -> beta e_1 + sum (-1)^i beta^{i-1}/(i-1)! e_i + x
  CHECK(m.column(4) == Vec(kQ, {sc(1), sc(0), sc("-1/2"), sc("1/6"), sc(1), sc(0)}));
  CHECK(m.column(5) == Vec(kQ, {sc(0), sc(0), sc(0), sc(0), sc(0), sc(1)})); // delta = 0
}

TEST_CASE("closed forms are automorphisms; degenerate maps are singular") {
  Rng rng(31);
  for (Family fam : {Family::r0, Family::r1, Family::r2, Family::r3}) {
    const std::uint32_t n = fam == Family::r0 ? 3 : 5;
    CatalogEntry e = build_family(fam, n, kQ);
    for (int t = 0; t < 10; ++t) {
      AutParams p = fam == Family::r0 ? AutParams::r0(rng.small_rational(), rng.nonzero_rational())
                    : fam == Family::r1
                        ? AutParams::r1(rng.nonzero_rational(), rng.nonzero_rational(),
                                        rng.small_rational())
                    : fam == Family::r2
                        ? AutParams::r2(rng.nonzero_rational(), rng.small_rational(),
                                        rng.nonzero_rational(), rng.small_rational())
                        : AutParams::r3(rng.nonzero_rational(), rng.small_rational(),
                                        rng.nonzero_rational());
      CHECK(is_automorphism(e.algebra, aut_matrix(p, n)).ok());
    }
  }
  // forced beta = 0 kills the chain columns
  const AutParams z = AutParams::unchecked(Family::r0, sc(3), sc(0), sc(0), sc(0));
  CHECK(det_bareiss(aut_matrix(z, 4)).is_zero());
}

TEST_CASE("is_automorphism rejects with a lex-first witness") {
  CatalogEntry e = build_r0(2, kQ);
  // swap e_1 <-> e_2, fix e_0
  Matrix t = Matrix::identity(kQ, 3);
  t.at(1, 1) = sc(0);
  t.at(2, 2) = sc(0);
  t.at(2, 1) = sc(1);
  t.at(1, 2) = sc(1);
  const AutVerdict v = is_automorphism(e.algebra, t);
  REQUIRE(v.kind == AutVerdict::Kind::not_homomorphic);
  // the chain relation [e_1,e_1]=e_2 also breaks, but (0,1) comes first:
  // T[e_0,e_1] = e_2 while [T e_0, T e_1] = [e_0, e_2] = 0
  CHECK(v.i == 0);
  CHECK(v.j == 1);

  Matrix zero(kQ, 3, 3);
  CHECK(is_automorphism(e.algebra, zero).kind == AutVerdict::Kind::not_bijective);
}

TEST_CASE("r0 parameter composition matches the matrix product") {
  // compose(p, q) applies q first; the chain column picks up q's alpha
  // through p's beta, giving (p.alpha + p.beta q.alpha, p.beta q.beta).
  const AutParams p = AutParams::r0(sc(1), sc(2));
  const AutParams q = AutParams::r0(sc(3), sc(5));
  const AutParams pq = compose_params_r0(p, q);
  CHECK(pq.alpha == sc(7));
  CHECK(pq.beta == sc(10));
  for (std::uint32_t n : {2u, 4u, 6u}) {
    CHECK(aut_matrix(pq, n) == compose(aut_matrix(p, n), aut_matrix(q, n)));
  }
  Rng rng(59);
  for (int t = 0; t < 25; ++t) {
    const AutParams a = AutParams::r0(rng.small_rational(), rng.nonzero_rational());
    const AutParams b = AutParams::r0(rng.small_rational(), rng.nonzero_rational());
    CHECK(aut_matrix(compose_params_r0(a, b), 3) ==
          compose(aut_matrix(a, 3), aut_matrix(b, 3)));
  }
}

TEST_CASE("automorphism groups are closed under composition") {
  Rng rng(61);
  CatalogEntry e = build_r2(5, kQ);
  for (int t = 0; t < 20; ++t) {
    const AutParams a = AutParams::r2(rng.nonzero_rational(), rng.small_rational(),
                                      rng.nonzero_rational(), rng.small_rational());
    const AutParams b = AutParams::r2(rng.nonzero_rational(), rng.small_rational(),
                                      rng.nonzero_rational(), rng.small_rational());
    CHECK(is_automorphism(e.algebra, compose(aut_matrix(a, 5), aut_matrix(b, 5))).ok());
  }
}

TEST_CASE("parametrized enumeration over small prime fields") {
  const FieldConfig f3 = FieldConfig::prime(3);
  const auto r0 = enumerate_aut_parametrized(Family::r0, 2, f3);
  CHECK(r0.size() == 6); // p(p-1)
  for (std::size_t i = 1; i < r0.size(); ++i) CHECK(r0[i - 1].key() < r0[i].key());

  std::uint32_t count = 0;
  for_each_admissible_params(Family::r1, f3, [&](const AutParams& p) {
    CHECK(p.admissible());
    ++count;
  });
  CHECK(count == 12); // (p-1)^2 p

  count = 0;
  for_each_admissible_params(Family::r2, f3, [&](const AutParams&) { ++count; });
  CHECK(count == 36); // (p-1)^2 p^2

  count = 0;
  for_each_admissible_params(Family::r3, f3, [&](const AutParams&) { ++count; });
  CHECK(count == 12);
}

TEST_CASE("every emitted r1 map over F_5 is an automorphism") {
  const FieldConfig f5 = FieldConfig::prime(5);
  CatalogEntry e = build_r1(4, f5);
  const auto maps = enumerate_aut_parametrized(Family::r1, 4, f5);
  CHECK(maps.size() == 80); // (p-1)^2 p
  for (const LinearMap& m : maps) CHECK(is_automorphism(e.algebra, m).ok());
}

TEST_CASE("make_automorphism validates") {
  CHECK_THROWS_AS(
      make_automorphism(Family::r0, 1, AutParams::r0(sc(0), sc(1))), Error);
  CHECK_NOTHROW(make_automorphism(Family::r0, 2, AutParams::r0(sc(0), sc(1))));
}
