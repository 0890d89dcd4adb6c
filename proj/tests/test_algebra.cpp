#include <doctest.h>

#include "leib/algebra.hpp"
#include "leib/rng.hpp"
#include "leib/series.hpp"

using namespace leib;

namespace {

const FieldConfig kQ = FieldConfig::rationals();

Scalar sc(int v) { return Scalar::from_int(v, kQ); }

/// [e_1,e_1] = e_2 + e_3, [e_2,e_1] = e_3: nilpotent, non-Lie, and not equal
/// to its associated graded algebra.
Algebra graded_example() {
  return Algebra(kQ, {"e_1", "e_2", "e_3"},
                 {{0, 0, 1, sc(1)}, {0, 0, 2, sc(1)}, {1, 0, 2, sc(1)}});
}

} // namespace

TEST_CASE("abelian algebras satisfy the identity trivially") {
  Algebra a = Algebra::abelian(kQ, 2);
  CHECK(check_leibniz(a).ok);
  CHECK(a.leibniz_checked());
  const SeriesReport d = derived_series(a);
  CHECK(d.dims == std::vector<std::uint32_t>{2, 0});
  CHECK(is_nilpotent(a).holds);
  CHECK(is_solvable(a).index == 2);
}

TEST_CASE("a non-Leibniz table is refuted with the first violating triple") {
  // [e_1,e_1] = e_1 breaks the identity at the very first triple:
  // [[e_1,e_1],e_1] = e_1 but the right side evaluates to 2 e_1.
  Algebra a(kQ, {"e_1"}, {{0, 0, 0, sc(1)}});
  const LeibnizReport r = check_leibniz(a);
  REQUIRE_FALSE(r.ok);
  const LeibnizViolation& v = *r.violation;
  CHECK(v.i == 0);
  CHECK(v.j == 0);
  CHECK(v.k == 0);
  CHECK(v.lhs[0] == sc(1));
  CHECK(v.rhs[0] == sc(2));
}

TEST_CASE("bracket is bilinear") {
  Algebra a = graded_example();
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Vec x(kQ, 3), y(kQ, 3), z(kQ, 3);
    for (std::uint32_t i = 0; i < 3; ++i) {
      x[i] = rng.small_rational();
      y[i] = rng.small_rational();
      z[i] = rng.small_rational();
    }
    const Scalar c = rng.small_rational();
    CHECK(a.bracket(x + y.scaled(c), z) == a.bracket(x, z) + a.bracket(y, z).scaled(c));
    CHECK(a.bracket(z, x + y.scaled(c)) == a.bracket(z, x) + a.bracket(z, y).scaled(c));
  }
}

TEST_CASE("table round-trip is sorted and sparse") {
  Algebra a = graded_example();
  const auto t = a.table();
  REQUIRE(t.size() == 3);
  CHECK(t[0].i == 0);
  CHECK(t[0].j == 0);
  CHECK(t[0].k == 1);
  CHECK(t[2].i == 1);
  CHECK(a.basis_product(0, 0)[1] == sc(1));
  CHECK(a.basis_product(0, 0)[2] == sc(1));
  CHECK(a.basis_product(1, 1).is_zero());
}

TEST_CASE("antisymmetry violations are witnessed lex-first") {
  Algebra a = graded_example();
  const auto w = antisymmetry_violation(a);
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<std::uint32_t, std::uint32_t>{0, 0}); // [e_1,e_1] != 0

  // a genuinely antisymmetric table has no witness
  Algebra lie(kQ, {"x", "y", "z"}, {{0, 1, 2, sc(1)}, {1, 0, 2, sc(-1)}});
  CHECK_FALSE(antisymmetry_violation(lie).has_value());
}

TEST_CASE("series of the three-dimensional nilpotent example") {
  Algebra a = graded_example();
  REQUIRE(check_leibniz(a).ok);
  const SeriesReport lc = lower_central_series(a);
  CHECK(lc.dims == std::vector<std::uint32_t>{3, 2, 1, 0});
  CHECK(lc.terminates_at_zero);
  CHECK(is_nilpotent(a).holds);
  CHECK(is_nilpotent(a).index == 4);
  CHECK(is_null_filiform(a)); // dims 3,2,1,0 is exactly the null-filiform profile
}

TEST_CASE("associated graded algebra straightens the filtration") {
  Algebra a = graded_example();
  const GradedAlgebra g = associated_graded(a);
  CHECK(g.layer_dims == std::vector<std::uint32_t>{1, 1, 1});
  // gr: [g_1,g_1] = g_2 (the e_3 component dies in the quotient), [g_2,g_1] = g_3
  CHECK(g.algebra.basis_product(0, 0) == Vec::basis(kQ, 3, 1));
  CHECK(g.algebra.basis_product(1, 0) == Vec::basis(kQ, 3, 2));
  CHECK(g.algebra.basis_product(0, 1).is_zero());
  CHECK(check_leibniz(g.algebra).ok);
  // the original algebra is not its own graded: [e_1,e_1] has an e_3 tail
  CHECK(a.basis_product(0, 0) != g.algebra.basis_product(0, 0));
}

TEST_CASE("associated graded requires nilpotency") {
  // [e_1,e_0] = e_1 is solvable but not nilpotent
  Algebra a(kQ, {"e_0", "e_1"}, {{1, 0, 1, sc(1)}});
  REQUIRE(check_leibniz(a).ok);
  CHECK_FALSE(is_nilpotent(a).holds);
  CHECK_THROWS_AS(associated_graded(a), Error);
}
