#include <doctest.h>

#include "leib/twolocal.hpp"

using namespace leib;

namespace {
Scalar rs(std::uint64_t r, const FieldConfig& f) { return Scalar::from_residue(r, f); }

FunctionTable aut_table(Family fam, std::uint32_t n, const AutParams& p) {
  return FunctionTable::from_fp_map(FpMat::from_linear_map(aut_matrix(p, n)));
}
} // namespace

TEST_CASE("patchwork with no overrides tabulates the closed form") {
  const FieldConfig f5 = FieldConfig::prime(5);
  PatchworkSpec spec;
  spec.family = Family::r0;
  spec.n = 2;
  spec.p = 5;
  spec.def = AutParams::r0(rs(1, f5), rs(2, f5));
  const FunctionTable t = make_patchwork(spec);
  CHECK(t.img == aut_table(Family::r0, 2, spec.def).img);
  CHECK(t.npoints() == 125);
  // e_1 -> beta e_1 + alpha beta e_2 = 2 e_1 + 2 e_2
  CHECK(t.at({0, 1, 0}) == std::vector<std::uint32_t>{0, 2, 2});
}

TEST_CASE("patchwork overrides reroute exactly the listed points") {
  const FieldConfig f5 = FieldConfig::prime(5);
  PatchworkSpec spec;
  spec.family = Family::r0;
  spec.n = 2;
  spec.p = 5;
  spec.def = AutParams::r0(rs(0, f5), rs(1, f5)); // the identity
  spec.overrides.push_back({{0, 0, 1}, AutParams::r0(rs(0, f5), rs(2, f5))});
  const FunctionTable t = make_patchwork(spec);
  CHECK(t.at({0, 0, 1}) == std::vector<std::uint32_t>{0, 0, 4}); // beta^2 e_2
  CHECK(t.at({0, 0, 2}) == std::vector<std::uint32_t>{0, 0, 2}); // untouched
  CHECK(t.at({0, 1, 0}) == std::vector<std::uint32_t>{0, 1, 0});
}

TEST_CASE("patchwork input validation") {
  const FieldConfig f5 = FieldConfig::prime(5);
  PatchworkSpec spec;
  spec.family = Family::r0;
  spec.n = 2;
  spec.p = 5;
  spec.def = AutParams::r0(rs(1, f5), rs(1, f5));

  PatchworkSpec small = spec;
  small.p = 2; // p <= n
  CHECK_THROWS_AS(make_patchwork(small), Error);

  PatchworkSpec short_pt = spec;
  short_pt.overrides.push_back({{0, 1}, spec.def});
  CHECK_THROWS_AS(make_patchwork(short_pt), Error);

  PatchworkSpec big_coord = spec;
  big_coord.overrides.push_back({{0, 0, 7}, spec.def});
  CHECK_THROWS_AS(make_patchwork(big_coord), Error);

  PatchworkSpec wrong_family = spec;
  wrong_family.overrides.push_back(
      {{0, 0, 1}, AutParams::r1(rs(1, f5), rs(1, f5), rs(0, f5))});
  CHECK_THROWS_AS(make_patchwork(wrong_family), Error);

  PatchworkSpec wrong_field = spec;
  wrong_field.def = AutParams::r0(rs(1, FieldConfig::prime(7)), rs(1, FieldConfig::prime(7)));
  CHECK_THROWS_AS(make_patchwork(wrong_field), Error);
}

TEST_CASE("every r0(2) automorphism table over F_5 is 2-local") {
  const FieldConfig f5 = FieldConfig::prime(5);
  CatalogEntry e = build_r0(2, f5);
  const auto auts = enumerate_aut_bruteforce(e.algebra);
  REQUIRE(auts.size() == 20);
  for (const FpMat& m : auts) {
    const TwoLocalVerdict v = is_2local(FunctionTable::from_fp_map(m), auts);
    CHECK(v.ok);
  }
}

TEST_CASE("a single rerouted point defeats the pair condition") {
  // Identity table except e_2 -> 4 e_2.  Every single point is still matched
  // (beta^2 = 4 handles e_2), but no tuple matches e_2 and 2 e_2 together.
  const FieldConfig f5 = FieldConfig::prime(5);
  PatchworkSpec spec;
  spec.family = Family::r0;
  spec.n = 2;
  spec.p = 5;
  spec.def = AutParams::r0(rs(0, f5), rs(1, f5));
  spec.overrides.push_back({{0, 0, 1}, AutParams::r0(rs(0, f5), rs(2, f5))});
  const FunctionTable t = make_patchwork(spec);

  CatalogEntry e = build_r0(2, f5);
  const auto auts = enumerate_aut_bruteforce(e.algebra);

  // every point individually sits in some orbit
  std::vector<std::uint32_t> img(3);
  for (std::uint64_t x = 0; x < t.npoints(); ++x) {
    const auto pt = fp_decode(5, 3, x);
    bool hit = false;
    for (const FpMat& m : auts) {
      m.apply(pt.data(), img.data());
      if (fp_encode(5, img) == t.img[x]) { hit = true; break; }
    }
    CHECK(hit);
  }

  const TwoLocalVerdict v = is_2local(t, auts);
  REQUIRE_FALSE(v.ok);
  CHECK(v.x == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(v.y == std::vector<std::uint32_t>{0, 0, 2});

  // (e_1, e_2) is a failing pair too -- just not the first one
  bool both = false;
  for (const FpMat& m : auts) {
    std::vector<std::uint32_t> a(3), b(3);
    m.apply(std::vector<std::uint32_t>{0, 1, 0}.data(), a.data());
    m.apply(std::vector<std::uint32_t>{0, 0, 1}.data(), b.data());
    if (a == t.at({0, 1, 0}) && b == t.at({0, 0, 1})) both = true;
  }
  CHECK_FALSE(both);

  // the collapse pins (alpha, beta) at e_1 and convicts the rerouted point
  const CollapseOutcome c = twolocal_collapse(Family::r0, 2, t);
  REQUIRE(c.kind == CollapseOutcome::Kind::anchor_failure);
  CHECK(c.x == std::vector<std::uint32_t>{0, 0, 1}); // offending point first
  CHECK(c.y == std::vector<std::uint32_t>{0, 1, 0}); // anchor e_1 second
}

TEST_CASE("worker count does not change the 2-local verdict") {
  const FieldConfig f5 = FieldConfig::prime(5);
  PatchworkSpec spec;
  spec.family = Family::r0;
  spec.n = 2;
  spec.p = 5;
  spec.def = AutParams::r0(rs(0, f5), rs(1, f5));
  spec.overrides.push_back({{0, 0, 1}, AutParams::r0(rs(0, f5), rs(2, f5))});
  const FunctionTable t = make_patchwork(spec);
  CatalogEntry e = build_r0(2, f5);
  const auto auts = enumerate_aut_bruteforce(e.algebra);
  const TwoLocalVerdict v1 = is_2local(t, auts, 1);
  const TwoLocalVerdict v4 = is_2local(t, auts, 4);
  CHECK(v1.ok == v4.ok);
  CHECK(v1.x == v4.x);
  CHECK(v1.y == v4.y);
}

TEST_CASE("collapse recovers the tuple from an automorphism table") {
  const FieldConfig f5 = FieldConfig::prime(5);
  const AutParams p = AutParams::r0(rs(1, f5), rs(2, f5));
  const CollapseOutcome c = twolocal_collapse(Family::r0, 2, aut_table(Family::r0, 2, p));
  REQUIRE(c.ok());
  CHECK(c.params == p);

  // all twenty tables, for good measure
  for_each_admissible_params(Family::r0, f5, [&](const AutParams& q) {
    const CollapseOutcome o = twolocal_collapse(Family::r0, 2, aut_table(Family::r0, 2, q));
    REQUIRE(o.ok());
    CHECK(o.params == q);
  });
}

TEST_CASE("collapse handles the r-frames at n = 5 over F_7") {
  const FieldConfig f7 = FieldConfig::prime(7);
  const AutParams p1 = AutParams::r1(rs(2, f7), rs(1, f7), rs(5, f7));
  const CollapseOutcome c1 = twolocal_collapse(Family::r1, 5, aut_table(Family::r1, 5, p1));
  REQUIRE(c1.ok());
  CHECK(c1.params == p1);

  const AutParams p2 = AutParams::r2(rs(1, f7), rs(0, f7), rs(1, f7), rs(0, f7));
  const CollapseOutcome c2 = twolocal_collapse(Family::r2, 5, aut_table(Family::r2, 5, p2));
  REQUIRE(c2.ok());
  CHECK(c2.params == p2);

  const AutParams p3 = AutParams::r3(rs(3, f7), rs(2, f7), rs(1, f7));
  const CollapseOutcome c3 = twolocal_collapse(Family::r3, 5, aut_table(Family::r3, 5, p3));
  REQUIRE(c3.ok());
  CHECK(c3.params == p3);
}

TEST_CASE("a delta patchwork on r2 is convicted through the y anchor") {
  // Reroute the point y through delta = 3 while the rest of the table runs
  // delta = 0.  The second anchor reads delta off y, so the collapsed tuple
  // disagrees at 2y, and (2y, y) is a genuinely failing pair.
  const FieldConfig f7 = FieldConfig::prime(7);
  PatchworkSpec spec;
  spec.family = Family::r2;
  spec.n = 5;
  spec.p = 7;
  spec.def = AutParams::r2(rs(1, f7), rs(0, f7), rs(1, f7), rs(0, f7));
  std::vector<std::uint32_t> y(7, 0);
  y[6] = 1;
  spec.overrides.push_back({y, AutParams::r2(rs(1, f7), rs(0, f7), rs(1, f7), rs(3, f7))});
  const CollapseOutcome c = twolocal_collapse(Family::r2, 5, make_patchwork(spec));
  REQUIRE(c.kind == CollapseOutcome::Kind::anchor_failure);
  std::vector<std::uint32_t> two_y(7, 0);
  two_y[6] = 2;
  CHECK(c.x == two_y);
  CHECK(c.y == y);
}

TEST_CASE("the zero table fails at the anchor itself") {
  FunctionTable t;
  t.p = 5;
  t.d = 3;
  t.img.assign(125, 0);
  const CollapseOutcome c = twolocal_collapse(Family::r0, 2, t);
  REQUIRE(c.kind == CollapseOutcome::Kind::anchor_failure);
  // automorphisms are injective, so nothing sends e_1 to 0
  CHECK(c.x == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(c.y == c.x);
}

TEST_CASE("table and collapse validation") {
  FunctionTable t;
  t.p = 5;
  t.d = 3;
  t.img.assign(100, 0); // wrong point count
  CatalogEntry e = build_r0(2, FieldConfig::prime(5));
  const auto auts = enumerate_aut_bruteforce(e.algebra);
  CHECK_THROWS_AS(is_2local(t, auts), Error);
  CHECK_THROWS_AS(twolocal_collapse(Family::r0, 2, t), Error);

  t.img.assign(125, 0);
  t.img[3] = 125; // image index out of range
  CHECK_THROWS_AS(is_2local(t, auts), Error);

  t.img[3] = 0;
  CHECK_THROWS_AS(twolocal_collapse(Family::nf, 2, t), Error);
  CHECK_THROWS_AS(twolocal_collapse(Family::r0, 7, t), Error); // p <= n
}
