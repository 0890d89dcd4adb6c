#include <doctest.h>

#include "leib/locality.hpp"

using namespace leib;

namespace {
const FieldConfig kQ = FieldConfig::rationals();

Scalar sc(int v) { return Scalar::from_int(v, kQ); }
Scalar sc(const char* v) { return parse_scalar(v, kQ); }

std::vector<std::string> labels(Family fam, std::uint32_t n) {
  std::vector<std::string> out;
  for (const Probe& p : probe_set(fam, n)) out.push_back(p.label);
  return out;
}
} // namespace

TEST_CASE("probe batteries at n = 5") {
  CHECK(labels(Family::r0, 5) ==
        std::vector<std::string>{"e_0+e_2", "e_0+e_3", "e_0+e_4", "e_1+e_3",
                                 "e_1+e_4", "e_2+e_4", "e_1+e_5"});
  CHECK(labels(Family::r1, 5) ==
        std::vector<std::string>{"e_2+x", "e_3+x", "e_4+x", "e_1+e_2+e_4",
                                 "e_1+e_2+e_5", "e_1+e_3+e_5"});
  CHECK(labels(Family::r2, 5) ==
        std::vector<std::string>{"e_1+e_4", "e_1+e_5", "e_3+e_5", "x+e_4"});
  CHECK(labels(Family::r3, 5) == labels(Family::r2, 5));

  // battery sizes grow linearly with n
  CHECK(probe_set(Family::r0, 8).size() == 16);
  CHECK(probe_set(Family::r1, 8).size() == 12);
  CHECK(probe_set(Family::r2, 8).size() == 10);

  const Probe p = probe_set(Family::r2, 5)[3]; // x + e_4
  const Vec v = p.make_vec(kQ);
  CHECK(v[5].is_one());
  CHECK(v[3].is_one());
  CHECK(v[0].is_zero());

  CHECK_THROWS_AS(probe_set(Family::nf, 5), Error);
  try {
    probe_set(Family::r2, 4);
    FAIL("expected n_too_small_for_probes");
  } catch (const Error& e) {
    CHECK(e.code() == errc::n_too_small_for_probes);
  }
}

TEST_CASE("rational point fits at small index") {
  // e_1 -> 3 e_1 + 6 e_2 pins (alpha, beta) = (2, 3)
  Vec v(kQ, {sc(0), sc(3), sc(6)});
  PointFit fit = fit_at_point(Family::r0, 2, Vec::basis(kQ, 3, 1), v);
  REQUIRE(fit.branches.size() == 1);
  CHECK(fit.branches[0].bound.at("beta") == sc(3));
  CHECK(fit.branches[0].bound.at("alpha") == sc(2));
  CHECK(fit.branches[0].free_params.empty());
  CHECK(fit.contains(AutParams::r0(sc(2), sc(3))));
  CHECK_FALSE(fit.contains(AutParams::r0(sc(1), sc(3))));
  CHECK_FALSE(fit.contains(AutParams::r0(sc(2), sc(-3))));

  // e_0 -> e_0 forces alpha = 0 and leaves beta free
  PointFit id0 = fit_at_point(Family::r0, 2, Vec::basis(kQ, 3, 0), Vec::basis(kQ, 3, 0));
  REQUIRE(id0.branches.size() == 1);
  CHECK(id0.branches[0].bound.at("alpha") == sc(0));
  CHECK(id0.branches[0].free_params == std::vector<std::string>{"beta"});
  CHECK(id0.contains(AutParams::r0(sc(0), sc(7))));
  CHECK_FALSE(id0.contains(AutParams::r0(sc(1), sc(7))));

  // e_1 -> 0 has no admissible solution (beta != 0 makes the image nonzero)
  CHECK(fit_at_point(Family::r0, 2, Vec::basis(kQ, 3, 1), Vec(kQ, 3)).empty());

  // even-power shapes branch on the sign of the root
  Vec target(kQ, {sc(0), sc(0), sc(4), sc(0), sc(0)}); // e_2 -> 4 e_2 at n = 4
  PointFit sq = fit_at_point(Family::r0, 4, Vec::basis(kQ, 5, 2), target);
  REQUIRE(sq.branches.size() == 2);
  CHECK(sq.contains(AutParams::r0(sc(0), sc(2))));
  CHECK(sq.contains(AutParams::r0(sc(0), sc(-2))));
  CHECK_FALSE(sq.contains(AutParams::r0(sc(0), sc(3))));

  // e_2 -> 3 e_2: no rational square root, so no solutions at all
  Vec t3(kQ, {sc(0), sc(0), sc(3), sc(0), sc(0)});
  CHECK(fit_at_point(Family::r0, 4, Vec::basis(kQ, 5, 2), t3).empty());
}

TEST_CASE("fit branch witnesses map the point to the target") {
  for (Family fam : {Family::r1, Family::r2, Family::r3}) {
    const std::uint32_t n = 5, d = family_dim(fam, n);
    const AutParams p = fam == Family::r1 ? AutParams::r1(sc(2), sc(3), sc(-1))
                        : fam == Family::r2
                            ? AutParams::r2(sc(2), sc(-1), sc(3), sc(2))
                            : AutParams::r3(sc(2), sc(-1), sc(3));
    const LinearMap m = aut_matrix(p, n);
    for (std::uint32_t c = 0; c < d; ++c) {
      PointFit fit = fit_at_point(fam, n, Vec::basis(kQ, d, c), m.column(c));
      REQUIRE_FALSE(fit.empty());
      CHECK(fit.contains(p));
      for (const FitBranch& b : fit.branches)
        CHECK(aut_matrix(b.witness, n).apply(Vec::basis(kQ, d, c)) == m.column(c));
    }
    for (const Probe& pr : probe_set(fam, n)) {
      const Vec x = pr.make_vec(kQ);
      PointFit fit = fit_at_point(fam, n, x, m.apply(x));
      REQUIRE_FALSE(fit.empty());
      CHECK(fit.contains(p));
    }
  }
}

TEST_CASE("prime fields fit by straight enumeration") {
  const FieldConfig f5 = FieldConfig::prime(5);
  Vec e1 = Vec::basis(f5, 3, 1);
  PointFit fit = fit_at_point(Family::r0, 2, e1, e1.scaled(Scalar::from_int(2, f5)));
  REQUIRE(fit.finite_mode);
  REQUIRE(fit.members.size() == 1);
  CHECK(fit.members[0].alpha == Scalar::zero(f5));
  CHECK(fit.members[0].beta == Scalar::from_int(2, f5));
  CHECK(fit.contains(fit.members[0]));

  // any vector works in finite mode, not just 0/1 shapes
  Vec x(f5, {Scalar::from_int(3, f5), Scalar::from_int(1, f5), Scalar::from_int(4, f5)});
  const AutParams p = AutParams::r0(Scalar::from_int(1, f5), Scalar::from_int(3, f5));
  PointFit fx = fit_at_point(Family::r0, 2, x, aut_matrix(p, 2).apply(x));
  CHECK(fx.contains(p));
}

TEST_CASE("fit input validation") {
  CHECK_THROWS_AS(fit_at_point(Family::nf, 5, Vec(kQ, 5), Vec(kQ, 5)), Error);
  CHECK_THROWS_AS(fit_at_point(Family::r2, 3, Vec(kQ, 5), Vec(kQ, 5)), Error);
  CHECK_THROWS_AS(fit_at_point(Family::r0, 2, Vec(kQ, 4), Vec(kQ, 3)), Error);
  // non-0/1 rational points are refused, not mis-fitted
  Vec x(kQ, {sc(0), sc(2), sc(0)});
  try {
    fit_at_point(Family::r0, 2, x, x);
    FAIL("expected unsupported_point");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_point);
  }
  // the zero point is reached by every tuple
  CHECK_FALSE(fit_at_point(Family::r0, 2, Vec(kQ, 3), Vec(kQ, 3)).empty());
  CHECK(fit_at_point(Family::r0, 2, Vec(kQ, 3), Vec::basis(kQ, 3, 1)).empty());
}

TEST_CASE("midproof matrices splice per-column parameter slices") {
  const std::uint32_t n = 5, d = family_dim(Family::r0, n);
  const AutParams p = AutParams::r0(sc(2), sc(3));
  std::vector<AutParams> cols(d, p);
  CHECK(midproof_matrix(Family::r0, n, cols) == aut_matrix(p, n));

  cols[2] = AutParams::r0(sc(2), sc(5));
  const LinearMap m = midproof_matrix(Family::r0, n, cols);
  CHECK(m.column(1) == aut_matrix(p, n).column(1));
  CHECK(m.column(2) == aut_matrix(cols[2], n).column(2));

  CHECK_THROWS_AS(midproof_matrix(Family::nf, n, cols), Error);
  CHECK_THROWS_AS(midproof_matrix(Family::r0, n, std::vector<AutParams>(d - 1, p)), Error);
  std::vector<AutParams> bad(d, p);
  bad[0] = AutParams::unchecked(Family::r0, sc(1), sc(0), sc(0), sc(0));
  CHECK_THROWS_AS(midproof_matrix(Family::r0, n, bad), Error);
  std::vector<AutParams> wrong(d, AutParams::r1(sc(1), sc(1), sc(0)));
  CHECK_THROWS_AS(midproof_matrix(Family::r0, n, wrong), Error);
}

TEST_CASE("probe verification accepts the closed forms") {
  const AutParams p = AutParams::r0(sc(2), sc(3));
  const ProbeVerdict v = verify_local_via_probes(Family::r0, 5, aut_matrix(p, 5));
  REQUIRE(v.ok());
  CHECK(v.params == p);

  const AutParams q = AutParams::r2(sc(2), sc(-1), sc(3), sc(1));
  const ProbeVerdict w = verify_local_via_probes(Family::r2, 5, aut_matrix(q, 5));
  REQUIRE(w.ok());
  CHECK(w.params == q);
}

TEST_CASE("a zeroed column is caught in the column phase") {
  LinearMap t = aut_matrix(AutParams::r0(sc(2), sc(3)), 5);
  t.set_column(1, Vec(kQ, 6));
  const ProbeVerdict v = verify_local_via_probes(Family::r0, 5, t);
  REQUIRE(v.kind == ProbeVerdict::Kind::column_orbit_failure);
  CHECK(v.column == 1);
}

TEST_CASE("a beta mismatch between r0 columns is caught by a probe") {
  // Diagonal column-wise map: every column individually sits on an
  // automorphism slice (alpha = 0, beta a root of the diagonal entry), but
  // the slices disagree at column e_2.
  const std::uint32_t n = 5, d = 6;
  std::vector<AutParams> cols(d, AutParams::r0(sc(0), sc(1)));
  cols[2] = AutParams::r0(sc(0), sc(2));
  const LinearMap t = midproof_matrix(Family::r0, n, cols);

  const ProbeVerdict v = verify_local_via_probes(Family::r0, n, t);
  REQUIRE(v.kind == ProbeVerdict::Kind::probe_failure);
  // e_0+e_2, e_0+e_3, e_0+e_4, e_1+e_3, e_1+e_4 all still fit (the first
  // follows beta = +-2); e_2+e_4 is the first probe that sees both slices.
  CHECK(v.probe_index == 5);
  CHECK(v.probe_label == "e_2+e_4");
}

TEST_CASE("an r1 gamma mismatch is caught by the first probe") {
  const std::uint32_t n = 5, d = 7;
  std::vector<AutParams> cols(d, AutParams::r1(sc(1), sc(1), sc(1)));
  cols[1] = AutParams::r1(sc(1), sc(1), sc(2)); // column e_2 runs its own gamma
  const LinearMap t = midproof_matrix(Family::r1, n, cols);

  const ProbeVerdict v = verify_local_via_probes(Family::r1, n, t);
  REQUIRE(v.kind == ProbeVerdict::Kind::probe_failure);
  CHECK(v.probe_index == 0);
  CHECK(v.probe_label == "e_2+x");
}

TEST_CASE("an r2 beta mismatch hidden from every probe fails at collapse") {
  // Column e_3 runs beta = 2 while the rest run beta = 1.  The only probe
  // that touches e_3 is e_3+e_5, and column e_5 carries no beta, so the fit
  // simply follows the perturbed slice: every pointwise test passes.  The
  // collapsed tuple (read off e_1 and e_2) then disagrees with column e_3.
  const std::uint32_t n = 5, d = 7;
  std::vector<AutParams> cols(d, AutParams::r2(sc(1), sc(1), sc(1), sc(0)));
  cols[2] = AutParams::r2(sc(1), sc(2), sc(1), sc(0));
  const LinearMap t = midproof_matrix(Family::r2, n, cols);

  const ProbeVerdict v = verify_local_via_probes(Family::r2, n, t);
  REQUIRE(v.kind == ProbeVerdict::Kind::collapse_failure);
  CHECK(v.params == AutParams::r2(sc(1), sc(1), sc(1), sc(0)));
  CHECK(v.mismatch_row == 3);
  CHECK(v.mismatch_col == 2);
}

TEST_CASE("probe verification over a prime field") {
  const FieldConfig f7 = FieldConfig::prime(7);
  const AutParams p = AutParams::r1(Scalar::from_int(2, f7), Scalar::from_int(1, f7),
                                    Scalar::from_int(5, f7));
  const ProbeVerdict v = verify_local_via_probes(Family::r1, 5, aut_matrix(p, 5));
  REQUIRE(v.ok());
  CHECK(v.params == p);
}
