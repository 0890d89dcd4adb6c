#include "leib/locality.hpp"

namespace leib {

LinearMap midproof_matrix(Family fam, std::uint32_t n, const std::vector<AutParams>& cols) {
  if (fam == Family::nf)
    fail(errc::invalid_params, "the nilpotent chain has no parametrized automorphisms");
  const std::uint32_t d = family_dim(fam, n);
  if (cols.size() != d)
    fail(errc::dimension_mismatch, "need one parameter tuple per basis column");
  for (const AutParams& p : cols) {
    if (p.family != fam) fail(errc::invalid_params, "column tuple from the wrong family");
    if (!p.admissible()) fail(errc::invalid_params, "inadmissible column tuple");
  }
  const FieldConfig& f = cols[0].field();
  Matrix m(f, d);
  for (std::uint32_t c = 0; c < d; ++c) {
    if (cols[c].field() != f) fail(errc::field_mismatch, "column tuples must share one field");
    m.set_column(c, aut_matrix(cols[c], n).column(c));
  }
  return m;
}

std::string ProbeVerdict::to_string() const {
  switch (kind) {
    case Kind::automorphism: return "automorphism " + params.to_string();
    case Kind::column_orbit_failure:
      return "column " + std::to_string(column) + " leaves its basis-vector orbit";
    case Kind::probe_failure:
      return "probe " + std::to_string(probe_index) + " (" + probe_label +
             ") leaves its orbit";
    case Kind::collapse_failure:
      return "pointwise fits exist but collapse to " + params.to_string() +
             " mismatches at entry (" + std::to_string(mismatch_row) + ", " +
             std::to_string(mismatch_col) + ")";
  }
  return "?";
}

namespace {

// Read the collapsed parameter tuple straight off distinguished entries; the
// nonzero guards are implied by the basis-column fits that already passed.
AutParams collapse_params(Family fam, std::uint32_t n, const LinearMap& t) {
  switch (fam) {
    case Family::r0: return AutParams::r0(t.at(1, 0), t.at(1, 1));
    case Family::r1: return AutParams::r1(t.at(0, 0), t.at(1, 1), t.at(0, n));
    case Family::r2: {
      const Scalar a = t.at(0, 0);
      return AutParams::r2(a, -t.at(2, 0) / a, t.at(1, 1), t.at(1, n + 1));
    }
    case Family::r3: {
      const Scalar a = t.at(0, 0);
      return AutParams::r3(a, -t.at(2, 0) / a, t.at(1, 1));
    }
    default: fail(errc::invalid_params, "family has no parametrized automorphisms");
  }
}

} // namespace

ProbeVerdict verify_local_via_probes(Family fam, std::uint32_t n, const LinearMap& t) {
  const std::uint32_t d = family_dim(fam, n);
  if (t.dim() != d || t.cols() != d)
    fail(errc::dimension_mismatch, "map dimension does not match the family");
  const FieldConfig& f = t.field();
  const std::vector<Probe> probes = probe_set(fam, n); // enforces n >= 5

  ProbeVerdict out;
  for (std::uint32_t c = 0; c < d; ++c) {
    if (!fit_at_point(fam, n, Vec::basis(f, d, c), t.column(c)).empty()) continue;
    out.kind = ProbeVerdict::Kind::column_orbit_failure;
    out.column = c;
    return out;
  }
  for (std::uint32_t k = 0; k < probes.size(); ++k) {
    const Vec x = probes[k].make_vec(f);
    if (!fit_at_point(fam, n, x, t.apply(x)).empty()) continue;
    out.kind = ProbeVerdict::Kind::probe_failure;
    out.probe_index = k;
    out.probe_label = probes[k].label;
    return out;
  }
  out.params = collapse_params(fam, n, t);
  const LinearMap expected = aut_matrix(out.params, n);
  if (expected != t) {
    out.kind = ProbeVerdict::Kind::collapse_failure;
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j)
        if (expected.at(i, j) != t.at(i, j)) {
          out.mismatch_row = i;
          out.mismatch_col = j;
          return out;
        }
    fail(errc::internal, "matrix inequality without a differing entry");
  }
  const CatalogEntry cat = build_family(fam, n, f);
  if (!is_automorphism(cat.algebra, t).ok())
    fail(errc::internal, "closed-form matrix failed the automorphism check");
  out.kind = ProbeVerdict::Kind::automorphism;
  return out;
}

} // namespace leib
