#pragma once

#include <map>

#include "leib/aut.hpp"

namespace leib {

/// One probe vector: a 0/1 combination of catalog basis vectors.  `support`
/// keeps the summands in the battery's listed order; the label matches it.
struct Probe {
  std::vector<std::uint32_t> support;
  std::string label;
  std::uint32_t dim = 0;

  Vec make_vec(const FieldConfig& f) const;
};

/// The family's probe battery for index n, in its fixed order.  Needs n >= 5;
/// smaller indices have no battery.
std::vector<Probe> probe_set(Family fam, std::uint32_t n);

/// A power-product constraint on parameters: prod name^exp == value.
struct Monomial {
  std::map<std::string, std::uint32_t> exps;
  Scalar value;

  bool satisfied_by(const AutParams& p) const;
  std::string to_string() const;
};

/// One solution component of a point fit.  Parameters absent from both
/// `bound` and every monomial are free (subject to family admissibility).
/// `witness` is a concrete admissible solution; construction verifies it maps
/// the fitted point to the target exactly.
struct FitBranch {
  std::map<std::string, Scalar> bound;
  std::vector<Monomial> monomials;
  std::vector<std::string> free_params;
  AutParams witness;

  bool contains(const AutParams& p) const;
  std::string to_string() const;
};

/// The admissible parameter tuples sending a point x to a target v.
/// Prime fields enumerate the (finitely many) tuples outright, so any x is
/// accepted; over the rationals the closed forms cover basis vectors and the
/// probe shapes, and anything else is refused as unsupported.
struct PointFit {
  Family family = Family::r0;
  bool finite_mode = false;
  std::vector<AutParams> members;  // finite mode
  std::vector<FitBranch> branches; // rational mode

  bool empty() const { return members.empty() && branches.empty(); }
  bool contains(const AutParams& p) const;
  std::string to_string() const;
};

PointFit fit_at_point(Family fam, std::uint32_t n, const Vec& x, const Vec& v);

/// Matrix whose c-th column is the c-th column of the closed-form
/// automorphism at cols[c]: every column sits on its own parameter slice, but
/// the slices need not agree.  cols.size() must equal the family dimension
/// and every entry must be admissible for the family.
LinearMap midproof_matrix(Family fam, std::uint32_t n, const std::vector<AutParams>& cols);

struct ProbeVerdict {
  enum class Kind {
    automorphism,          // T equals the closed form at `params`
    column_orbit_failure,  // some basis image leaves its orbit; see `column`
    probe_failure,         // some probe image leaves its orbit; see probe fields
    collapse_failure,      // pointwise fits exist but no single tuple works
  } kind = Kind::automorphism;
  std::uint32_t column = 0;
  std::uint32_t probe_index = 0;
  std::string probe_label;
  std::uint32_t mismatch_row = 0, mismatch_col = 0; // collapse_failure
  AutParams params; // automorphism / collapse_failure (the collapsed tuple)

  bool ok() const { return kind == Kind::automorphism; }
  std::string to_string() const;
};

/// Coefficient-collapse check that a linear map is an automorphism:
/// (a) fit every basis column, (b) fit every probe image, (c) collapse the
/// per-point fits to one parameter tuple and compare matrices entrywise.
ProbeVerdict verify_local_via_probes(Family fam, std::uint32_t n, const LinearMap& t);

} // namespace leib
