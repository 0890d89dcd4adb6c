#pragma once

#include "leib/fp_kernel.hpp"
#include "leib/locality.hpp"

namespace leib {

/// A total (not necessarily linear) self-map of the point set of F_p^d,
/// tabulated over the big-endian point encoding.
struct FunctionTable {
  std::uint32_t p = 0, d = 0;
  std::vector<std::uint64_t> img; // img[x] = image index; size p^d

  static FunctionTable from_fp_map(const FpMat& t);

  std::uint64_t npoints() const { return img.size(); }
  std::vector<std::uint32_t> at(const std::vector<std::uint32_t>& x) const;
};

/// Pointwise patchwork of closed-form automorphisms: the default tuple
/// everywhere, selected points rerouted through their own tuples.
struct PatchworkSpec {
  Family family = Family::r0;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  AutParams def;
  std::vector<std::pair<std::vector<std::uint32_t>, AutParams>> overrides;
};

FunctionTable make_patchwork(const PatchworkSpec& spec);

struct TwoLocalVerdict {
  bool ok = true;
  std::vector<std::uint32_t> x, y; // first failing pair when !ok
};

/// Pair condition against an explicit automorphism list: every ordered pair
/// of points must be matched simultaneously by some listed map.  The witness
/// is the first failing pair, points ordered by point index (outer x, inner
/// y, both ascending).
TwoLocalVerdict is_2local(const FunctionTable& f, const std::vector<FpMat>& auts,
                          std::uint32_t workers = 1);

struct CollapseOutcome {
  enum class Kind {
    automorphism,   // the table is the closed form at `params`, everywhere
    anchor_failure, // `x`,`y` is a verified pair no family tuple matches
    inconclusive,   // table differs from the anchored tuple but no failing
                    // pair surfaced within the bounded search
  } kind = Kind::automorphism;
  AutParams params;
  std::vector<std::uint32_t> x, y;
  std::string detail;

  bool ok() const { return kind == Kind::automorphism; }
};

/// Collapse a table to one parameter tuple, measured against the family's
/// parametrized automorphisms over F_p.  A few anchor points pin every
/// parameter; the pinned tuple is then compared against the whole table.  On
/// mismatch the returned pair is re-verified by enumerating all tuples, so an
/// anchor_failure witness always refutes the pair condition.
CollapseOutcome twolocal_collapse(Family fam, std::uint32_t n, const FunctionTable& f,
                                  std::uint64_t seed = 0x2b0ca1);

} // namespace leib
