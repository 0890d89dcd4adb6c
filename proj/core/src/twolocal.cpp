#include "leib/twolocal.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "leib/parallel.hpp"
#include "leib/rng.hpp"

namespace leib {

namespace {

constexpr std::uint64_t kTableCap = std::uint64_t{1} << 24; // point-count guard
constexpr std::uint64_t kTupleCap = 2'000'000;              // enumeration guard

void check_table(const FunctionTable& f) {
  const std::uint64_t npts = fp_pow(f.p, f.d);
  if (npts > kTableCap) fail(errc::budget_exceeded, "function table too large");
  if (f.img.size() != npts)
    fail(errc::dimension_mismatch, "table must list every point of F_p^d");
  for (std::uint64_t v : f.img)
    if (v >= npts) fail(errc::parse_error, "table image index out of range");
}

} // namespace

FunctionTable FunctionTable::from_fp_map(const FpMat& t) {
  FunctionTable f;
  f.p = t.p;
  f.d = t.d;
  const std::uint64_t npts = fp_pow(t.p, t.d);
  if (npts > kTableCap) fail(errc::budget_exceeded, "function table too large");
  f.img.resize(npts);
  std::vector<std::uint32_t> out(t.d);
  for (std::uint64_t x = 0; x < npts; ++x) {
    const auto pt = fp_decode(t.p, t.d, x);
    t.apply(pt.data(), out.data());
    f.img[x] = fp_encode(t.p, out);
  }
  return f;
}

std::vector<std::uint32_t> FunctionTable::at(const std::vector<std::uint32_t>& x) const {
  return fp_decode(p, d, img[fp_encode(p, x)]);
}

FunctionTable make_patchwork(const PatchworkSpec& spec) {
  const FieldConfig fc = FieldConfig::prime(spec.p);
  if (spec.p <= spec.n) fail(errc::field_too_small, "need p > n for the closed forms");
  const std::uint32_t d = family_dim(spec.family, spec.n);
  auto tuple_mat = [&](const AutParams& ps) {
    if (ps.family != spec.family) fail(errc::invalid_params, "patchwork tuple family mismatch");
    if (ps.field() != fc) fail(errc::field_mismatch, "patchwork tuple over the wrong field");
    if (!ps.admissible()) fail(errc::invalid_params, "inadmissible patchwork tuple");
    return FpMat::from_linear_map(aut_matrix(ps, spec.n));
  };
  const FpMat def = tuple_mat(spec.def);
  std::unordered_map<std::uint64_t, FpMat> special;
  for (const auto& [pt, ps] : spec.overrides) {
    if (pt.size() != d) fail(errc::dimension_mismatch, "override point has wrong length");
    for (std::uint32_t c : pt)
      if (c >= spec.p) fail(errc::parse_error, "override coordinate out of range");
    special.insert_or_assign(fp_encode(spec.p, pt), tuple_mat(ps));
  }
  FunctionTable f;
  f.p = spec.p;
  f.d = d;
  const std::uint64_t npts = fp_pow(spec.p, d);
  if (npts > kTableCap) fail(errc::budget_exceeded, "function table too large");
  f.img.resize(npts);
  std::vector<std::uint32_t> out(d);
  for (std::uint64_t x = 0; x < npts; ++x) {
    const auto pt = fp_decode(spec.p, d, x);
    const auto it = special.find(x);
    (it == special.end() ? def : it->second).apply(pt.data(), out.data());
    f.img[x] = fp_encode(spec.p, out);
  }
  return f;
}

TwoLocalVerdict is_2local(const FunctionTable& f, const std::vector<FpMat>& auts,
                          std::uint32_t workers) {
  check_table(f);
  for (const FpMat& m : auts)
    if (m.p != f.p || m.d != f.d) fail(errc::dimension_mismatch, "map/table shape mismatch");
  const std::uint64_t npts = f.img.size();
  const std::size_t nw = (auts.size() + 63) / 64;
  if (npts * std::max<std::size_t>(nw, 1) > (std::uint64_t{1} << 25))
    fail(errc::budget_exceeded, "agreement masks too large; use the collapse instead");

  // S_x as a bitmask over the list: which maps agree with the table at x.
  std::vector<std::uint64_t> masks(npts * std::max<std::size_t>(nw, 1), 0);
  const std::uint32_t w = resolve_workers(workers);
  parallel_slices(npts, w, [&](std::uint32_t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> img(f.d);
    for (std::uint64_t x = lo; x < hi; ++x) {
      const auto pt = fp_decode(f.p, f.d, x);
      for (std::size_t a = 0; a < auts.size(); ++a) {
        auts[a].apply(pt.data(), img.data());
        if (fp_encode(f.p, img) == f.img[x])
          masks[x * nw + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  });

  // Points with identical masks are interchangeable; keep first occurrences.
  std::map<std::vector<std::uint64_t>, std::uint64_t> first;
  for (std::uint64_t x = 0; x < npts; ++x) {
    std::vector<std::uint64_t> key(masks.begin() + x * nw, masks.begin() + (x + 1) * nw);
    first.emplace(std::move(key), x);
  }
  std::vector<std::pair<std::uint64_t, const std::vector<std::uint64_t>*>> distinct;
  distinct.reserve(first.size());
  for (const auto& [key, x] : first) distinct.emplace_back(x, &key);
  std::sort(distinct.begin(), distinct.end());

  for (const auto& [xa, ma] : distinct)
    for (const auto& [xb, mb] : distinct) {
      bool meet = false;
      for (std::size_t k = 0; k < nw; ++k)
        if ((*ma)[k] & (*mb)[k]) {
          meet = true;
          break;
        }
      if (!meet)
        return {false, fp_decode(f.p, f.d, xa), fp_decode(f.p, f.d, xb)};
    }
  return {true, {}, {}};
}

namespace {

std::vector<std::uint32_t> unit_point(std::uint32_t d, std::uint32_t idx) {
  std::vector<std::uint32_t> pt(d, 0);
  pt[idx] = 1;
  return pt;
}

std::vector<std::uint32_t> pair_point(std::uint32_t d, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> pt(d, 0);
  pt[a] = 1;
  pt[b] = 1;
  return pt;
}

} // namespace

CollapseOutcome twolocal_collapse(Family fam, std::uint32_t n, const FunctionTable& f,
                                  std::uint64_t seed) {
  if (fam == Family::nf)
    fail(errc::invalid_params, "the nilpotent chain has no parametrized automorphisms");
  if (n < family_min_n(fam)) fail(errc::n_too_small, "index below the family minimum");
  const FieldConfig fc = FieldConfig::prime(f.p);
  if (f.p <= n) fail(errc::field_too_small, "need p > n for the closed forms");
  const std::uint32_t d = family_dim(fam, n);
  if (f.d != d) fail(errc::dimension_mismatch, "table dimension does not match the family");
  check_table(f);
  const std::uint64_t npts = f.img.size();

  std::uint64_t tuples = 0;
  {
    const std::uint64_t p = f.p;
    switch (fam) {
      case Family::r0: tuples = p * (p - 1); break;
      case Family::r2: tuples = (p - 1) * (p - 1) * p * p; break;
      default: tuples = (p - 1) * (p - 1) * p; break;
    }
  }
  if (tuples > kTupleCap) fail(errc::budget_exceeded, "tuple enumeration too large");
  std::vector<std::pair<AutParams, FpMat>> auts;
  auts.reserve(tuples);
  for_each_admissible_params(fam, fc, [&](const AutParams& ps) {
    auts.emplace_back(ps, FpMat::from_linear_map(aut_matrix(ps, n)));
  });

  // Anchor points: r0's e_1 column pins (alpha, beta) alone; e_1+e_2 pins
  // (alpha, beta, gamma) for the r-frames; r2's delta only shows at y.
  std::vector<std::vector<std::uint32_t>> anchors;
  if (fam == Family::r0)
    anchors.push_back(unit_point(d, 1));
  else
    anchors.push_back(pair_point(d, 0, 1));
  if (fam == Family::r2) anchors.push_back(unit_point(d, n + 1));

  auto value_at = [&](const std::vector<std::uint32_t>& pt) {
    return fp_decode(f.p, d, f.img[fp_encode(f.p, pt)]);
  };

  std::optional<AutParams> cand;
  {
    const auto th = value_at(anchors[0]);
    auto S = [&](std::uint32_t r) { return Scalar::from_residue(th[r], fc); };
    switch (fam) {
      case Family::r0:
        if (th[1] != 0) cand = AutParams::r0(S(2) / S(1), S(1));
        break;
      case Family::r1:
        if (th[0] != 0 && th[1] != 0) cand = AutParams::r1(S(0), S(1), -S(2) / S(1));
        break;
      case Family::r2:
        if (th[0] != 0 && th[1] != 0) {
          const auto ty = value_at(anchors[1]);
          cand = AutParams::r2(S(0), -S(2) / S(0), S(1), Scalar::from_residue(ty[1], fc));
        }
        break;
      default:
        if (th[0] != 0 && th[1] != 0) cand = AutParams::r3(S(0), -S(2) / S(0), S(1));
        break;
    }
  }

  std::optional<std::uint64_t> bad;
  if (cand) {
    const FpMat cm = FpMat::from_linear_map(aut_matrix(*cand, n));
    std::vector<std::uint32_t> img(d);
    for (std::uint64_t x = 0; x < npts; ++x) {
      const auto pt = fp_decode(f.p, d, x);
      cm.apply(pt.data(), img.data());
      if (fp_encode(f.p, img) != f.img[x]) {
        bad = x;
        break;
      }
    }
    if (!bad) {
      CollapseOutcome out;
      out.kind = CollapseOutcome::Kind::automorphism;
      out.params = *cand;
      return out;
    }
  }

  // Exact pair check over the full tuple list; a true result is a verdict.
  auto pair_fails = [&](const std::vector<std::uint32_t>& xa,
                        const std::vector<std::uint32_t>& xb) {
    const std::uint64_t ia = fp_encode(f.p, xa), ib = fp_encode(f.p, xb);
    std::vector<std::uint32_t> t(d);
    for (const auto& [ps, m] : auts) {
      m.apply(xa.data(), t.data());
      if (fp_encode(f.p, t) != f.img[ia]) continue;
      m.apply(xb.data(), t.data());
      if (fp_encode(f.p, t) == f.img[ib]) return false;
    }
    return true;
  };
  // Witness order: the offending point first, the anchor (or second sample
  // point) second.
  auto failure = [&](std::vector<std::uint32_t> xa, std::vector<std::uint32_t> xb) {
    CollapseOutcome out;
    out.kind = CollapseOutcome::Kind::anchor_failure;
    out.x = std::move(xa);
    out.y = std::move(xb);
    return out;
  };

  if (bad) {
    const auto bp = fp_decode(f.p, d, *bad);
    for (const auto& z : anchors)
      if (pair_fails(bp, z)) return failure(bp, z);
  } else {
    for (const auto& z : anchors)
      if (pair_fails(z, z)) return failure(z, z);
  }

  // Bounded fallback: agreement masks over a deterministic point sample.
  std::vector<std::vector<std::uint32_t>> sample = anchors;
  if (bad) sample.push_back(fp_decode(f.p, d, *bad));
  for (std::uint32_t i = 0; i < d; ++i) sample.push_back(unit_point(d, i));
  for (std::uint32_t i = 0; i + 1 < d; ++i) sample.push_back(pair_point(d, i, i + 1));
  for (std::uint64_t x = 1; x < std::min<std::uint64_t>(npts, 17); ++x)
    sample.push_back(fp_decode(f.p, d, x));
  Rng rng(seed);
  for (int k = 0; k < 64; ++k) {
    std::vector<std::uint32_t> pt(d);
    for (std::uint32_t i = 0; i < d; ++i)
      pt[i] = static_cast<std::uint32_t>(rng.below(f.p));
    sample.push_back(std::move(pt));
  }
  std::vector<std::vector<std::uint32_t>> pts;
  std::unordered_set<std::uint64_t> seen;
  for (auto& pt : sample)
    if (seen.insert(fp_encode(f.p, pt)).second) pts.push_back(std::move(pt));

  const std::size_t nw = (auts.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(pts.size(),
                                                std::vector<std::uint64_t>(nw, 0));
  std::vector<std::uint32_t> img(d);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::uint64_t fx = f.img[fp_encode(f.p, pts[i])];
    for (std::size_t a = 0; a < auts.size(); ++a) {
      auts[a].second.apply(pts[i].data(), img.data());
      if (fp_encode(f.p, img) == fx) masks[i][a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) {
      bool meet = false;
      for (std::size_t k = 0; k < nw; ++k)
        if (masks[i][k] & masks[j][k]) {
          meet = true;
          break;
        }
      if (!meet) return failure(pts[i], pts[j]);
    }

  CollapseOutcome out;
  out.kind = CollapseOutcome::Kind::inconclusive;
  if (cand) out.params = *cand;
  out.detail = bad ? "table differs from the anchored tuple at point index " +
                         std::to_string(*bad) + " but no failing pair surfaced in " +
                         std::to_string(pts.size()) + " sampled points"
                   : "anchor extraction failed yet sampled pairs are all matched";
  return out;
}

} // namespace leib
