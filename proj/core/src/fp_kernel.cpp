#include "leib/fp_kernel.hpp"

#include <algorithm>
#include <limits>

#include "leib/parallel.hpp"

namespace leib {

namespace {

constexpr std::uint64_t kSearchBudget = 100'000'000; // raw matrix count ceiling
constexpr std::uint64_t kOrbitPointCap = 4096;       // dense orbit-table guard

std::uint32_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// p^e capped at the search budget; used to pre-screen exhaustive scans.
std::uint64_t space_or_fail(std::uint64_t p, std::uint32_t e, const char* what) {
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (s > kSearchBudget / p)
      fail(errc::budget_exceeded, std::string(what) + " search space exceeds the in-code budget");
    s *= p;
  }
  return s;
}

} // namespace

FpAlgebra FpAlgebra::from(const Algebra& a) {
  if (!a.field().is_prime_field())
    fail(errc::invalid_field, "dense kernel needs a prime-field algebra");
  FpAlgebra out;
  out.p = a.field().p;
  out.d = a.dim();
  out.sc.assign(static_cast<std::size_t>(out.d) * out.d * out.d, 0);
  for (std::uint32_t i = 0; i < out.d; ++i)
    for (std::uint32_t j = 0; j < out.d; ++j) {
      const Vec& v = a.basis_product(i, j);
      for (std::uint32_t k = 0; k < out.d; ++k)
        out.sc[(static_cast<std::size_t>(i) * out.d + j) * out.d + k] =
            static_cast<std::uint32_t>(v[k].residue());
    }
  return out;
}

void FpAlgebra::bracket(const std::uint32_t* a, const std::uint32_t* b,
                        std::uint32_t* out) const {
  for (std::uint32_t k = 0; k < d; ++k) out[k] = 0;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const std::uint64_t s = static_cast<std::uint64_t>(a[i]) * b[j] % p;
      if (s == 0) continue;
      const std::uint32_t* row = &sc[(static_cast<std::size_t>(i) * d + j) * d];
      for (std::uint32_t k = 0; k < d; ++k)
        if (row[k] != 0) out[k] = static_cast<std::uint32_t>((out[k] + s * row[k]) % p);
    }
  }
}

std::uint64_t fp_pow(std::uint64_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p)
      fail(errc::budget_exceeded, "point space does not fit in 64 bits");
    r *= p;
  }
  return r;
}

std::uint64_t fp_encode(std::uint32_t p, const std::vector<std::uint32_t>& coords) {
  std::uint64_t idx = 0;
  for (std::uint32_t c : coords) idx = idx * p + c;
  return idx;
}

std::vector<std::uint32_t> fp_decode(std::uint32_t p, std::uint32_t d, std::uint64_t idx) {
  std::vector<std::uint32_t> coords(d, 0);
  for (std::uint32_t i = d; i-- > 0;) {
    coords[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return coords;
}

FpMat FpMat::identity(std::uint32_t p, std::uint32_t d) {
  FpMat m;
  m.p = p;
  m.d = d;
  m.e.assign(static_cast<std::size_t>(d) * d, 0);
  for (std::uint32_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::from_linear_map(const LinearMap& m) {
  if (!m.field().is_prime_field())
    fail(errc::invalid_field, "dense kernel needs a prime-field map");
  FpMat out;
  out.p = m.field().p;
  out.d = m.dim();
  out.e.resize(static_cast<std::size_t>(out.d) * out.d);
  for (std::uint32_t i = 0; i < out.d; ++i)
    for (std::uint32_t j = 0; j < out.d; ++j)
      out.at(i, j) = static_cast<std::uint32_t>(m.at(i, j).residue());
  return out;
}

LinearMap FpMat::to_linear_map() const {
  const FieldConfig f = FieldConfig::prime(p);
  Matrix m(f, d);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) m.at(i, j) = Scalar::from_residue(at(i, j), f);
  return m;
}

void FpMat::apply(const std::uint32_t* in, std::uint32_t* out) const {
  for (std::uint32_t i = 0; i < d; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = &e[static_cast<std::size_t>(i) * d];
    for (std::uint32_t j = 0; j < d; ++j) acc += static_cast<std::uint64_t>(row[j]) * in[j];
    out[i] = static_cast<std::uint32_t>(acc % p);
  }
}

std::vector<std::uint32_t> FpMat::apply(const std::vector<std::uint32_t>& in) const {
  std::vector<std::uint32_t> out(d, 0);
  apply(in.data(), out.data());
  return out;
}

FpMat FpMat::mul(const FpMat& o) const {
  FpMat r;
  r.p = p;
  r.d = d;
  r.e.assign(static_cast<std::size_t>(d) * d, 0);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t k = 0; k < d; ++k) {
      const std::uint64_t a = at(i, k);
      if (a == 0) continue;
      for (std::uint32_t j = 0; j < d; ++j)
        r.at(i, j) = static_cast<std::uint32_t>((r.at(i, j) + a * o.at(k, j)) % p);
    }
  return r;
}

std::uint32_t FpMat::det() const {
  std::vector<std::uint64_t> w(e.begin(), e.end());
  std::uint64_t det = 1;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && w[static_cast<std::size_t>(pivot) * d + col] % p == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < d; ++j)
        std::swap(w[static_cast<std::size_t>(pivot) * d + j],
                  w[static_cast<std::size_t>(col) * d + j]);
      det = (p - det % p) % p;
    }
    const std::uint64_t pv = w[static_cast<std::size_t>(col) * d + col] % p;
    det = det * pv % p;
    const std::uint64_t inv = powmod(pv, p - 2, p);
    for (std::uint32_t r = col + 1; r < d; ++r) {
      const std::uint64_t f = w[static_cast<std::size_t>(r) * d + col] % p * inv % p;
      if (f == 0) continue;
      for (std::uint32_t j = col; j < d; ++j) {
        const std::uint64_t sub = f * (w[static_cast<std::size_t>(col) * d + j] % p) % p;
        w[static_cast<std::size_t>(r) * d + j] += p - sub; // keep nonnegative
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

namespace {

struct PairCheck {
  std::uint32_t i = 0, j = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lhs; // (k, c_{ij}^k)
};

// DFS over columns; pairs_at[m] lists the homomorphism constraints that
// become fully determined once column m is placed.
struct BruteForceSearch {
  const FpAlgebra& alg;
  std::vector<std::vector<PairCheck>> pairs_at;
  std::vector<std::vector<std::uint32_t>> colv;
  std::vector<std::uint32_t> lhs_buf, rhs_buf, xcol, ycol;
  std::vector<FpMat>* out = nullptr;

  explicit BruteForceSearch(const FpAlgebra& a) : alg(a) {
    const std::uint32_t d = alg.d;
    pairs_at.resize(d);
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) {
        PairCheck pc;
        pc.i = i;
        pc.j = j;
        std::uint32_t need = std::max(i, j);
        for (std::uint32_t k = 0; k < d; ++k)
          if (alg.c(i, j, k) != 0) {
            pc.lhs.emplace_back(k, alg.c(i, j, k));
            need = std::max(need, k);
          }
        pairs_at[need].push_back(std::move(pc));
      }
    colv.assign(d, std::vector<std::uint32_t>(d, 0));
    lhs_buf.assign(d, 0);
    rhs_buf.assign(d, 0);
    xcol.assign(d, 0);
    ycol.assign(d, 0);
  }

  bool check_pair(const PairCheck& pc) {
    const std::uint32_t d = alg.d;
    const std::uint32_t p = alg.p;
    for (std::uint32_t r = 0; r < d; ++r) {
      std::uint64_t acc = 0;
      for (const auto& [k, c] : pc.lhs) acc += static_cast<std::uint64_t>(c) * colv[k][r];
      lhs_buf[r] = static_cast<std::uint32_t>(acc % p);
    }
    for (std::uint32_t r = 0; r < d; ++r) {
      xcol[r] = colv[pc.i][r];
      ycol[r] = colv[pc.j][r];
    }
    alg.bracket(xcol.data(), ycol.data(), rhs_buf.data());
    return lhs_buf == rhs_buf;
  }

  void emit_if_invertible() {
    FpMat m;
    m.p = alg.p;
    m.d = alg.d;
    m.e.resize(static_cast<std::size_t>(alg.d) * alg.d);
    for (std::uint32_t i = 0; i < alg.d; ++i)
      for (std::uint32_t j = 0; j < alg.d; ++j) m.at(i, j) = colv[j][i];
    if (m.det() != 0) out->push_back(std::move(m));
  }

  void dfs(std::uint32_t level, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t npts = fp_pow(alg.p, alg.d);
    const std::uint64_t begin = level == 0 ? lo : 0;
    const std::uint64_t end = level == 0 ? hi : npts;
    for (std::uint64_t cand = begin; cand < end; ++cand) {
      std::uint64_t v = cand;
      for (std::uint32_t r = alg.d; r-- > 0;) {
        colv[level][r] = static_cast<std::uint32_t>(v % alg.p);
        v /= alg.p;
      }
      bool ok = true;
      for (const PairCheck& pc : pairs_at[level])
        if (!check_pair(pc)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (level + 1 == alg.d)
        emit_if_invertible();
      else
        dfs(level + 1, 0, 0);
    }
  }
};

} // namespace

std::vector<FpMat> enumerate_aut_bruteforce(const Algebra& a, std::uint32_t workers) {
  const FpAlgebra alg = FpAlgebra::from(a);
  space_or_fail(alg.p, alg.d * alg.d, "brute-force automorphism");
  const std::uint64_t npts = fp_pow(alg.p, alg.d);
  const std::uint32_t w = resolve_workers(workers);
  std::vector<std::vector<FpMat>> found(w);
  parallel_slices(npts, w, [&](std::uint32_t worker, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    BruteForceSearch search(alg);
    search.out = &found[worker];
    search.dfs(0, lo, hi);
  });
  std::vector<FpMat> all;
  for (auto& part : found)
    for (auto& m : part) all.push_back(std::move(m));
  std::sort(all.begin(), all.end());
  return all;
}

OrbitTable::OrbitTable(std::uint32_t p, std::uint32_t d, const std::vector<FpMat>& maps) {
  npts_ = fp_pow(p, d);
  if (npts_ > kOrbitPointCap)
    fail(errc::budget_exceeded, "orbit table limited to small point spaces");
  words_per_row_ = (npts_ + 63) / 64;
  bits_.assign(npts_ * words_per_row_, 0);
  std::vector<std::uint32_t> img(d, 0);
  for (std::uint64_t x = 0; x < npts_; ++x) {
    const std::vector<std::uint32_t> pt = fp_decode(p, d, x);
    for (const FpMat& m : maps) {
      m.apply(pt.data(), img.data());
      const std::uint64_t y = fp_encode(p, img);
      bits_[x * words_per_row_ + y / 64] |= std::uint64_t{1} << (y % 64);
    }
  }
}

bool OrbitTable::contains(std::uint64_t x_idx, std::uint64_t img_idx) const {
  return (bits_[x_idx * words_per_row_ + img_idx / 64] >> (img_idx % 64)) & 1;
}

std::vector<FpMat> enumerate_local_maps_exhaustive(std::uint32_t p, std::uint32_t d,
                                                   const std::vector<FpMat>& auts,
                                                   std::uint32_t workers) {
  const std::uint64_t space = space_or_fail(p, d * d, "local-map");
  const OrbitTable orbit(p, d, auts);
  const std::uint64_t npts = orbit.npoints();
  std::vector<std::vector<std::uint32_t>> pts;
  pts.reserve(npts);
  for (std::uint64_t x = 0; x < npts; ++x) pts.push_back(fp_decode(p, d, x));
  const std::uint32_t w = resolve_workers(workers);
  std::vector<std::vector<FpMat>> found(w);
  parallel_slices(space, w, [&](std::uint32_t worker, std::uint64_t lo, std::uint64_t hi) {
    FpMat t;
    t.p = p;
    t.d = d;
    t.e.assign(static_cast<std::size_t>(d) * d, 0);
    std::vector<std::uint32_t> img(d, 0);
    for (std::uint64_t mi = lo; mi < hi; ++mi) {
      std::uint64_t v = mi;
      for (std::size_t k = t.e.size(); k-- > 0;) {
        t.e[k] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      bool local = true;
      for (std::uint64_t x = 1; x < npts; ++x) { // 0 maps to 0 under every map
        t.apply(pts[x].data(), img.data());
        if (!orbit.contains(x, fp_encode(p, img))) {
          local = false;
          break;
        }
      }
      if (local) found[worker].push_back(t);
    }
  });
  std::vector<FpMat> all;
  for (auto& part : found)
    for (auto& m : part) all.push_back(std::move(m));
  std::sort(all.begin(), all.end());
  return all;
}

PointWitness is_local_map_exhaustive(std::uint32_t p, std::uint32_t d,
                                     const std::vector<FpMat>& auts, const FpMat& t,
                                     std::uint32_t workers) {
  const std::uint64_t npts = fp_pow(p, d);
  const std::uint32_t w = resolve_workers(workers);
  std::vector<std::uint64_t> first_bad(w, npts);
  parallel_slices(npts - 1, w, [&](std::uint32_t worker, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> img(d, 0), aimg(d, 0);
    for (std::uint64_t off = lo; off < hi; ++off) {
      const std::uint64_t x = off + 1;
      const std::vector<std::uint32_t> pt = fp_decode(p, d, x);
      t.apply(pt.data(), img.data());
      bool hit = false;
      for (const FpMat& a : auts) {
        a.apply(pt.data(), aimg.data());
        if (aimg == img) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        first_bad[worker] = x;
        return;
      }
    }
  });
  std::uint64_t bad = npts;
  for (std::uint64_t b : first_bad) bad = std::min(bad, b);
  if (bad == npts) return {true, {}};
  return {false, fp_decode(p, d, bad)};
}

PointWitness is_local_automorphism_exhaustive(const Algebra& a,
                                              const std::vector<LinearMap>& auts,
                                              const LinearMap& t,
                                              std::uint32_t workers) {
  const FpAlgebra fa = FpAlgebra::from(a);
  std::vector<FpMat> fauts;
  fauts.reserve(auts.size());
  for (const LinearMap& m : auts) fauts.push_back(FpMat::from_linear_map(m));
  return is_local_map_exhaustive(fa.p, fa.d, fauts, FpMat::from_linear_map(t), workers);
}

} // namespace leib
