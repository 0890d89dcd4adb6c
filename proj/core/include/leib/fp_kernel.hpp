#pragma once

#include "leib/algebra.hpp"

namespace leib {

/// Dense structure-constant view of a prime-field algebra, for the exhaustive
/// scans.  Coordinates are residues in [0, p).
struct FpAlgebra {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> sc; // sc[(i*d + j)*d + k] = c_{ij}^k

  static FpAlgebra from(const Algebra& a);

  std::uint32_t c(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return sc[(static_cast<std::size_t>(i) * d + j) * d + k];
  }
  /// out = [a, b] on coordinate vectors of length d.
  void bracket(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
};

/// p^e with overflow failure; point count of F_p^d is fp_pow(p, d).
std::uint64_t fp_pow(std::uint64_t p, std::uint32_t e);

/// Point index <-> coordinates.  Big-endian positional encoding, so ascending
/// index order equals lexicographic order on coordinate tuples.
std::uint64_t fp_encode(std::uint32_t p, const std::vector<std::uint32_t>& coords);
std::vector<std::uint32_t> fp_decode(std::uint32_t p, std::uint32_t d, std::uint64_t idx);

/// Square matrix over F_p with flat residue storage; the workhorse of the
/// brute-force enumerations.  Entry order (row-major) doubles as the sort key.
struct FpMat {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> e; // row-major d*d

  static FpMat identity(std::uint32_t p, std::uint32_t d);
  static FpMat from_linear_map(const LinearMap& m);
  LinearMap to_linear_map() const;

  std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return e[static_cast<std::size_t>(i) * d + j]; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return e[static_cast<std::size_t>(i) * d + j]; }

  void apply(const std::uint32_t* in, std::uint32_t* out) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& in) const;
  FpMat mul(const FpMat& o) const;
  std::uint32_t det() const;

  bool operator==(const FpMat& o) const { return p == o.p && d == o.d && e == o.e; }
  bool operator<(const FpMat& o) const { return e < o.e; }
};

/// All automorphisms of a prime-field algebra by depth-first search over
/// matrix columns, pruning with every homomorphism constraint as soon as its
/// columns are fixed.  Sorted by entry order.  Refuses when the raw search
/// space p^(d*d) exceeds the in-code budget.
std::vector<FpMat> enumerate_aut_bruteforce(const Algebra& a, std::uint32_t workers = 1);

/// Dense orbit membership: bit (x, y) set iff some map in the set sends the
/// point with index x to the point with index y.  Guarded to small point
/// counts; the exhaustive local scan is the only client.
class OrbitTable {
 public:
  OrbitTable(std::uint32_t p, std::uint32_t d, const std::vector<FpMat>& maps);
  bool contains(std::uint64_t x_idx, std::uint64_t img_idx) const;
  std::uint64_t npoints() const { return npts_; }

 private:
  std::uint64_t npts_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Scan every linear map on F_p^d and keep those that agree with some member
/// of `auts` at each single point.  Sorted by entry order.  Same search-space
/// budget as the brute-force enumeration.
std::vector<FpMat> enumerate_local_maps_exhaustive(std::uint32_t p, std::uint32_t d,
                                                   const std::vector<FpMat>& auts,
                                                   std::uint32_t workers = 1);

struct PointWitness {
  bool ok = true;
  std::vector<std::uint32_t> point; // first point (index order) with no agreeing map
};

/// Pointwise check of one map against a finite automorphism list, first
/// failing point as witness.
PointWitness is_local_map_exhaustive(std::uint32_t p, std::uint32_t d,
                                     const std::vector<FpMat>& auts, const FpMat& t,
                                     std::uint32_t workers = 1);

/// Same check phrased on a prime-field algebra and exact-scalar maps.
PointWitness is_local_automorphism_exhaustive(const Algebra& a,
                                              const std::vector<LinearMap>& auts,
                                              const LinearMap& t,
                                              std::uint32_t workers = 1);

} // namespace leib
