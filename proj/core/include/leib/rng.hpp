#pragma once

#include <cstdint>
#include <random>

#include "leib/scalar.hpp"

namespace leib {

/// Seeded deterministic generator.  std::mt19937_64 has a standard-mandated
/// sequence, and we avoid std distributions (whose output is implementation
/// defined), so identical seeds give identical draws on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  /// Uniform-ish draw in [0, m); m > 0.  Modulo bias is irrelevant here —
  /// reproducibility is what matters.
  std::uint64_t below(std::uint64_t m) { return g_() % m; }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (g_() & 1) != 0; }

  /// Small positive rational with numerator/denominator in [1, cap].
  Scalar positive_rational(std::int64_t cap = 4) {
    return Scalar::from_rational(Rational(int_in(1, cap), int_in(1, cap)));
  }

  /// Small signed rational, possibly zero.
  Scalar small_rational(std::int64_t cap = 4) {
    auto num = int_in(-cap, cap);
    return Scalar::from_rational(Rational(num, int_in(1, cap)));
  }

  /// Small signed nonzero rational.
  Scalar nonzero_rational(std::int64_t cap = 4) {
    auto s = positive_rational(cap);
    return coin() ? s : Scalar::from_rational(-s.rational());
  }

  Scalar residue(const FieldConfig& f) { return Scalar::from_residue(below(f.p), f); }

  Scalar nonzero_residue(const FieldConfig& f) {
    return Scalar::from_residue(1 + below(f.p - 1), f);
  }

private:
  std::mt19937_64 g_;
};

} // namespace leib
