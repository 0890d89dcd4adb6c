#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "leib/error.hpp"

namespace leib {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A coefficient field: the rationals, or a prime field F_p.
/// Prime fields are constructed with an explicit primality check; algebra
/// builders additionally require p to exceed the family index bound so the
/// factorials that appear in automorphism columns stay invertible.
struct FieldConfig {
  enum class Kind : std::uint8_t { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0; // valid iff kind == prime

  static FieldConfig rationals() { return FieldConfig{Kind::rationals, 0}; }
  static FieldConfig prime(std::uint32_t p);

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const FieldConfig& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldConfig& o) const { return !(*this == o); }

  std::string to_string() const; // "Q" or "F_p"
};

bool is_prime(std::uint64_t n);

/// Exact field element, canonical at all times: rationals are kept in lowest
/// terms with positive denominator (delegated to cpp_rational), prime-field
/// values as residues in [0, p).  Mixed-field arithmetic throws field_mismatch.
class Scalar {
public:
  Scalar() : f_(FieldConfig::rationals()) {}

  static Scalar zero(const FieldConfig& f);
  static Scalar one(const FieldConfig& f);
  static Scalar from_int(std::int64_t v, const FieldConfig& f);
  static Scalar from_rational(const Rational& q); // rationals only
  static Scalar from_residue(std::uint64_t r, const FieldConfig& f);

  const FieldConfig& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue value; prime fields only.
  std::uint64_t residue() const;
  /// Rational value; rationals only.
  const Rational& rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // throws division_by_zero
  Scalar operator-() const;
  Scalar inv() const; // throws division_by_zero
  Scalar pow(std::uint64_t e) const; // 0^0 == 1

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Ordering for canonical sorting only (field-consistent inputs assumed).
  bool operator<(const Scalar& o) const;

  std::string to_string() const;

private:
  FieldConfig f_;
  Rational q_;           // rationals payload
  std::uint64_t r_ = 0;  // prime payload

  void check_same(const Scalar& o) const;
};

/// k! in the field; throws factorial_not_invertible for F_p with k >= p.
Scalar factorial(const FieldConfig& f, std::uint64_t k);

/// Parse the canonical text form: "num", "num/den" (rationals, any sign,
/// normalized on ingest) or a decimal residue (prime fields).
Scalar parse_scalar(const std::string& text, const FieldConfig& f);

/// Exact integer k-th root, if it exists.  Negative input allowed for odd k.
std::optional<BigInt> integer_kth_root(const BigInt& v, unsigned k);

/// Exact rational k-th root, if one exists.  For even k the nonnegative root
/// is returned; both signs solve r^k == q.
std::optional<Rational> rational_kth_root(const Rational& q, unsigned k);

} // namespace leib
