#include "leib/scalar.hpp"

#include <boost/multiprecision/integer.hpp>

namespace leib {

const char* errc_name(errc c) {
  switch (c) {
    case errc::field_mismatch: return "field_mismatch";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::division_by_zero: return "division_by_zero";
    case errc::factorial_not_invertible: return "factorial_not_invertible";
    case errc::invalid_field: return "invalid_field";
    case errc::field_too_small: return "field_too_small";
    case errc::n_too_small: return "n_too_small";
    case errc::n_too_small_for_probes: return "n_too_small_for_probes";
    case errc::invalid_params: return "invalid_params";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::not_nilpotent: return "not_nilpotent";
    case errc::unsupported_point: return "unsupported_point";
    case errc::parse_error: return "parse_error";
    case errc::internal: return "internal";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldConfig FieldConfig::prime(std::uint32_t p) {
  if (!is_prime(p)) fail(errc::invalid_field, "modulus " + std::to_string(p) + " is not prime");
  return FieldConfig{Kind::prime, p};
}

std::string FieldConfig::to_string() const {
  return is_prime_field() ? "F_" + std::to_string(p) : "Q";
}

Scalar Scalar::zero(const FieldConfig& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const FieldConfig& f) { return from_int(1, f); }

Scalar Scalar::from_int(std::int64_t v, const FieldConfig& f) {
  Scalar s;
  s.f_ = f;
  if (f.is_prime_field()) {
    std::int64_t m = v % static_cast<std::int64_t>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<std::uint64_t>(m);
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Scalar::from_rational(const Rational& q) {
  Scalar s;
  s.f_ = FieldConfig::rationals();
  s.q_ = q;
  return s;
}

Scalar Scalar::from_residue(std::uint64_t r, const FieldConfig& f) {
  if (!f.is_prime_field()) fail(errc::field_mismatch, "residue constructor needs a prime field");
  Scalar s;
  s.f_ = f;
  s.r_ = r % f.p;
  return s;
}

bool Scalar::is_zero() const { return f_.is_prime_field() ? r_ == 0 : q_.is_zero(); }

bool Scalar::is_one() const { return f_.is_prime_field() ? r_ == 1 : q_ == 1; }

std::uint64_t Scalar::residue() const {
  if (!f_.is_prime_field()) fail(errc::field_mismatch, "residue() on a rational scalar");
  return r_;
}

const Rational& Scalar::rational() const {
  if (f_.is_prime_field()) fail(errc::field_mismatch, "rational() on a prime-field scalar");
  return q_;
}

void Scalar::check_same(const Scalar& o) const {
  if (f_ != o.f_)
    fail(errc::field_mismatch, f_.to_string() + " vs " + o.f_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.f_ = f_;
  if (f_.is_prime_field())
    s.r_ = (r_ + o.r_) % f_.p;
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.f_ = f_;
  if (f_.is_prime_field())
    s.r_ = (r_ + f_.p - o.r_) % f_.p;
  else
    s.q_ = q_ - o.q_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.f_ = f_;
  if (f_.is_prime_field())
    s.r_ = (r_ * o.r_) % f_.p;
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero in " + f_.to_string());
  Scalar s;
  s.f_ = f_;
  if (f_.is_prime_field()) {
    // Fermat: r^(p-2) mod p
    std::uint64_t base = r_, e = f_.p - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % f_.p;
      base = base * base % f_.p;
      e >>= 1;
    }
    s.r_ = acc;
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inv();
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.f_ = f_;
  if (f_.is_prime_field())
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar acc = Scalar::one(f_);
  Scalar base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) return false;
  return f_.is_prime_field() ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
  if (f_.is_prime_field()) return r_ < o.r_;
  return q_ < o.q_;
}

std::string Scalar::to_string() const {
  if (f_.is_prime_field()) return std::to_string(r_);
  return q_.str();
}

Scalar factorial(const FieldConfig& f, std::uint64_t k) {
  if (f.is_prime_field() && k >= f.p)
    fail(errc::factorial_not_invertible,
         std::to_string(k) + "! vanishes mod " + std::to_string(f.p));
  Scalar acc = Scalar::one(f);
  for (std::uint64_t i = 2; i <= k; ++i) acc = acc * Scalar::from_int(static_cast<std::int64_t>(i), f);
  return acc;
}

Scalar parse_scalar(const std::string& text, const FieldConfig& f) {
  if (text.empty()) fail(errc::parse_error, "empty scalar literal");
  auto check_numeric = [](const std::string& s) {
    if (s.empty()) fail(errc::parse_error, "empty component in scalar literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail(errc::parse_error, "sign without digits in scalar literal");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail(errc::parse_error, "bad scalar literal: " + s);
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  check_numeric(num);
  BigInt n(num);
  BigInt d = 1;
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    check_numeric(den);
    d = BigInt(den);
    if (d == 0) fail(errc::parse_error, "zero denominator: " + text);
  }
  if (f.is_prime_field()) {
    BigInt p(f.p);
    BigInt nm = n % p;
    if (nm < 0) nm += p;
    BigInt dm = d % p;
    if (dm < 0) dm += p;
    Scalar den = Scalar::from_residue(dm.convert_to<std::uint64_t>(), f);
    if (den.is_zero()) fail(errc::parse_error, "denominator not invertible mod " + std::to_string(f.p));
    return Scalar::from_residue(nm.convert_to<std::uint64_t>(), f) / den;
  }
  return Scalar::from_rational(Rational(n, d));
}

std::optional<BigInt> integer_kth_root(const BigInt& v, unsigned k) {
  if (k == 0) fail(errc::internal, "0th root");
  if (v == 0) return BigInt(0);
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = integer_kth_root(-v, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (k == 1) return v;
  // binary search on r with r^k == v
  BigInt lo = 1, hi = 1;
  while (boost::multiprecision::pow(hi, k) < v) hi <<= 1;
  while (lo <= hi) {
    BigInt mid = (lo + hi) / 2;
    BigInt mk = boost::multiprecision::pow(mid, k);
    if (mk == v) return mid;
    if (mk < v)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return std::nullopt;
}

std::optional<Rational> rational_kth_root(const Rational& q, unsigned k) {
  if (k % 2 == 0 && q < 0) return std::nullopt;
  auto rn = integer_kth_root(numerator(q), k);
  if (!rn) return std::nullopt;
  auto rd = integer_kth_root(denominator(q), k);
  if (!rd) return std::nullopt;
  Rational r(*rn, *rd);
  if (k % 2 == 0 && r < 0) r = -r;
  return r;
}

} // namespace leib
