#include "leib/aut.hpp"

#include <algorithm>

namespace leib {

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    fail(errc::field_mismatch, "automorphism parameters must share one field");
}

Scalar sign_pow(const FieldConfig& f, std::uint64_t k) {
  return (k % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

} // namespace

AutParams AutParams::r0(Scalar a, Scalar b) {
  require_same_field(a, b);
  if (b.is_zero()) fail(errc::invalid_params, "r0 automorphism needs beta != 0");
  AutParams p;
  p.family = Family::r0;
  p.alpha = a;
  p.beta = b;
  p.gamma = Scalar::zero(a.field());
  p.delta = Scalar::zero(a.field());
  return p;
}

AutParams AutParams::r1(Scalar a, Scalar b, Scalar g) {
  require_same_field(a, b);
  require_same_field(a, g);
  if (a.is_zero() || b.is_zero())
    fail(errc::invalid_params, "r1 automorphism needs alpha*beta != 0");
  AutParams p;
  p.family = Family::r1;
  p.alpha = a;
  p.beta = b;
  p.gamma = g;
  p.delta = Scalar::zero(a.field());
  return p;
}

AutParams AutParams::r2(Scalar a, Scalar b, Scalar g, Scalar d) {
  require_same_field(a, b);
  require_same_field(a, g);
  require_same_field(a, d);
  if (a.is_zero() || g.is_zero())
    fail(errc::invalid_params, "r2 automorphism needs alpha*gamma != 0");
  AutParams p;
  p.family = Family::r2;
  p.alpha = a;
  p.beta = b;
  p.gamma = g;
  p.delta = d;
  return p;
}

AutParams AutParams::r3(Scalar a, Scalar b, Scalar g) {
  require_same_field(a, b);
  require_same_field(a, g);
  if (a.is_zero() || g.is_zero())
    fail(errc::invalid_params, "r3 automorphism needs alpha*gamma != 0");
  AutParams p;
  p.family = Family::r3;
  p.alpha = a;
  p.beta = b;
  p.gamma = g;
  p.delta = Scalar::zero(a.field());
  return p;
}

AutParams AutParams::unchecked(Family fam, Scalar a, Scalar b, Scalar g, Scalar d) {
  require_same_field(a, b);
  require_same_field(a, g);
  require_same_field(a, d);
  AutParams p;
  p.family = fam;
  p.alpha = a;
  p.beta = b;
  p.gamma = g;
  p.delta = d;
  return p;
}

bool AutParams::admissible() const {
  switch (family) {
    case Family::r0: return !beta.is_zero();
    case Family::r1: return !alpha.is_zero() && !beta.is_zero();
    case Family::r2:
    case Family::r3: return !alpha.is_zero() && !gamma.is_zero();
    default: fail(errc::invalid_params, "family has no parametrized automorphisms");
  }
}

bool AutParams::operator==(const AutParams& o) const {
  if (family != o.family) return false;
  switch (family_param_count(family)) {
    case 2: return alpha == o.alpha && beta == o.beta;
    case 3: return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
    default:
      return alpha == o.alpha && beta == o.beta && gamma == o.gamma && delta == o.delta;
  }
}

std::string AutParams::to_string() const {
  std::string s = std::string(family_name(family)) + "(alpha=" + alpha.to_string() +
                  ", beta=" + beta.to_string();
  if (family_param_count(family) >= 3) s += ", gamma=" + gamma.to_string();
  if (family_param_count(family) >= 4) s += ", delta=" + delta.to_string();
  return s + ")";
}

std::uint32_t family_param_count(Family fam) {
  switch (fam) {
    case Family::r0: return 2;
    case Family::r1: return 3;
    case Family::r2: return 4;
    case Family::r3: return 3;
    default: fail(errc::invalid_params, "family has no parametrized automorphisms");
  }
}

namespace {

// r0 basis: e_0..e_n at indices 0..n.
// Column i has entries at rows j = i..n: alpha^{j-i} beta^i / (j-i)!.
LinearMap aut_matrix_r0(const AutParams& p, std::uint32_t n) {
  const FieldConfig& f = p.field();
  const std::uint32_t d = n + 1;
  Matrix m(f, d);
  for (std::uint32_t i = 0; i <= n; ++i) {
    const Scalar bi = p.beta.pow(i);
    for (std::uint32_t j = i; j <= n; ++j)
      m.at(j, i) = p.alpha.pow(j - i) * bi / factorial(f, j - i);
  }
  return m;
}

// r1/r2/r3 basis: e_1..e_n at indices 0..n-1, x at n, y at n+1.
LinearMap aut_matrix_r1(const AutParams& p, std::uint32_t n) {
  const FieldConfig& f = p.field();
  const std::uint32_t d = n + 2;
  Matrix m(f, d);
  m.at(0, 0) = p.alpha;
  for (std::uint32_t i = 2; i <= n; ++i) {
    const Scalar head = p.alpha.pow(i - 2) * p.beta;
    for (std::uint32_t j = i; j <= n; ++j)
      m.at(j - 1, i - 1) = sign_pow(f, j - i) * head * p.gamma.pow(j - i) / factorial(f, j - i);
  }
  m.at(0, n) = p.gamma;    // phi(x) = gamma e_1 + x
  m.at(n, n) = Scalar::one(f);
  m.at(n + 1, n + 1) = Scalar::one(f); // phi(y) = y
  return m;
}

LinearMap aut_matrix_r2_or_r3(const AutParams& p, std::uint32_t n, bool with_delta) {
  const FieldConfig& f = p.field();
  const std::uint32_t d = n + 2;
  Matrix m(f, d);
  // phi(e_1) = alpha e_1 + sum_{i=3..n} (-1)^i alpha beta^{i-2}/(i-2)! e_i
  m.at(0, 0) = p.alpha;
  for (std::uint32_t i = 3; i <= n; ++i)
    m.at(i - 1, 0) = sign_pow(f, i) * p.alpha * p.beta.pow(i - 2) / factorial(f, i - 2);
  // phi(e_2) = gamma e_2
  m.at(1, 1) = p.gamma;
  // phi(e_i) = sum_{j=i..n} (-1)^{j-i} alpha^{i-1} beta^{j-i}/(j-i)! e_j
  for (std::uint32_t i = 3; i <= n; ++i) {
    const Scalar head = p.alpha.pow(i - 1);
    for (std::uint32_t j = i; j <= n; ++j)
      m.at(j - 1, i - 1) = sign_pow(f, j - i) * head * p.beta.pow(j - i) / factorial(f, j - i);
  }
  // phi(x) = beta e_1 + sum_{i=3..n} (-1)^i beta^{i-1}/(i-1)! e_i + x
  m.at(0, n) = p.beta;
  for (std::uint32_t i = 3; i <= n; ++i)
    m.at(i - 1, n) = sign_pow(f, i) * p.beta.pow(i - 1) / factorial(f, i - 1);
  m.at(n, n) = Scalar::one(f);
  // phi(y) = delta e_2 + y (r2) or just y (r3)
  if (with_delta) m.at(1, n + 1) = p.delta;
  m.at(n + 1, n + 1) = Scalar::one(f);
  return m;
}

} // namespace

LinearMap aut_matrix(const AutParams& p, std::uint32_t n) {
  if (n < family_min_n(p.family))
    fail(errc::n_too_small, "index below the family minimum");
  switch (p.family) {
    case Family::r0: return aut_matrix_r0(p, n);
    case Family::r1: return aut_matrix_r1(p, n);
    case Family::r2: return aut_matrix_r2_or_r3(p, n, true);
    case Family::r3: return aut_matrix_r2_or_r3(p, n, false);
    default: fail(errc::invalid_params, "family has no parametrized automorphisms");
  }
}

LinearMap make_automorphism(Family fam, std::uint32_t n, const AutParams& p) {
  if (p.family != fam) fail(errc::invalid_params, "parameter family mismatch");
  if (!p.admissible()) fail(errc::invalid_params, "inadmissible parameters");
  return aut_matrix(p, n);
}

AutVerdict is_automorphism(const Algebra& a, const LinearMap& t) {
  if (a.field() != t.field()) fail(errc::field_mismatch, "algebra/map field mismatch");
  if (a.dim() != t.dim()) fail(errc::dimension_mismatch, "algebra/map dimension mismatch");
  if (det_bareiss(t).is_zero()) return {AutVerdict::Kind::not_bijective, 0, 0};
  const std::uint32_t d = a.dim();
  for (std::uint32_t i = 0; i < d; ++i) {
    const Vec ti = t.column(i);
    for (std::uint32_t j = 0; j < d; ++j) {
      const Vec lhs = t.apply(a.basis_product(i, j));
      const Vec rhs = a.bracket(ti, t.column(j));
      if (!(lhs == rhs)) return {AutVerdict::Kind::not_homomorphic, i, j};
    }
  }
  return {AutVerdict::Kind::yes, 0, 0};
}

LinearMap compose(const LinearMap& s, const LinearMap& t) { return s * t; }

AutParams compose_params_r0(const AutParams& p, const AutParams& q) {
  if (p.family != Family::r0 || q.family != Family::r0)
    fail(errc::invalid_params, "r0 composition law needs r0 parameters");
  require_same_field(p.alpha, q.alpha);
  // aut(a1,b1) . aut(a2,b2) = aut(a1 + b1 a2, b1 b2): the chain column picks up
  // the inner alpha scaled by the outer beta.
  return AutParams::r0(p.alpha + p.beta * q.alpha, p.beta * q.beta);
}

void for_each_admissible_params(Family fam, const FieldConfig& f,
                                const std::function<void(const AutParams&)>& fn) {
  if (!f.is_prime_field())
    fail(errc::invalid_field, "parameter enumeration needs a prime field");
  const std::uint64_t p = f.p;
  switch (fam) {
    case Family::r0:
      for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 1; b < p; ++b)
          fn(AutParams::r0(Scalar::from_residue(a, f), Scalar::from_residue(b, f)));
      return;
    case Family::r1:
      for (std::uint64_t a = 1; a < p; ++a)
        for (std::uint64_t b = 1; b < p; ++b)
          for (std::uint64_t g = 0; g < p; ++g)
            fn(AutParams::r1(Scalar::from_residue(a, f), Scalar::from_residue(b, f),
                             Scalar::from_residue(g, f)));
      return;
    case Family::r2:
      for (std::uint64_t a = 1; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
          for (std::uint64_t g = 1; g < p; ++g)
            for (std::uint64_t d = 0; d < p; ++d)
              fn(AutParams::r2(Scalar::from_residue(a, f), Scalar::from_residue(b, f),
                               Scalar::from_residue(g, f), Scalar::from_residue(d, f)));
      return;
    case Family::r3:
      for (std::uint64_t a = 1; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
          for (std::uint64_t g = 1; g < p; ++g)
            fn(AutParams::r3(Scalar::from_residue(a, f), Scalar::from_residue(b, f),
                             Scalar::from_residue(g, f)));
      return;
    default: fail(errc::invalid_params, "family has no parametrized automorphisms");
  }
}

std::vector<LinearMap> enumerate_aut_parametrized(Family fam, std::uint32_t n,
                                                  const FieldConfig& f) {
  std::vector<LinearMap> out;
  for_each_admissible_params(fam, f,
                             [&](const AutParams& p) { out.push_back(aut_matrix(p, n)); });
  std::sort(out.begin(), out.end(),
            [](const LinearMap& a, const LinearMap& b) { return a.key() < b.key(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace leib
