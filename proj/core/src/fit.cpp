#include <algorithm>
#include <set>

#include "leib/locality.hpp"

namespace leib {

Vec Probe::make_vec(const FieldConfig& f) const {
  Vec v(f, dim);
  for (std::uint32_t i : support) v[i] = Scalar::one(f);
  return v;
}

namespace {

std::string basis_label(Family fam, std::uint32_t n, std::uint32_t idx) {
  if (fam == Family::r0) return "e_" + std::to_string(idx);
  if (idx == n) return "x";
  if (idx == n + 1) return "y";
  return "e_" + std::to_string(idx + 1);
}

Probe make_probe(Family fam, std::uint32_t n, std::vector<std::uint32_t> supp) {
  Probe p;
  p.dim = family_dim(fam, n);
  p.support = std::move(supp);
  for (std::size_t k = 0; k < p.support.size(); ++k) {
    if (k) p.label += "+";
    p.label += basis_label(fam, n, p.support[k]);
  }
  return p;
}

} // namespace

std::vector<Probe> probe_set(Family fam, std::uint32_t n) {
  if (fam == Family::nf) fail(errc::invalid_params, "the nilpotent chain has no probe battery");
  if (n < 5) fail(errc::n_too_small_for_probes, "probe batteries are defined from n = 5 on");
  std::vector<Probe> out;
  switch (fam) {
    case Family::r0:
      for (std::uint32_t k = 2; k + 1 <= n; ++k) out.push_back(make_probe(fam, n, {0, k}));
      for (std::uint32_t k = 3; k + 1 <= n; ++k) out.push_back(make_probe(fam, n, {1, k}));
      for (std::uint32_t k = 4; k + 1 <= n; ++k) out.push_back(make_probe(fam, n, {2, k}));
      out.push_back(make_probe(fam, n, {1, n}));
      break;
    case Family::r1:
      for (std::uint32_t i = 2; i + 1 <= n; ++i) out.push_back(make_probe(fam, n, {i - 1, n}));
      for (std::uint32_t i = 4; i <= n; ++i) out.push_back(make_probe(fam, n, {0, 1, i - 1}));
      out.push_back(make_probe(fam, n, {0, 2, 4}));
      break;
    default:
      for (std::uint32_t k = 4; k <= n; ++k) out.push_back(make_probe(fam, n, {0, k - 1}));
      out.push_back(make_probe(fam, n, {2, 4}));
      for (std::uint32_t k = 4; k + 1 <= n; ++k) out.push_back(make_probe(fam, n, {n, k - 1}));
      break;
  }
  return out;
}

namespace {

const Scalar& param_by_name(const AutParams& p, const std::string& name) {
  if (name == "alpha") return p.alpha;
  if (name == "beta") return p.beta;
  if (name == "gamma") return p.gamma;
  if (name == "delta") return p.delta;
  fail(errc::internal, "unknown parameter name: " + name);
}

std::vector<std::string> family_param_names(Family fam) {
  switch (fam) {
    case Family::r0: return {"alpha", "beta"};
    case Family::r2: return {"alpha", "beta", "gamma", "delta"};
    default: return {"alpha", "beta", "gamma"};
  }
}

} // namespace

bool Monomial::satisfied_by(const AutParams& p) const {
  Scalar prod = Scalar::one(value.field());
  for (const auto& [name, e] : exps) prod = prod * param_by_name(p, name).pow(e);
  return prod == value;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [name, e] : exps) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s + " = " + value.to_string();
}

bool FitBranch::contains(const AutParams& p) const {
  for (const auto& [name, val] : bound)
    if (param_by_name(p, name) != val) return false;
  for (const Monomial& m : monomials)
    if (!m.satisfied_by(p)) return false;
  return true;
}

std::string FitBranch::to_string() const {
  std::string s = "{";
  bool first = true;
  auto sep = [&] {
    if (!first) s += ", ";
    first = false;
  };
  for (const auto& [name, val] : bound) {
    sep();
    s += name + " = " + val.to_string();
  }
  for (const Monomial& m : monomials) {
    sep();
    s += m.to_string();
  }
  for (const std::string& name : free_params) {
    sep();
    s += name + " free";
  }
  return s + "}";
}

bool PointFit::contains(const AutParams& p) const {
  if (p.family != family) return false;
  if (finite_mode) return std::find(members.begin(), members.end(), p) != members.end();
  for (const FitBranch& b : branches)
    if (b.contains(p)) return true;
  return false;
}

std::string PointFit::to_string() const {
  if (empty()) return "(no solutions)";
  if (finite_mode) return std::to_string(members.size()) + " parameter tuples";
  std::string s;
  for (const FitBranch& b : branches) {
    if (!s.empty()) s += " | ";
    s += b.to_string();
  }
  return s;
}

namespace {

// A solution component before verification: forced values plus power-product
// constraints; everything else free.
struct Sketch {
  std::map<std::string, Scalar> bound;
  std::vector<Monomial> monos;
};

// One concrete member of the sketch.  The two variants pick different free
// values so the caller can confirm the fitted image ignores the free
// directions.  The only monomial shape produced here is alpha^e * beta = m.
std::optional<AutParams> materialize(Family fam, const Sketch& sk, const FieldConfig& f,
                                     bool alt) {
  const Scalar fill = alt ? Scalar::from_int(2, f) : Scalar::one(f);
  std::map<std::string, Scalar> vals = sk.bound;
  for (const Monomial& m : sk.monos) {
    const std::uint32_t e = m.exps.count("alpha") ? m.exps.at("alpha") : 0;
    vals.emplace("alpha", fill);
    vals.emplace("beta", m.value / fill.pow(e));
  }
  for (const std::string& name : family_param_names(fam)) vals.emplace(name, fill);
  auto get = [&](const char* nm) {
    auto it = vals.find(nm);
    return it == vals.end() ? Scalar::zero(f) : it->second;
  };
  AutParams p = AutParams::unchecked(fam, get("alpha"), get("beta"), get("gamma"), get("delta"));
  if (!p.admissible()) return std::nullopt;
  return p;
}

// Rational candidates for s with s^k = t; both signs when k is even.
std::vector<Scalar> root_candidates(const Scalar& t, std::uint32_t k) {
  std::vector<Scalar> out;
  const auto r = rational_kth_root(t.rational(), k);
  if (!r) return out;
  out.push_back(Scalar::from_rational(*r));
  if (k % 2 == 0 && !out[0].is_zero()) out.push_back(-out[0]);
  return out;
}

// Candidate solutions for the r0 shapes.  nullopt marks an unsupported shape;
// an empty list means the fit is genuinely empty.
std::optional<std::vector<Sketch>> sketches_r0(std::uint32_t n,
                                               const std::vector<std::uint32_t>& s,
                                               const Vec& v) {
  std::vector<Sketch> out;
  if (s.size() == 1) {
    const std::uint32_t i = s[0];
    if (i == 0) { // image determines alpha at the e_1 row; beta is invisible
      Sketch sk;
      sk.bound.emplace("alpha", v[1]);
      out.push_back(std::move(sk));
      return out;
    }
    const Scalar c = v[i]; // = beta^i
    if (c.is_zero()) return out;
    for (const Scalar& b0 : root_candidates(c, i)) {
      Sketch sk;
      sk.bound.emplace("beta", b0);
      if (i < n) sk.bound.emplace("alpha", v[i + 1] / c);
      out.push_back(std::move(sk));
    }
    return out;
  }
  if (s.size() == 2) {
    const std::uint32_t a = s[0], k = s[1];
    if (a == 0 && 2 <= k && k + 1 <= n) { // e_0 + e_k
      const Scalar alpha = v[1];
      const Scalar c = v[k] - alpha.pow(k) / factorial(v.field(), k); // = beta^k
      if (c.is_zero()) return out;
      for (const Scalar& b0 : root_candidates(c, k)) {
        Sketch sk;
        sk.bound.emplace("alpha", alpha);
        sk.bound.emplace("beta", b0);
        out.push_back(std::move(sk));
      }
      return out;
    }
    if (a == 1 && 3 <= k && k <= n) { // e_1 + e_k (k = n allowed)
      const Scalar beta = v[1];
      if (beta.is_zero()) return out;
      Sketch sk;
      sk.bound.emplace("beta", beta);
      sk.bound.emplace("alpha", v[2] / beta);
      out.push_back(std::move(sk));
      return out;
    }
    if (a == 2 && 4 <= k && k + 1 <= n) { // e_2 + e_k
      const Scalar c2 = v[2]; // = beta^2
      if (c2.is_zero()) return out;
      for (const Scalar& b0 : root_candidates(c2, 2)) {
        Sketch sk;
        sk.bound.emplace("beta", b0);
        sk.bound.emplace("alpha", v[3] / c2);
        out.push_back(std::move(sk));
      }
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Sketch>> sketches_r1(std::uint32_t n,
                                               const std::vector<std::uint32_t>& s,
                                               const Vec& v) {
  std::vector<Sketch> out;
  const std::uint32_t xi = n, yi = n + 1;
  // Columns e_i (i >= 3) pin only the product alpha^{i-2} beta.
  auto head_constraint = [&](Sketch& sk, std::uint32_t i, const Scalar& m) {
    if (i == 2) {
      sk.bound.emplace("beta", m);
    } else {
      Monomial mo;
      mo.exps = {{"alpha", i - 2}, {"beta", 1}};
      mo.value = m;
      sk.monos.push_back(std::move(mo));
    }
  };
  if (s.size() == 1) {
    const std::uint32_t idx = s[0];
    if (idx == 0) { // e_1
      Sketch sk;
      sk.bound.emplace("alpha", v[0]);
      out.push_back(std::move(sk));
      return out;
    }
    if (idx == xi) { // x
      Sketch sk;
      sk.bound.emplace("gamma", v[0]);
      out.push_back(std::move(sk));
      return out;
    }
    if (idx == yi) { // y: fixed pointwise, nothing pinned
      out.push_back(Sketch{});
      return out;
    }
    const std::uint32_t i = idx + 1; // e_i, 2 <= i <= n
    const Scalar m = v[idx];
    if (m.is_zero()) return out;
    Sketch sk;
    head_constraint(sk, i, m);
    if (i < n) sk.bound.emplace("gamma", -v[idx + 1] / m);
    out.push_back(std::move(sk));
    return out;
  }
  if (s.size() == 2 && s[1] == xi && 1 <= s[0] && s[0] + 2 <= n) { // e_i + x, i in 2..n-1
    const std::uint32_t i = s[0] + 1;
    const Scalar m = v[s[0]];
    if (m.is_zero()) return out;
    Sketch sk;
    sk.bound.emplace("gamma", v[0]);
    head_constraint(sk, i, m);
    out.push_back(std::move(sk));
    return out;
  }
  if (s.size() == 3 && s[0] == 0 && s[1] == 1 && 3 <= s[2] && s[2] + 1 <= n) {
    // e_1 + e_2 + e_i, i in 4..n
    const Scalar beta = v[1];
    if (beta.is_zero()) return out;
    Sketch sk;
    sk.bound.emplace("alpha", v[0]);
    sk.bound.emplace("beta", beta);
    sk.bound.emplace("gamma", -v[2] / beta);
    out.push_back(std::move(sk));
    return out;
  }
  if (s.size() == 3 && s[0] == 0 && s[1] == 2 && s[2] == 4 && n >= 5) { // e_1 + e_3 + e_5
    const Scalar alpha = v[0];
    if (alpha.is_zero() || v[2].is_zero()) return out;
    Sketch sk;
    sk.bound.emplace("alpha", alpha);
    sk.bound.emplace("beta", v[2] / alpha);
    sk.bound.emplace("gamma", -v[3] / v[2]);
    out.push_back(std::move(sk));
    return out;
  }
  return std::nullopt;
}

std::optional<std::vector<Sketch>> sketches_r23(Family fam, std::uint32_t n,
                                                const std::vector<std::uint32_t>& s,
                                                const Vec& v) {
  std::vector<Sketch> out;
  const std::uint32_t xi = n, yi = n + 1;
  const FieldConfig& f = v.field();
  if (s.size() == 1) {
    const std::uint32_t idx = s[0];
    if (idx == 0) { // e_1: alpha at the e_1 row, -alpha*beta at the e_3 row
      const Scalar alpha = v[0];
      if (alpha.is_zero()) return out;
      Sketch sk;
      sk.bound.emplace("alpha", alpha);
      sk.bound.emplace("beta", -v[2] / alpha);
      out.push_back(std::move(sk));
      return out;
    }
    if (idx == 1) { // e_2
      Sketch sk;
      sk.bound.emplace("gamma", v[1]);
      out.push_back(std::move(sk));
      return out;
    }
    if (idx == xi) { // x: beta at the e_1 row, the rest follows from it
      Sketch sk;
      sk.bound.emplace("beta", v[0]);
      out.push_back(std::move(sk));
      return out;
    }
    if (idx == yi) { // y
      Sketch sk;
      if (fam == Family::r2) sk.bound.emplace("delta", v[1]);
      out.push_back(std::move(sk));
      return out;
    }
    const std::uint32_t i = idx + 1; // e_i, 3 <= i <= n; head is alpha^{i-1}
    const Scalar t = v[idx];
    if (t.is_zero()) return out;
    for (const Scalar& a0 : root_candidates(t, i - 1)) {
      Sketch sk;
      sk.bound.emplace("alpha", a0);
      if (i < n) sk.bound.emplace("beta", -v[idx + 1] / t);
      out.push_back(std::move(sk));
    }
    return out;
  }
  if (s.size() == 2) {
    if (s[0] == 0 && 3 <= s[1] && s[1] + 1 <= n) { // e_1 + e_k, k in 4..n
      const Scalar alpha = v[0];
      if (alpha.is_zero()) return out;
      Sketch sk;
      sk.bound.emplace("alpha", alpha);
      sk.bound.emplace("beta", -v[2] / alpha);
      out.push_back(std::move(sk));
      return out;
    }
    if (s[0] == 2 && s[1] == 4 && n >= 5) { // e_3 + e_5: only even alpha powers show
      const Scalar c = v[2]; // = alpha^2
      if (c.is_zero()) return out;
      const Scalar beta = -v[3] / c;
      for (const Scalar& a0 : root_candidates(c, 2)) {
        Sketch sk;
        sk.bound.emplace("alpha", a0);
        sk.bound.emplace("beta", beta);
        out.push_back(std::move(sk));
      }
      return out;
    }
    if (s[1] == xi && 3 <= s[0] && s[0] + 2 <= n) { // x + e_k, k in 4..n-1
      const std::uint32_t k = s[0] + 1;
      const Scalar beta = v[0];
      const Scalar sgn = (k % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
      const Scalar t = v[k - 1] - sgn * beta.pow(k - 1) / factorial(f, k - 1); // = alpha^{k-1}
      if (t.is_zero()) return out;
      for (const Scalar& a0 : root_candidates(t, k - 1)) {
        Sketch sk;
        sk.bound.emplace("alpha", a0);
        sk.bound.emplace("beta", beta);
        out.push_back(std::move(sk));
      }
      return out;
    }
  }
  return std::nullopt;
}

// Verify each sketch on two concrete members and keep the survivors.  Shapes
// are extracted so the fitted image depends only on bound/monomial values;
// the second member cross-checks that.
PointFit finish_sketches(Family fam, std::uint32_t n, const Vec& x, const Vec& v,
                         std::vector<Sketch> sketches) {
  PointFit fit;
  fit.family = fam;
  fit.finite_mode = false;
  const FieldConfig& f = x.field();
  for (Sketch& sk : sketches) {
    const auto w0 = materialize(fam, sk, f, false);
    if (!w0) continue;
    if (aut_matrix(*w0, n).apply(x) != v) continue;
    const auto w1 = materialize(fam, sk, f, true);
    if (!w1 || aut_matrix(*w1, n).apply(x) != v)
      fail(errc::internal, "fit image unexpectedly depends on a free parameter");
    FitBranch b;
    b.bound = std::move(sk.bound);
    b.monomials = std::move(sk.monos);
    std::set<std::string> used;
    for (const auto& [name, val] : b.bound) used.insert(name);
    for (const Monomial& m : b.monomials)
      for (const auto& [name, e] : m.exps) used.insert(name);
    for (const std::string& name : family_param_names(fam))
      if (!used.count(name)) b.free_params.push_back(name);
    b.witness = *w0;
    fit.branches.push_back(std::move(b));
  }
  return fit;
}

PointFit fit_finite(Family fam, std::uint32_t n, const Vec& x, const Vec& v) {
  const FieldConfig& f = x.field();
  const std::uint64_t p = f.p;
  std::uint64_t count = 0;
  switch (fam) {
    case Family::r0: count = p * (p - 1); break;
    case Family::r1:
    case Family::r3: count = (p - 1) * (p - 1) * p; break;
    default: count = (p - 1) * (p - 1) * p * p; break;
  }
  if (count > 2'000'000)
    fail(errc::budget_exceeded, "finite fit enumerates all tuples; field too large");
  PointFit fit;
  fit.family = fam;
  fit.finite_mode = true;
  for_each_admissible_params(fam, f, [&](const AutParams& ps) {
    if (aut_matrix(ps, n).apply(x) == v) fit.members.push_back(ps);
  });
  return fit;
}

std::optional<std::vector<std::uint32_t>> support01(const Vec& x) {
  std::vector<std::uint32_t> s;
  for (std::uint32_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_one())
      s.push_back(i);
    else if (!x[i].is_zero())
      return std::nullopt;
  }
  return s;
}

} // namespace

PointFit fit_at_point(Family fam, std::uint32_t n, const Vec& x, const Vec& v) {
  if (fam == Family::nf)
    fail(errc::invalid_params, "the nilpotent chain has no parametrized automorphisms");
  if (n < family_min_n(fam)) fail(errc::n_too_small, "index below the family minimum");
  if (x.field() != v.field()) fail(errc::field_mismatch, "point/target field mismatch");
  const std::uint32_t d = family_dim(fam, n);
  if (x.dim() != d || v.dim() != d)
    fail(errc::dimension_mismatch, "point/target dimension mismatch");
  if (x.field().is_prime_field()) {
    if (x.field().p <= n)
      fail(errc::field_too_small, "need p > n for the automorphism columns");
    return fit_finite(fam, n, x, v);
  }
  const auto s = support01(x);
  if (!s)
    fail(errc::unsupported_point,
         "closed-form fits cover basis vectors and probe shapes (0/1 coordinates)");
  if (s->empty()) // x = 0: every tuple sends it to 0
    return finish_sketches(fam, n, x, v, {Sketch{}});
  std::optional<std::vector<Sketch>> sks;
  switch (fam) {
    case Family::r0: sks = sketches_r0(n, *s, v); break;
    case Family::r1: sks = sketches_r1(n, *s, v); break;
    default: sks = sketches_r23(fam, n, *s, v); break;
  }
  if (!sks)
    fail(errc::unsupported_point,
         "closed-form fits cover basis vectors and probe shapes for this family");
  return finish_sketches(fam, n, x, v, std::move(*sks));
}

} // namespace leib
