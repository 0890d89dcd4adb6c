#include "leib/catalog.hpp"

namespace leib {

const char* family_name(Family f) {
  switch (f) {
    case Family::nf: return "nf";
    case Family::r0: return "r0";
    case Family::r1: return "r1";
    case Family::r2: return "r2";
    case Family::r3: return "r3";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "nf") return Family::nf;
  if (s == "r0") return Family::r0;
  if (s == "r1") return Family::r1;
  if (s == "r2") return Family::r2;
  if (s == "r3") return Family::r3;
  fail(errc::parse_error, "unknown family: " + s);
}

std::uint32_t family_min_n(Family fam) {
  switch (fam) {
    case Family::nf: return 1;
    case Family::r0: return 2;
    default: return 4;
  }
}

std::uint32_t family_dim(Family fam, std::uint32_t n) {
  switch (fam) {
    case Family::nf: return n;
    case Family::r0: return n + 1;
    default: return n + 2;
  }
}

namespace {

void validate(Family fam, std::uint32_t n, const FieldConfig& f) {
  if (n < family_min_n(fam))
    fail(errc::n_too_small, std::string(family_name(fam)) + " needs n >= " +
                                std::to_string(family_min_n(fam)));
  // p > n keeps every (j-i)! in the automorphism columns invertible.
  if (f.is_prime_field() && f.p <= n)
    fail(errc::field_too_small,
         "F_" + std::to_string(f.p) + " too small for n = " + std::to_string(n));
}

CatalogEntry finish(Family fam, std::uint32_t n, const FieldConfig& f,
                    std::vector<std::string> names, std::vector<TableEntry> entries,
                    std::vector<std::uint32_t> nilradical_idx,
                    std::vector<std::uint32_t> complement_idx,
                    std::map<std::string, std::string> roles) {
  Algebra alg(f, std::move(names), entries);
  auto rep = check_leibniz(alg);
  if (!rep.ok) fail(errc::internal, "catalog table violates the Leibniz identity");
  std::vector<Vec> nilgens, compgens;
  for (auto i : nilradical_idx) nilgens.push_back(Vec::basis(f, alg.dim(), i));
  for (auto i : complement_idx) compgens.push_back(Vec::basis(f, alg.dim(), i));
  return CatalogEntry{fam, n, std::move(alg), Subspace::span(f, family_dim(fam, n), nilgens),
                      Subspace::span(f, family_dim(fam, n), compgens), std::move(roles)};
}

} // namespace

CatalogEntry build_nf(std::uint32_t n, const FieldConfig& f) {
  validate(Family::nf, n, f);
  std::vector<std::string> names;
  std::map<std::string, std::string> roles;
  for (std::uint32_t i = 1; i <= n; ++i) {
    names.push_back("e_" + std::to_string(i));
    roles[names.back()] = "e_i";
  }
  std::vector<TableEntry> t;
  for (std::uint32_t i = 1; i + 1 <= n; ++i)
    t.push_back({i - 1, 0, i, Scalar::one(f)}); // [e_i, e_1] = e_{i+1}
  std::vector<std::uint32_t> nil(n);
  for (std::uint32_t i = 0; i < n; ++i) nil[i] = i;
  return finish(Family::nf, n, f, std::move(names), std::move(t), nil, {}, std::move(roles));
}

CatalogEntry build_r0(std::uint32_t n, const FieldConfig& f) {
  validate(Family::r0, n, f);
  // basis order e_0, e_1, ..., e_n
  std::vector<std::string> names;
  std::map<std::string, std::string> roles;
  for (std::uint32_t i = 0; i <= n; ++i) {
    names.push_back("e_" + std::to_string(i));
    roles[names.back()] = i == 0 ? "e_0" : "e_i";
  }
  std::vector<TableEntry> t;
  for (std::uint32_t i = 0; i + 1 <= n; ++i)
    t.push_back({i, 1, i + 1, Scalar::one(f)}); // [e_i, e_1] = e_{i+1}
  for (std::uint32_t i = 1; i <= n; ++i)
    t.push_back({i, 0, i, Scalar::from_int(-static_cast<std::int64_t>(i), f)}); // [e_i, e_0] = -i e_i
  std::vector<std::uint32_t> nil;
  for (std::uint32_t i = 1; i <= n; ++i) nil.push_back(i);
  return finish(Family::r0, n, f, std::move(names), std::move(t), nil, {0}, std::move(roles));
}

namespace {

/// Shared frame for r1/r2/r3: basis e_1..e_n, x, y (indices 0..n-1, n, n+1).
struct RFrame {
  std::vector<std::string> names;
  std::map<std::string, std::string> roles;
  std::uint32_t xi, yi; // indices of x and y
};

RFrame r_frame(std::uint32_t n) {
  RFrame fr;
  for (std::uint32_t i = 1; i <= n; ++i) {
    fr.names.push_back("e_" + std::to_string(i));
    fr.roles[fr.names.back()] = "e_i";
  }
  fr.names.push_back("x");
  fr.names.push_back("y");
  fr.roles["x"] = "x";
  fr.roles["y"] = "y";
  fr.xi = n;
  fr.yi = n + 1;
  return fr;
}

} // namespace

CatalogEntry build_r1(std::uint32_t n, const FieldConfig& f) {
  validate(Family::r1, n, f);
  auto fr = r_frame(n);
  const Scalar one = Scalar::one(f);
  std::vector<TableEntry> t;
  for (std::uint32_t i = 2; i + 1 <= n; ++i)
    t.push_back({i - 1, 0, i, one}); // [e_i, e_1] = e_{i+1}
  t.push_back({0, fr.xi, 0, one});   // [e_1, x] = e_1
  t.push_back({fr.xi, 0, 0, -one});  // [x, e_1] = -e_1
  for (std::uint32_t i = 2; i <= n; ++i)
    t.push_back({i - 1, fr.xi, i - 1, Scalar::from_int(static_cast<std::int64_t>(i) - 1, f)});
  for (std::uint32_t i = 2; i <= n; ++i)
    t.push_back({i - 1, fr.yi, i - 1, one}); // [e_i, y] = e_i
  std::vector<std::uint32_t> nil;
  for (std::uint32_t i = 0; i < n; ++i) nil.push_back(i);
  return finish(Family::r1, n, f, std::move(fr.names), std::move(t), nil, {fr.xi, fr.yi},
                std::move(fr.roles));
}

namespace {

/// r2 and r3 differ in a single entry: r2 also has [y, e_2] = -e_2.
CatalogEntry build_r2_or_r3(Family fam, std::uint32_t n, const FieldConfig& f) {
  validate(fam, n, f);
  auto fr = r_frame(n);
  const Scalar one = Scalar::one(f);
  std::vector<TableEntry> t;
  t.push_back({0, 0, 2, one}); // [e_1, e_1] = e_3
  for (std::uint32_t i = 3; i + 1 <= n; ++i)
    t.push_back({i - 1, 0, i, one}); // [e_i, e_1] = e_{i+1}
  t.push_back({0, fr.xi, 0, one});   // [e_1, x] = e_1
  t.push_back({fr.xi, 0, 0, -one});  // [x, e_1] = -e_1
  for (std::uint32_t i = 3; i <= n; ++i)
    t.push_back({i - 1, fr.xi, i - 1, Scalar::from_int(static_cast<std::int64_t>(i) - 1, f)});
  t.push_back({1, fr.yi, 1, one});   // [e_2, y] = e_2
  if (fam == Family::r2) t.push_back({fr.yi, 1, 1, -one}); // [y, e_2] = -e_2
  std::vector<std::uint32_t> nil;
  for (std::uint32_t i = 0; i < n; ++i) nil.push_back(i);
  return finish(fam, n, f, std::move(fr.names), std::move(t), nil, {fr.xi, fr.yi},
                std::move(fr.roles));
}

} // namespace

CatalogEntry build_r2(std::uint32_t n, const FieldConfig& f) {
  return build_r2_or_r3(Family::r2, n, f);
}

CatalogEntry build_r3(std::uint32_t n, const FieldConfig& f) {
  return build_r2_or_r3(Family::r3, n, f);
}

CatalogEntry build_family(Family fam, std::uint32_t n, const FieldConfig& f) {
  switch (fam) {
    case Family::nf: return build_nf(n, f);
    case Family::r0: return build_r0(n, f);
    case Family::r1: return build_r1(n, f);
    case Family::r2: return build_r2(n, f);
    case Family::r3: return build_r3(n, f);
  }
  fail(errc::internal, "unreachable");
}

} // namespace leib
