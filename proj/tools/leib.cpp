#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "leib/acceptance.hpp"
#include "leib/aut.hpp"
#include "leib/fp_kernel.hpp"
#include "leib/json_io.hpp"
#include "leib/locality.hpp"
#include "leib/parallel.hpp"
#include "leib/series.hpp"
#include "leib/twolocal.hpp"

using namespace leib;

namespace {

constexpr const char* kArtifactVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 0x1e1b0520;

using Clock = std::chrono::steady_clock;

FieldConfig parse_field_arg(const std::string& s) {
  if (s == "Q" || s == "q") return FieldConfig::rationals();
  if (s.rfind("fp:", 0) == 0 || s.rfind("Fp:", 0) == 0) {
    try {
      return FieldConfig::prime(static_cast<std::uint32_t>(std::stoul(s.substr(3))));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad field argument \"" + s + "\"");
    }
  }
  fail(errc::parse_error, "field must be Q or fp:P, got \"" + s + "\"");
}

/// --params a=...,b=...[,g=...[,d=...]] with scalars in canonical text form.
AutParams parse_params_arg(const std::string& s, Family fam, const FieldConfig& f) {
  std::map<std::string, Scalar> got;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const std::size_t eq = piece.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(errc::parse_error, "--params pieces look like a=1,b=2/3; got \"" + piece + "\"");
    const std::string key = piece.substr(0, eq);
    if (key != "a" && key != "b" && key != "g" && key != "d")
      fail(errc::parse_error, "unknown parameter \"" + key + "\" (use a, b, g, d)");
    got.emplace(key, parse_scalar(piece.substr(eq + 1), f));
    pos = comma == std::string::npos ? s.size() : comma + 1;
  }
  const Scalar zero = Scalar::zero(f);
  auto take = [&](const char* key, bool required) {
    auto it = got.find(key);
    if (it == got.end()) {
      if (required)
        fail(errc::parse_error, std::string("--params is missing \"") + key + "\"");
      return zero;
    }
    return it->second;
  };
  switch (fam) {
    case Family::r0: return AutParams::r0(take("a", true), take("b", true));
    case Family::r1: return AutParams::r1(take("a", true), take("b", true), take("g", true));
    case Family::r2:
      return AutParams::r2(take("a", true), take("b", true), take("g", true), take("d", false));
    case Family::r3: return AutParams::r3(take("a", true), take("b", true), take("g", true));
    default: fail(errc::invalid_params, "the nf family has no parametrized automorphisms");
  }
}

Scalar scalar_to_fp(const Scalar& s, const FieldConfig& fp) {
  if (s.field().is_prime_field()) {
    if (s.field() != fp) fail(errc::field_mismatch, "map and --p disagree");
    return s;
  }
  const Rational& q = s.rational();
  const BigInt p = fp.p;
  BigInt num = boost::multiprecision::numerator(q) % p;
  BigInt den = boost::multiprecision::denominator(q) % p;
  if (num < 0) num += p;
  if (den == 0)
    fail(errc::parse_error, "denominator of " + s.to_string() + " is not invertible mod " +
                                std::to_string(fp.p));
  return Scalar::from_residue(num.convert_to<std::uint64_t>(), fp) /
         Scalar::from_residue(den.convert_to<std::uint64_t>(), fp);
}

Algebra algebra_to_fp(const Algebra& a, const FieldConfig& fp) {
  if (a.field().is_prime_field()) {
    if (a.field() != fp) fail(errc::field_mismatch, "algebra and --p disagree");
    return a;
  }
  std::vector<TableEntry> entries;
  for (TableEntry e : a.table()) {
    e.c = scalar_to_fp(e.c, fp);
    entries.push_back(std::move(e));
  }
  return Algebra(fp, a.basis_names(), entries);
}

LinearMap map_to_fp(const LinearMap& m, const FieldConfig& fp) {
  if (m.field().is_prime_field()) {
    if (m.field() != fp) fail(errc::field_mismatch, "map and --p disagree");
    return m;
  }
  Matrix out(fp, m.rows(), m.cols());
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j) out.at(i, j) = scalar_to_fp(m.at(i, j), fp);
  return out;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (std::uint32_t i = 0; i < v.dim(); ++i) a.push_back(v[i].to_string());
  return a;
}

Json report_base(const std::string& command) {
  Json j;
  j["artifact_version"] = kArtifactVersion;
  j["command"] = command;
  j["inputs"] = Json::object();
  return j;
}

void add_input(Json& rep, const std::string& key, const std::string& path) {
  rep["inputs"][key] = Json{{"path", path}, {"fnv1a", fnv1a_file(path)}};
}

int emit_report(Json& rep, const std::string& out_path, Clock::time_point t0, int exit_code) {
  rep["timings_ms"] =
      Json{{"total",
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count()}};
  rep["exit_code"] = exit_code;
  if (out_path.empty())
    std::cout << rep.dump(2) << "\n";
  else
    save_json_file(out_path, rep);
  return exit_code;
}

// ---- subcommand bodies ----------------------------------------------------

int run_build(const std::string& fam_str, std::uint32_t n, const std::string& field_str,
              const std::string& out, Clock::time_point t0) {
  const Family fam = family_from_name(fam_str);
  const FieldConfig f = parse_field_arg(field_str);
  CatalogEntry e = build_family(fam, n, f);
  save_json_file(out, algebra_to_json(e.algebra, catalog_info_for(fam, n)));
  Json rep = report_base("build");
  rep["verdict"] = Json{{"family", family_name(fam)},
                        {"n", n},
                        {"field", field_to_json(f)},
                        {"dim", e.algebra.dim()},
                        {"leibniz", "ok"},
                        {"written", out}};
  return emit_report(rep, "", t0, 0);
}

int run_check_leibniz(const std::string& algebra_path, const std::string& out,
                      Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  Json rep = report_base("check leibniz");
  add_input(rep, "algebra", algebra_path);
  const LeibnizReport r = check_leibniz(la.algebra);
  rep["verdict"] = Json{{"ok", r.ok}};
  int code = 0;
  if (!r.ok) {
    code = 1;
    const LeibnizViolation& v = *r.violation;
    rep["witness"] = Json{{"i", v.i},          {"j", v.j},
                          {"k", v.k},          {"lhs", vec_json(v.lhs)},
                          {"rhs", vec_json(v.rhs)}};
  }
  return emit_report(rep, out, t0, code);
}

Json series_json(const SeriesReport& r) {
  return Json{{"kind", r.kind == SeriesKind::derived ? "derived" : "lower_central"},
              {"dims", r.dims},
              {"stabilized_at", r.stabilized_at},
              {"terminates_at_zero", r.terminates_at_zero}};
}

int run_check_series(const std::string& algebra_path, const std::string& out,
                     Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  Json rep = report_base("check series");
  add_input(rep, "algebra", algebra_path);
  rep["verdict"] = Json{{"derived", series_json(derived_series(la.algebra))},
                        {"lower_central", series_json(lower_central_series(la.algebra))}};
  return emit_report(rep, out, t0, 0);
}

int run_check_predicates(const std::string& algebra_path, const std::string& out,
                         Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  Json rep = report_base("check predicates");
  add_input(rep, "algebra", algebra_path);
  const IndexedPredicate sol = is_solvable(la.algebra);
  const IndexedPredicate nil = is_nilpotent(la.algebra);
  Json v;
  v["solvable"] = Json{{"holds", sol.holds}};
  if (sol.holds) v["solvable"]["index"] = sol.index;
  v["nilpotent"] = Json{{"holds", nil.holds}};
  if (nil.holds) v["nilpotent"]["index"] = nil.index;
  v["null_filiform"] = is_null_filiform(la.algebra);
  v["filiform"] = is_filiform(la.algebra);
  rep["verdict"] = std::move(v);
  return emit_report(rep, out, t0, 0);
}

int run_aut_make(const std::string& fam_str, std::uint32_t n, const std::string& field_str,
                 const std::string& params_str, const std::string& out, Clock::time_point t0) {
  const Family fam = family_from_name(fam_str);
  const FieldConfig f = parse_field_arg(field_str);
  const AutParams params = parse_params_arg(params_str, fam, f);
  const LinearMap m = make_automorphism(fam, n, params);
  save_json_file(out, linear_map_to_json(m));
  Json rep = report_base("aut make");
  rep["verdict"] = Json{{"family", family_name(fam)},
                        {"n", n},
                        {"params", params_to_json(params)},
                        {"dim", m.rows()},
                        {"written", out}};
  return emit_report(rep, "", t0, 0);
}

int run_aut_verify(const std::string& algebra_path, const std::string& map_path,
                   const std::string& out, Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  const LinearMap m = linear_map_from_json(load_json_file(map_path), la.algebra.field());
  Json rep = report_base("aut verify");
  add_input(rep, "algebra", algebra_path);
  add_input(rep, "map", map_path);
  const AutVerdict v = is_automorphism(la.algebra, m);
  int code = v.ok() ? 0 : 1;
  switch (v.kind) {
    case AutVerdict::Kind::yes: rep["verdict"] = Json{{"automorphism", true}}; break;
    case AutVerdict::Kind::not_bijective:
      rep["verdict"] = Json{{"automorphism", false}, {"reason", "not_bijective"}};
      break;
    case AutVerdict::Kind::not_homomorphic:
      rep["verdict"] = Json{{"automorphism", false}, {"reason", "not_homomorphic"}};
      rep["witness"] = Json{{"i", v.i}, {"j", v.j}};
      break;
  }
  return emit_report(rep, out, t0, code);
}

int run_aut_enumerate(const std::string& algebra_path, const std::string& mode,
                      const std::string& out, std::uint32_t workers, Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  Json rep = report_base("aut enumerate");
  add_input(rep, "algebra", algebra_path);
  std::vector<LinearMap> maps;
  if (mode == "brute") {
    for (const FpMat& m : enumerate_aut_bruteforce(la.algebra, workers))
      maps.push_back(m.to_linear_map());
  } else if (mode == "param") {
    if (!la.catalog)
      fail(errc::parse_error, "param mode needs an algebra with a catalog block");
    maps = enumerate_aut_parametrized(la.catalog->family, la.catalog->n, la.algebra.field());
  } else {
    fail(errc::parse_error, "--mode must be brute or param");
  }
  save_json_file(out, map_set_to_json(maps, la.algebra.field()));
  rep["verdict"] = Json{{"mode", mode}, {"count", maps.size()}, {"written", out}};
  rep["workers"] = resolve_workers(workers);
  return emit_report(rep, "", t0, 0);
}

int run_local_check(const std::string& algebra_path, const std::string& map_path,
                    const std::string& mode, std::uint32_t p_opt, const std::string& out,
                    std::uint32_t workers, Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  LinearMap m = linear_map_from_json(load_json_file(map_path), la.algebra.field());
  if (p_opt != 0) {
    const FieldConfig fp = FieldConfig::prime(p_opt);
    la.algebra = algebra_to_fp(la.algebra, fp);
    m = map_to_fp(m, fp);
  }
  Json rep = report_base("local check");
  add_input(rep, "algebra", algebra_path);
  add_input(rep, "map", map_path);
  rep["mode"] = mode;
  int code = 0;
  if (mode == "probes") {
    if (!la.catalog) fail(errc::parse_error, "probe mode needs an algebra with a catalog block");
    const ProbeVerdict v = verify_local_via_probes(la.catalog->family, la.catalog->n, m);
    code = v.ok() ? 0 : 1;
    Json jv;
    switch (v.kind) {
      case ProbeVerdict::Kind::automorphism:
        jv = Json{{"verdict", "automorphism"}, {"params", params_to_json(v.params)}};
        break;
      case ProbeVerdict::Kind::column_orbit_failure:
        jv = Json{{"verdict", "column_orbit_failure"}, {"column", v.column}};
        break;
      case ProbeVerdict::Kind::probe_failure:
        jv = Json{{"verdict", "probe_failure"},
                  {"probe_index", v.probe_index},
                  {"probe", v.probe_label}};
        break;
      case ProbeVerdict::Kind::collapse_failure:
        jv = Json{{"verdict", "collapse_failure"},
                  {"params", params_to_json(v.params)},
                  {"mismatch_row", v.mismatch_row},
                  {"mismatch_col", v.mismatch_col}};
        break;
    }
    rep["verdict"] = std::move(jv);
  } else if (mode == "exhaustive") {
    if (!la.algebra.field().is_prime_field())
      fail(errc::parse_error, "exhaustive mode needs a prime field (or --p to reduce)");
    std::vector<FpMat> auts = enumerate_aut_bruteforce(la.algebra, workers);
    const FpAlgebra fa = FpAlgebra::from(la.algebra);
    const PointWitness w =
        is_local_map_exhaustive(fa.p, fa.d, auts, FpMat::from_linear_map(m), workers);
    code = w.ok ? 0 : 1;
    rep["verdict"] = Json{{"local", w.ok}, {"aut_count", auts.size()}};
    if (!w.ok) rep["witness"] = Json{{"point", w.point}};
    rep["workers"] = resolve_workers(workers);
  } else {
    fail(errc::parse_error, "--mode must be probes or exhaustive");
  }
  return emit_report(rep, out, t0, code);
}

int run_twolocal_check(const std::string& algebra_path, const std::string& table_path,
                       const std::string& out, std::uint32_t workers, Clock::time_point t0) {
  LoadedAlgebra la = algebra_from_json(load_json_file(algebra_path));
  const FunctionTable tab = function_table_from_json(load_json_file(table_path));
  if (!la.algebra.field().is_prime_field() || la.algebra.field().p != tab.p)
    fail(errc::field_mismatch, "table and algebra fields disagree");
  if (la.algebra.dim() != tab.d) fail(errc::dimension_mismatch, "table and algebra dimensions");
  Json rep = report_base("twolocal check");
  add_input(rep, "algebra", algebra_path);
  add_input(rep, "table", table_path);

  std::vector<FpMat> auts;
  if (la.catalog && la.catalog->family != Family::nf) {
    for (const LinearMap& mm :
         enumerate_aut_parametrized(la.catalog->family, la.catalog->n, la.algebra.field()))
      auts.push_back(FpMat::from_linear_map(mm));
  } else {
    auts = enumerate_aut_bruteforce(la.algebra, workers);
  }
  const TwoLocalVerdict v = is_2local(tab, auts, workers);
  const int code = v.ok ? 0 : 1;
  rep["verdict"] = Json{{"two_local", v.ok}, {"aut_count", auts.size()}};
  if (!v.ok) rep["witness"] = Json{{"x", v.x}, {"y", v.y}};

  if (la.catalog && la.catalog->family != Family::nf) {
    const CollapseOutcome c = twolocal_collapse(la.catalog->family, la.catalog->n, tab);
    Json jc;
    switch (c.kind) {
      case CollapseOutcome::Kind::automorphism:
        jc = Json{{"verdict", "automorphism"}, {"params", params_to_json(c.params)}};
        break;
      case CollapseOutcome::Kind::anchor_failure:
        jc = Json{{"verdict", "anchor_failure"}, {"x", c.x}, {"y", c.y}};
        break;
      case CollapseOutcome::Kind::inconclusive:
        jc = Json{{"verdict", "inconclusive"}, {"detail", c.detail}};
        break;
    }
    rep["collapse"] = std::move(jc);
  }
  rep["workers"] = resolve_workers(workers);
  return emit_report(rep, out, t0, code);
}

int run_twolocal_patchwork(const std::string& spec_path, const std::string& out,
                           Clock::time_point t0) {
  const PatchworkSpec spec = patchwork_spec_from_json(load_json_file(spec_path));
  const FunctionTable tab = make_patchwork(spec);
  save_json_file(out, function_table_to_json(tab));
  Json rep = report_base("twolocal patchwork");
  add_input(rep, "spec", spec_path);
  rep["verdict"] = Json{{"points", tab.npoints()},
                        {"overrides", spec.overrides.size()},
                        {"written", out}};
  return emit_report(rep, "", t0, 0);
}

int run_acceptance(const std::string& suite, std::uint64_t seed, std::uint32_t workers,
                   const std::string& out, Clock::time_point t0) {
  if (suite != "desk") fail(errc::parse_error, "the only acceptance suite is \"desk\"");
  const AcceptanceReport rep = leib::run_acceptance(seed, workers);
  std::printf("acceptance suite: seed=%llu workers=%u\n",
              static_cast<unsigned long long>(rep.seed), rep.workers);
  for (const CriterionResult& r : rep.results)
    std::printf("[%s] %d %s (%lld ms, budget %lld ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), static_cast<long long>(r.ms),
                static_cast<long long>(r.budget_ms), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
  const bool all = rep.all_pass();
  std::printf("acceptance: %s\n", all ? "all 9 criteria passed" : "FAILED");
  if (!out.empty()) {
    Json j = report_base("acceptance");
    j["seed"] = rep.seed;
    j["workers"] = rep.workers;
    Json arr = Json::array();
    for (const CriterionResult& r : rep.results)
      arr.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"ms", r.ms},
                         {"budget_ms", r.budget_ms}});
    j["criteria"] = std::move(arr);
    j["all_pass"] = all;
    return emit_report(j, out, t0, all ? 0 : 1);
  }
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  const auto t0 = Clock::now();
  CLI::App app{"exact-arithmetic toolkit for solvable Leibniz algebras and their local and "
               "2-local automorphisms"};
  app.require_subcommand(1);
  std::uint32_t workers = 0; // 0 = LEIBNIZ_WORKERS or hardware
  app.add_option("--workers", workers, "worker threads (default: LEIBNIZ_WORKERS or hardware)");

  // build
  auto* cb = app.add_subcommand("build", "construct a catalog algebra and write it as JSON");
  std::string b_family, b_field = "Q", b_out;
  std::uint32_t b_n = 0;
  cb->add_option("family", b_family, "nf | r0 | r1 | r2 | r3")->required();
  cb->add_option("--n", b_n, "family index n")->required();
  cb->add_option("--field", b_field, "Q or fp:P (default Q)");
  cb->add_option("--out", b_out, "output path")->required();

  // check
  auto* cc = app.add_subcommand("check", "identity, series and predicate reports");
  cc->require_subcommand(1);
  std::string c_algebra, c_out;
  auto* ccl = cc->add_subcommand("leibniz", "decide the Leibniz identity");
  auto* ccs = cc->add_subcommand("series", "derived and lower central series");
  auto* ccp = cc->add_subcommand("predicates", "solvable/nilpotent/filiform predicates");
  for (auto* sub : {ccl, ccs, ccp}) {
    sub->add_option("--algebra", c_algebra, "algebra JSON")->required();
    sub->add_option("--out", c_out, "write the report here instead of stdout");
  }

  // aut
  auto* ca = app.add_subcommand("aut", "closed-form automorphisms");
  ca->require_subcommand(1);
  auto* cam = ca->add_subcommand("make", "build one parametrized automorphism");
  std::string am_family, am_field = "Q", am_params, am_out;
  std::uint32_t am_n = 0;
  cam->add_option("--family", am_family, "r0 | r1 | r2 | r3")->required();
  cam->add_option("--n", am_n, "family index n")->required();
  cam->add_option("--field", am_field, "Q or fp:P (default Q)");
  cam->add_option("--params", am_params, "a=...,b=...[,g=...[,d=...]]")->required();
  cam->add_option("--out", am_out, "output path for the map JSON")->required();

  auto* cav = ca->add_subcommand("verify", "is_automorphism on an explicit map");
  std::string av_algebra, av_map, av_out;
  cav->add_option("--algebra", av_algebra, "algebra JSON")->required();
  cav->add_option("--map", av_map, "map JSON")->required();
  cav->add_option("--out", av_out, "write the report here instead of stdout");

  auto* cae = ca->add_subcommand("enumerate", "enumerate the automorphism set over F_p");
  std::string ae_algebra, ae_mode = "brute", ae_out;
  cae->add_option("--algebra", ae_algebra, "algebra JSON")->required();
  cae->add_option("--mode", ae_mode, "brute | param");
  cae->add_option("--out", ae_out, "output path for the map set")->required();

  // local
  auto* cl = app.add_subcommand("local", "local-automorphism checks");
  cl->require_subcommand(1);
  auto* clc = cl->add_subcommand("check", "probe-collapse or exhaustive local check");
  std::string lc_algebra, lc_map, lc_mode, lc_out;
  std::uint32_t lc_p = 0;
  clc->add_option("--algebra", lc_algebra, "algebra JSON")->required();
  clc->add_option("--map", lc_map, "map JSON")->required();
  clc->add_option("--mode", lc_mode, "probes | exhaustive")->required();
  clc->add_option("--p", lc_p, "reduce a rational algebra and map mod p first");
  clc->add_option("--out", lc_out, "write the report here instead of stdout");

  // twolocal
  auto* ct = app.add_subcommand("twolocal", "2-local checks on function tables");
  ct->require_subcommand(1);
  auto* ctc = ct->add_subcommand("check", "pair condition (and collapse, for catalog algebras)");
  std::string tc_algebra, tc_table, tc_out;
  ctc->add_option("--algebra", tc_algebra, "algebra JSON")->required();
  ctc->add_option("--table", tc_table, "function table JSON")->required();
  ctc->add_option("--out", tc_out, "write the report here instead of stdout");

  auto* ctp = ct->add_subcommand("patchwork", "assemble a patchwork table from a spec");
  std::string tp_spec, tp_out;
  ctp->add_option("--spec", tp_spec, "patchwork spec JSON")->required();
  ctp->add_option("--out", tp_out, "output path for the table")->required();

  // acceptance
  auto* cacc = app.add_subcommand("acceptance", "run the acceptance battery");
  std::string acc_suite = "desk", acc_out;
  std::uint64_t acc_seed = kDefaultSeed;
  cacc->add_option("--suite", acc_suite, "suite name (desk)");
  cacc->add_option("--seed", acc_seed, "seed for the randomized criteria (default printed)");
  cacc->add_option("--out", acc_out, "also write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cb->parsed()) return run_build(b_family, b_n, b_field, b_out, t0);
    if (ccl->parsed()) return run_check_leibniz(c_algebra, c_out, t0);
    if (ccs->parsed()) return run_check_series(c_algebra, c_out, t0);
    if (ccp->parsed()) return run_check_predicates(c_algebra, c_out, t0);
    if (cam->parsed()) return run_aut_make(am_family, am_n, am_field, am_params, am_out, t0);
    if (cav->parsed()) return run_aut_verify(av_algebra, av_map, av_out, t0);
    if (cae->parsed()) return run_aut_enumerate(ae_algebra, ae_mode, ae_out, workers, t0);
    if (clc->parsed())
      return run_local_check(lc_algebra, lc_map, lc_mode, lc_p, lc_out, workers, t0);
    if (ctc->parsed()) return run_twolocal_check(tc_algebra, tc_table, tc_out, workers, t0);
    if (ctp->parsed()) return run_twolocal_patchwork(tp_spec, tp_out, t0);
    if (cacc->parsed()) return run_acceptance(acc_suite, acc_seed, workers, acc_out, t0);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
