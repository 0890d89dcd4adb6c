#include "leib/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "leib/error.hpp"

namespace leib {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::parse_error, what); }

// Nonnegative integer regardless of the library's signed/unsigned storage
// (parsed files arrive unsigned, programmatic literals signed).
std::optional<std::uint64_t> json_u64(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v >= 0) return static_cast<std::uint64_t>(v);
  }
  return std::nullopt;
}

std::uint32_t get_u32(const Json& j, const char* key) {
  const auto v = j.contains(key) ? json_u64(j[key]) : std::nullopt;
  if (!v || *v > 0xffffffffull)
    bad(std::string("missing or non-integer \"") + key + "\"");
  return static_cast<std::uint32_t>(*v);
}

std::string get_str(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    bad(std::string("missing or non-string \"") + key + "\"");
  return j[key].get<std::string>();
}

Scalar scalar_from_json(const Json& j, const FieldConfig& f, const char* where) {
  if (!j.is_string()) bad(std::string(where) + ": scalar must be a string");
  try {
    return parse_scalar(j.get<std::string>(), f);
  } catch (const Error& e) {
    bad(std::string(where) + ": " + e.what());
  }
}

std::vector<std::uint32_t> coords_from_json(const Json& j, std::uint32_t d, std::uint32_t p,
                                            const char* where) {
  if (!j.is_array() || j.size() != d)
    bad(std::string(where) + ": expected an array of " + std::to_string(d) + " coordinates");
  std::vector<std::uint32_t> out(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    const auto v = json_u64(j[i]);
    if (!v || *v >= p)
      bad(std::string(where) + ": coordinate " + std::to_string(i) + " out of range");
    out[i] = static_cast<std::uint32_t>(*v);
  }
  return out;
}

} // namespace

Json field_to_json(const FieldConfig& f) {
  if (!f.is_prime_field()) return Json("Q");
  return Json{{"Fp", f.p}};
}

FieldConfig field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "Q") bad("unknown field \"" + j.get<std::string>() + "\"");
    return FieldConfig::rationals();
  }
  if (j.is_object() && j.contains("Fp")) {
    const auto p = json_u64(j["Fp"]);
    if (!p || *p > 0xffffffffull) bad("field: prime out of range");
    try {
      return FieldConfig::prime(static_cast<std::uint32_t>(*p));
    } catch (const Error& e) {
      bad(std::string("bad field: ") + e.what());
    }
  }
  bad("field must be \"Q\" or {\"Fp\": p}");
}

CatalogInfo catalog_info_for(Family fam, std::uint32_t n) {
  CatalogInfo info;
  info.family = fam;
  info.n = n;
  const std::uint32_t d = family_dim(fam, n);
  switch (fam) {
    case Family::nf: // the whole algebra is nilpotent
      for (std::uint32_t i = 0; i < d; ++i) info.nilradical.push_back(i);
      break;
    case Family::r0: // e_0 extends the null-filiform part e_1..e_n
      for (std::uint32_t i = 1; i < d; ++i) info.nilradical.push_back(i);
      info.complement.push_back(0);
      break;
    default: // filiform part e_1..e_n, complement {x, y}
      for (std::uint32_t i = 0; i + 2 < d; ++i) info.nilradical.push_back(i);
      info.complement.push_back(d - 2);
      info.complement.push_back(d - 1);
      break;
  }
  return info;
}

Json algebra_to_json(const Algebra& a, const std::optional<CatalogInfo>& catalog) {
  Json j;
  j["dim"] = a.dim();
  j["field"] = field_to_json(a.field());
  j["basis"] = a.basis_names();
  Json table = Json::array();
  for (const TableEntry& e : a.table())
    table.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", e.c.to_string()}});
  j["table"] = std::move(table);
  if (catalog) {
    j["catalog"] = Json{{"family", family_name(catalog->family)},
                        {"n", catalog->n},
                        {"nilradical", catalog->nilradical},
                        {"complement", catalog->complement}};
  }
  return j;
}

LoadedAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) bad("algebra: expected an object");
  const std::uint32_t dim = get_u32(j, "dim");
  const FieldConfig f = field_from_json(j.contains("field") ? j["field"] : Json());
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != dim)
      bad("algebra: \"basis\" must list one name per dimension");
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) bad("algebra: basis names must be strings");
      names.push_back(b.get<std::string>());
    }
  } else {
    for (std::uint32_t i = 0; i < dim; ++i) names.push_back("e_" + std::to_string(i + 1));
  }
  if (!j.contains("table") || !j["table"].is_array()) bad("algebra: missing \"table\" array");
  std::vector<TableEntry> entries;
  for (const auto& e : j["table"]) {
    if (!e.is_object()) bad("algebra: table entries must be objects");
    TableEntry te{get_u32(e, "i"), get_u32(e, "j"), get_u32(e, "k"),
                  scalar_from_json(e.contains("c") ? e["c"] : Json(), f, "table entry")};
    if (te.i >= dim || te.j >= dim || te.k >= dim) bad("algebra: table index out of range");
    entries.push_back(std::move(te));
  }

  LoadedAlgebra out{Algebra(f, std::move(names), entries), {}};
  if (j.contains("catalog")) {
    const Json& c = j["catalog"];
    CatalogInfo info;
    info.family = family_from_name(get_str(c, "family"));
    info.n = get_u32(c, "n");
    for (const char* key : {"nilradical", "complement"}) {
      if (!c.contains(key) || !c[key].is_array()) bad("algebra: catalog block missing index lists");
      auto& dst = std::string(key) == "nilradical" ? info.nilradical : info.complement;
      for (const auto& v : c[key]) {
        const auto idx = json_u64(v);
        if (!idx || *idx >= dim) bad("algebra: catalog index out of range");
        dst.push_back(static_cast<std::uint32_t>(*idx));
      }
    }
    out.catalog = std::move(info);
  }
  return out;
}

Json linear_map_to_json(const LinearMap& m) {
  Json j;
  j["dim"] = m.rows();
  j["field"] = field_to_json(m.field());
  Json cols = Json::array();
  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    Json col = Json::array();
    for (std::uint32_t r = 0; r < m.rows(); ++r) col.push_back(m.at(r, c).to_string());
    cols.push_back(std::move(col));
  }
  j["cols"] = std::move(cols);
  return j;
}

LinearMap linear_map_from_json(const Json& j, const std::optional<FieldConfig>& fallback) {
  if (!j.is_object()) bad("map: expected an object");
  const std::uint32_t dim = get_u32(j, "dim");
  FieldConfig f = FieldConfig::rationals();
  if (j.contains("field"))
    f = field_from_json(j["field"]);
  else if (fallback)
    f = *fallback;
  else
    bad("map: no \"field\" key and no field from context");
  if (!j.contains("cols") || !j["cols"].is_array() || j["cols"].size() != dim)
    bad("map: \"cols\" must list one column per dimension");
  Matrix m(f, dim);
  for (std::uint32_t c = 0; c < dim; ++c) {
    const Json& col = j["cols"][c];
    if (!col.is_array() || col.size() != dim) bad("map: column length mismatch");
    for (std::uint32_t r = 0; r < dim; ++r)
      m.at(r, c) = scalar_from_json(col[r], f, "map entry");
  }
  return m;
}

Json map_set_to_json(const std::vector<LinearMap>& maps, const FieldConfig& f) {
  Json j;
  j["count"] = maps.size();
  j["field"] = field_to_json(f);
  j["dim"] = maps.empty() ? 0 : maps.front().rows();
  Json arr = Json::array();
  for (const LinearMap& m : maps) arr.push_back(linear_map_to_json(m));
  j["maps"] = std::move(arr);
  return j;
}

std::vector<LinearMap> map_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("maps") || !j["maps"].is_array())
    bad("map set: missing \"maps\" array");
  std::optional<FieldConfig> f;
  if (j.contains("field")) f = field_from_json(j["field"]);
  std::vector<LinearMap> out;
  for (const auto& m : j["maps"]) out.push_back(linear_map_from_json(m, f));
  if (j.contains("count") && json_u64(j["count"]) != std::optional<std::uint64_t>{out.size()})
    bad("map set: \"count\" does not match the map list");
  return out;
}

Json params_to_json(const AutParams& p) {
  Json j;
  j["alpha"] = p.alpha.to_string();
  j["beta"] = p.beta.to_string();
  const std::uint32_t k = family_param_count(p.family);
  if (k >= 3) j["gamma"] = p.gamma.to_string();
  if (k >= 4) j["delta"] = p.delta.to_string();
  return j;
}

AutParams params_from_json(const Json& j, Family fam, const FieldConfig& f) {
  if (!j.is_object()) bad("params: expected an object");
  auto get = [&](const char* key) {
    if (!j.contains(key)) bad(std::string("params: missing \"") + key + "\"");
    return scalar_from_json(j[key], f, key);
  };
  switch (fam) {
    case Family::r0: return AutParams::r0(get("alpha"), get("beta"));
    case Family::r1: return AutParams::r1(get("alpha"), get("beta"), get("gamma"));
    case Family::r2: return AutParams::r2(get("alpha"), get("beta"), get("gamma"), get("delta"));
    case Family::r3: return AutParams::r3(get("alpha"), get("beta"), get("gamma"));
    default: fail(errc::invalid_params, "the null-filiform family has no parametrized maps");
  }
}

Json function_table_to_json(const FunctionTable& t) {
  Json j;
  j["p"] = t.p;
  j["dim"] = t.d;
  Json entries = Json::array();
  for (std::uint64_t x = 0; x < t.npoints(); ++x)
    entries.push_back(Json::array({fp_decode(t.p, t.d, x), fp_decode(t.p, t.d, t.img[x])}));
  j["entries"] = std::move(entries);
  return j;
}

FunctionTable function_table_from_json(const Json& j) {
  if (!j.is_object()) bad("table: expected an object");
  FunctionTable t;
  t.p = get_u32(j, "p");
  t.d = get_u32(j, "dim");
  try {
    FieldConfig::prime(t.p);
  } catch (const Error& e) {
    bad(std::string("table: ") + e.what());
  }
  const std::uint64_t npts = fp_pow(t.p, t.d);
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != npts)
    bad("table: \"entries\" must list all " + std::to_string(npts) +
        " points in lexicographic order");
  t.img.resize(npts);
  for (std::uint64_t x = 0; x < npts; ++x) {
    const Json& e = j["entries"][x];
    if (!e.is_array() || e.size() != 2) bad("table: entries must be [point, image] pairs");
    const auto pt = coords_from_json(e[0], t.d, t.p, "table point");
    if (fp_encode(t.p, pt) != x) bad("table: point " + std::to_string(x) + " out of order");
    t.img[x] = fp_encode(t.p, coords_from_json(e[1], t.d, t.p, "table image"));
  }
  return t;
}

Json patchwork_spec_to_json(const PatchworkSpec& s) {
  Json j;
  j["family"] = family_name(s.family);
  j["n"] = s.n;
  j["p"] = s.p;
  j["default"] = params_to_json(s.def);
  Json ov = Json::array();
  for (const auto& [x, params] : s.overrides)
    ov.push_back(Json{{"x", x}, {"params", params_to_json(params)}});
  j["overrides"] = std::move(ov);
  return j;
}

PatchworkSpec patchwork_spec_from_json(const Json& j) {
  if (!j.is_object()) bad("patchwork: expected an object");
  PatchworkSpec s;
  s.family = family_from_name(get_str(j, "family"));
  s.n = get_u32(j, "n");
  s.p = get_u32(j, "p");
  FieldConfig f = FieldConfig::rationals();
  try {
    f = FieldConfig::prime(s.p);
  } catch (const Error& e) {
    bad(std::string("patchwork: ") + e.what());
  }
  if (!j.contains("default")) bad("patchwork: missing \"default\" params");
  s.def = params_from_json(j["default"], s.family, f);
  const std::uint32_t d = family_dim(s.family, s.n);
  if (j.contains("overrides")) {
    if (!j["overrides"].is_array()) bad("patchwork: \"overrides\" must be an array");
    for (const auto& o : j["overrides"]) {
      if (!o.is_object() || !o.contains("x") || !o.contains("params"))
        bad("patchwork: overrides need \"x\" and \"params\"");
      s.overrides.emplace_back(coords_from_json(o["x"], d, s.p, "override point"),
                               params_from_json(o["params"], s.family, f));
    }
  }
  return s;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bad(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) bad("failed while writing " + path);
}

std::string fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ull;
    }
  }
  std::ostringstream os;
  os << "0x" << std::hex << h;
  return os.str();
}

} // namespace leib
