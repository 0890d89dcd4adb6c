#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "leib/twolocal.hpp"

namespace leib {

using Json = nlohmann::json;

// Field: "Q" or {"Fp": p}.
Json field_to_json(const FieldConfig& f);
FieldConfig field_from_json(const Json& j);

/// The catalog block a `build` run attaches next to the raw table: which
/// family/index produced the algebra and where the nilradical and its
/// complement sit in the basis.
struct CatalogInfo {
  Family family = Family::nf;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> nilradical;
  std::vector<std::uint32_t> complement;
};

CatalogInfo catalog_info_for(Family fam, std::uint32_t n);

// Algebra: {"dim", "field", "basis", "table": [{"i","j","k","c"}...]},
// zero entries omitted, scalars in canonical text form.  `catalog` adds the
// provenance block.
Json algebra_to_json(const Algebra& a, const std::optional<CatalogInfo>& catalog = {});

struct LoadedAlgebra {
  Algebra algebra;
  std::optional<CatalogInfo> catalog;
};
LoadedAlgebra algebra_from_json(const Json& j);

// LinearMap: {"dim", "cols": [[col 0 entries...], ...]}.  Writing adds a
// "field" key; reading honours it when present, else uses `fallback`.
Json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const Json& j, const std::optional<FieldConfig>& fallback = {});

// Map set: {"count", "field", "dim", "maps": [...]}, sorted by matrix key.
Json map_set_to_json(const std::vector<LinearMap>& maps, const FieldConfig& f);
std::vector<LinearMap> map_set_from_json(const Json& j);

// AutParams: {"alpha": ..., ...} with only the family's parameters present.
Json params_to_json(const AutParams& p);
AutParams params_from_json(const Json& j, Family fam, const FieldConfig& f);

// FunctionTable: {"p", "dim", "entries": [[[x...],[f(x)...]]...]} listing all
// p^dim points in lexicographic order.
Json function_table_to_json(const FunctionTable& t);
FunctionTable function_table_from_json(const Json& j);

// PatchworkSpec: {"family", "n", "p", "default": params,
//                 "overrides": [{"x": [...], "params": {...}}...]}.
Json patchwork_spec_to_json(const PatchworkSpec& s);
PatchworkSpec patchwork_spec_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

/// 64-bit FNV-1a over the raw file bytes, as "0x..."; reports identify their
/// inputs by this.
std::string fnv1a_file(const std::string& path);

} // namespace leib
