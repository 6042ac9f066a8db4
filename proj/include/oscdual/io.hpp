#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "oscdual/bryant.hpp"
#include "oscdual/osculation.hpp"

namespace oscdual::io {

using json = nlohmann::json;

json read_json_file(const std::filesystem::path& path);

/// {"params": [...], "coords": [...], "ambient_dim": N}; ambient_dim is optional on input.
json to_json(const ParamVariety& x);
ParamVariety variety_from_json(const json& j);

/// Square array of rational strings (integers are accepted too).
json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);
ProjMap map_from_json(const json& j);

/// {"n": n, "matrix": 2n x 2n array}. Rejects non-antisymmetric input.
json to_json(const SkewForm& b);
SkewForm form_from_json(const json& j);

json to_json(const PolyVector& v);
json to_json(const RationalVector& v);
json to_json(const ChartOneForm& f);
json to_json(const GenericityReport& r);
json to_json(const SelfDualReport& r);

/// Comma-separated polynomial list, e.g. "1 + t^2, 1 - t^2, 2*t".
PolyVector parse_poly_list(const std::string& text, const std::vector<std::string>& variables = {});

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// OSCDUAL_MAX_DEGREE, default 64.
int max_degree_cap();
/// Throws std::invalid_argument when any coordinate exceeds the cap.
void check_degree_cap(const ParamVariety& x);

}  // namespace oscdual::io
