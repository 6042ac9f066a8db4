#include "oscdual/io.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace oscdual::io {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

json to_json(const PolyVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

json to_json(const ParamVariety& x) {
  return {{"params", x.params()}, {"coords", to_json(x.coords())}, {"ambient_dim", x.ambient_dim()}};
}

ParamVariety variety_from_json(const json& j) {
  if (!j.is_object() || !j.contains("params") || !j.contains("coords"))
    throw std::invalid_argument("variety needs 'params' and 'coords'");
  try {
    const auto params = j.at("params").get<std::vector<std::string>>();
    PolyVector coords;
    for (const auto& c : j.at("coords")) coords.push_back(MultiPoly::parse(c.get<std::string>(), params));
    if (j.contains("ambient_dim") && j.at("ambient_dim").get<std::size_t>() + 1 != coords.size())
      throw std::invalid_argument("ambient_dim does not match the number of coordinates");
    return ParamVariety(params, coords);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed variety: ") + e.what());
  }
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    RationalVector r;
    for (const auto& e : row) {
      if (e.is_number_integer())
        r.push_back(Rational(e.get<long>()));
      else if (e.is_string())
        r.push_back(Rational::parse(e.get<std::string>()));
      else
        throw std::invalid_argument("matrix entries must be rational strings");
    }
    m.push_back(std::move(r));
  }
  return m;
}

ProjMap map_from_json(const json& j) { return ProjMap(matrix_from_json(j.is_object() ? j.at("matrix") : j)); }

json to_json(const SkewForm& b) { return {{"n", b.n()}, {"matrix", to_json(b.matrix())}}; }

SkewForm form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix"))
    throw std::invalid_argument("skew form needs 'n' and 'matrix'");
  SkewForm b(matrix_from_json(j.at("matrix")));
  if (!j.at("n").is_number_integer() || j.at("n").get<long>() != static_cast<long>(b.n()))
    throw std::invalid_argument("'n' does not match the matrix size");
  return b;
}

json to_json(const ChartOneForm& f) {
  return {{"chart", f.chart}, {"coordinates", f.coordinates}, {"coeffs", to_json(f.coeffs)}, {"text", f.to_string()}};
}

json to_json(const GenericityReport& r) {
  json hs = json::array();
  for (const auto& h : r.hypotheses)
    hs.push_back({{"index", h.index}, {"statement", h.statement}, {"pass", h.pass}, {"witness", h.witness}});
  return {{"lemma", std::string(1, r.lemma)}, {"pass", r.pass()}, {"hypotheses", hs}};
}

json to_json(const SelfDualReport& r) {
  return {{"legendrian", r.legendrian},       {"osc2_generic_dim", r.osc2_generic_dim},
          {"in_hyperplane", r.in_hyperplane}, {"selfdual", r.selfdual},
          {"status", to_string(r.status)},    {"residuals", to_json(r.residuals)}};
}

PolyVector parse_poly_list(const std::string& text, const std::vector<std::string>& variables) {
  PolyVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(variables.empty() ? MultiPoly::parse(item) : MultiPoly::parse(item, variables));
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return align_all(out);
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int max_degree_cap() {
  const char* v = std::getenv("OSCDUAL_MAX_DEGREE");
  if (v == nullptr || *v == '\0') return 64;
  char* end = nullptr;
  const long cap = std::strtol(v, &end, 10);
  if (*end != '\0' || cap <= 0) throw std::invalid_argument("OSCDUAL_MAX_DEGREE must be a positive integer");
  return static_cast<int>(cap);
}

void check_degree_cap(const ParamVariety& x) {
  const int cap = max_degree_cap();
  if (x.max_degree() > cap)
    throw std::invalid_argument("degree " + std::to_string(x.max_degree()) + " exceeds OSCDUAL_MAX_DEGREE=" +
                                std::to_string(cap));
}

}  // namespace oscdual::io
