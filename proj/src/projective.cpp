#include "oscdual/projective.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oscdual {

ProjPoint::ProjPoint(PolyVector coords) : coords_(align_all(coords)) {
  if (coords_.empty()) throw std::invalid_argument("projective point needs at least one coordinate");
  if (std::all_of(coords_.begin(), coords_.end(), [](const MultiPoly& p) { return p.is_zero(); }))
    throw std::invalid_argument("all homogeneous coordinates vanish");
}

ProjPoint ProjPoint::from_rationals(const RationalVector& coords) {
  PolyVector v;
  for (const auto& c : coords) v.push_back(MultiPoly::constant(c));
  return ProjPoint(std::move(v));
}

PolyVector cross_determinants(const PolyVector& p, const PolyVector& q) {
  if (p.size() != q.size()) throw std::invalid_argument("projective dimension mismatch");
  PolyVector out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) out.push_back(p[i] * q[j] - p[j] * q[i]);
  return out;
}

bool proj_equal(const PolyVector& p, const PolyVector& q) {
  const auto d = cross_determinants(p, q);
  return std::all_of(d.begin(), d.end(), [](const MultiPoly& x) { return x.is_zero(); });
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q) { return proj_equal(p.coords(), q.coords()); }

LinearSubspace span_of_rows(const PolyMatrix& m, const ParamValues& at) {
  const RationalMatrix values = m.evaluate(at).to_rationals();
  RationalMatrix kept;
  for (const auto& row : values) {
    RationalMatrix trial = kept;
    trial.push_back(row);
    if (rank(trial) > kept.size()) kept = std::move(trial);
  }
  if (kept.empty()) throw std::invalid_argument("all rows vanish at the evaluation point");
  return {PolyMatrix::from_rationals(kept), m.cols() - 1};
}

ProjMap::ProjMap(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.empty()) throw std::invalid_argument("empty projective map");
  for (const auto& row : matrix_)
    if (row.size() != matrix_.size()) throw std::invalid_argument("projective map must be square");
  if (determinant(matrix_).is_zero()) throw std::invalid_argument("projective map is singular");
}

ProjMap ProjMap::identity(std::size_t ambient_dim) { return ProjMap(identity_matrix(ambient_dim + 1)); }

ProjMap ProjMap::reversal(std::size_t ambient_dim) {
  RationalMatrix m(ambient_dim + 1, RationalVector(ambient_dim + 1, Rational(0)));
  for (std::size_t i = 0; i <= ambient_dim; ++i) m[i][ambient_dim - i] = Rational(1);
  return ProjMap(std::move(m));
}

ProjMap ProjMap::diagonal(const RationalVector& entries) {
  RationalMatrix m(entries.size(), RationalVector(entries.size(), Rational(0)));
  for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
  return ProjMap(std::move(m));
}

PolyVector ProjMap::apply(const PolyVector& v) const {
  if (v.size() != matrix_.size()) throw std::invalid_argument("projective map dimension mismatch");
  PolyVector out;
  for (const auto& row : matrix_) {
    MultiPoly s;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) s += v[j] * row[j];
    out.push_back(s);
  }
  return align_all(out);
}

ProjMap ProjMap::compose(const ProjMap& other) const {
  if (other.matrix_.size() != matrix_.size()) throw std::invalid_argument("projective map dimension mismatch");
  return ProjMap(multiply(matrix_, other.matrix_));
}

bool operator==(const ProjMap& a, const ProjMap& b) {
  if (a.matrix_.size() != b.matrix_.size()) return false;
  RationalVector fa;
  RationalVector fb;
  for (const auto& row : a.matrix_) fa.insert(fa.end(), row.begin(), row.end());
  for (const auto& row : b.matrix_) fb.insert(fb.end(), row.begin(), row.end());
  return normalize_vector(fa) == normalize_vector(fb);
}

ParamVariety::ParamVariety(std::vector<std::string> params, PolyVector coords) : params_(std::move(params)) {
  for (const auto& p : params_)
    if (!valid_variable_name(p)) throw std::invalid_argument("invalid parameter name '" + p + "'");
  if (std::set<std::string>(params_.begin(), params_.end()).size() != params_.size())
    throw std::invalid_argument("duplicate parameter names");
  if (coords.empty()) throw std::invalid_argument("parametrization has no coordinates");
  for (auto& c : coords) c = c.with_variables(params_);
  if (std::all_of(coords.begin(), coords.end(), [](const MultiPoly& p) { return p.is_zero(); }))
    throw std::invalid_argument("all coordinates vanish identically");
  const MultiPoly g = gcd(coords);
  if (!g.is_constant())
    for (auto& c : coords) c = divide(c, g);
  coords_ = std::move(coords);
}

int ParamVariety::max_degree() const {
  int d = 0;
  for (const auto& c : coords_) d = std::max(d, c.total_degree());
  return d;
}

ParamVariety ParamVariety::canonical() const { return ParamVariety(params_, normalize_vector(coords_)); }

RationalVector ParamVariety::evaluate(const ParamValues& at) const {
  RationalVector out;
  for (const auto& c : coords_) out.push_back(c.evaluate_all(at));
  return out;
}

ParamVariety ParamVariety::reparametrize(std::vector<std::string> new_params,
                                         const std::map<std::string, MultiPoly>& substitution) const {
  PolyVector out;
  for (const auto& c : coords_) out.push_back(c.substitute(substitution));
  return ParamVariety(std::move(new_params), std::move(out));
}

PolyMatrix ParamVariety::first_jet() const {
  std::vector<PolyVector> rows{coords_};
  for (const auto& p : params_) rows.push_back(differentiate(coords_, p));
  return PolyMatrix(rows);
}

bool ParamVariety::is_generic_immersion() const { return rank(first_jet()) == params_.size() + 1; }

std::vector<std::string> ParamVariety::coord_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coords_) out.push_back(c.to_string());
  return out;
}

bool proj_equal(const ParamVariety& a, const ParamVariety& b) { return proj_equal(a.coords(), b.coords()); }

ParamVariety apply_map(const ProjMap& m, const ParamVariety& x) {
  return ParamVariety(x.params(), m.apply(x.coords()));
}

namespace {

// Rows: monomials occurring anywhere; columns: coordinates.
RationalMatrix coefficient_matrix(const PolyVector& coords) {
  std::set<Exponent, GrlexLess> monomials;
  for (const auto& c : coords)
    for (const auto& [e, v] : c.terms()) monomials.insert(e);
  RationalMatrix m;
  for (const auto& e : monomials) {
    RationalVector row;
    for (const auto& c : coords) row.push_back(c.coefficient(e));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

std::vector<RationalVector> hyperplane_containment(const ParamVariety& x) {
  return kernel(coefficient_matrix(x.coords()), x.coords().size());
}

ParamVariety invert_parameter(const ParamVariety& curve) {
  if (curve.param_count() != 1) throw std::invalid_argument("parameter inversion needs a curve");
  const int d = curve.max_degree();
  PolyVector out;
  for (const auto& c : curve.coords()) {
    MultiPoly r(curve.params());
    for (const auto& [e, v] : c.terms()) r += MultiPoly::monomial(curve.params(), {static_cast<std::uint32_t>(d) - e[0]}, v);
    out.push_back(r);
  }
  return ParamVariety(curve.params(), std::move(out));
}

std::optional<RationalMatrix> find_linear_map(const ParamVariety& source, const ParamVariety& target) {
  if (source.params() != target.params()) throw std::invalid_argument("parametrizations use different parameters");
  PolyVector all = source.coords();
  all.insert(all.end(), target.coords().begin(), target.coords().end());
  const RationalMatrix joint = coefficient_matrix(all);
  const std::size_t ns = source.coords().size();
  RationalMatrix s(joint.size());
  for (std::size_t r = 0; r < joint.size(); ++r) s[r].assign(joint[r].begin(), joint[r].begin() + static_cast<std::ptrdiff_t>(ns));
  RationalMatrix out;
  for (std::size_t i = 0; i < target.coords().size(); ++i) {
    RationalVector rhs;
    for (const auto& row : joint) rhs.push_back(row[ns + i]);
    auto x = solve(s, rhs);
    if (!x) return std::nullopt;
    out.push_back(std::move(*x));
  }
  return out;
}

MultiPoly pair(const RationalVector& covector, const PolyVector& v) {
  if (covector.size() != v.size()) throw std::invalid_argument("covector dimension mismatch");
  MultiPoly s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!covector[i].is_zero()) s += v[i] * covector[i];
  return s;
}

}  // namespace oscdual
