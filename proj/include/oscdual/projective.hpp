#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscdual/linalg.hpp"

namespace oscdual {

using ParamValues = std::map<std::string, Rational>;

/// Point of P^N given by polynomial homogeneous coordinates; equality is proportionality.
class ProjPoint {
 public:
  /// Throws std::invalid_argument if every coordinate vanishes identically.
  explicit ProjPoint(PolyVector coords);
  static ProjPoint from_rationals(const RationalVector& coords);

  [[nodiscard]] const PolyVector& coords() const { return coords_; }
  [[nodiscard]] std::size_t ambient_dim() const { return coords_.size() - 1; }
  [[nodiscard]] const MultiPoly& operator[](std::size_t i) const { return coords_[i]; }

 private:
  PolyVector coords_;
};

/// All 2x2 cross-determinants p_i q_j - p_j q_i, i < j. Throws on length mismatch.
PolyVector cross_determinants(const PolyVector& p, const PolyVector& q);
/// True iff the two coordinate vectors are proportional; throws on dimension mismatch.
bool proj_equal(const ProjPoint& p, const ProjPoint& q);
bool proj_equal(const PolyVector& p, const PolyVector& q);

/// Linear subspace of k^{N+1}, stored as independent rows.
struct LinearSubspace {
  PolyMatrix basis;
  std::size_t ambient_dim = 0;

  [[nodiscard]] std::size_t dimension() const { return basis.rows(); }
};

/// Span of the rows of m evaluated at a parameter point. Throws if all rows vanish there.
LinearSubspace span_of_rows(const PolyMatrix& m, const ParamValues& at);

/// Projective linear automorphism of P^N.
class ProjMap {
 public:
  /// Throws std::invalid_argument on a non-square or singular matrix.
  explicit ProjMap(RationalMatrix matrix);
  static ProjMap identity(std::size_t ambient_dim);
  /// (x_0 : ... : x_N) -> (x_N : ... : x_0).
  static ProjMap reversal(std::size_t ambient_dim);
  static ProjMap diagonal(const RationalVector& entries);

  [[nodiscard]] const RationalMatrix& matrix() const { return matrix_; }
  [[nodiscard]] std::size_t ambient_dim() const { return matrix_.size() - 1; }
  [[nodiscard]] PolyVector apply(const PolyVector& v) const;
  /// this * other, i.e. apply other first.
  [[nodiscard]] ProjMap compose(const ProjMap& other) const;

  friend bool operator==(const ProjMap& a, const ProjMap& b);

 private:
  RationalMatrix matrix_;
};

/// Affine polynomial parametrization t -> (v_0(t) : ... : v_N(t)) of a projective variety.
class ParamVariety {
 public:
  /// Coordinates are moved onto the parameter list; a nonconstant common factor is
  /// divided out. Throws if every coordinate is zero, if a coordinate uses a name
  /// outside `params`, or if a parameter name is invalid.
  ParamVariety(std::vector<std::string> params, PolyVector coords);

  [[nodiscard]] const std::vector<std::string>& params() const { return params_; }
  [[nodiscard]] const PolyVector& coords() const { return coords_; }
  [[nodiscard]] std::size_t ambient_dim() const { return coords_.size() - 1; }
  [[nodiscard]] std::size_t param_count() const { return params_.size(); }
  [[nodiscard]] int max_degree() const;

  /// Fully normalized copy: integer content 1, first nonzero leading coefficient positive.
  [[nodiscard]] ParamVariety canonical() const;
  [[nodiscard]] RationalVector evaluate(const ParamValues& at) const;
  /// Substitutes polynomials in `new_params` for the current parameters.
  [[nodiscard]] ParamVariety reparametrize(std::vector<std::string> new_params,
                                           const std::map<std::string, MultiPoly>& substitution) const;
  /// Rows v, dv/dt_1, ..., dv/dt_k.
  [[nodiscard]] PolyMatrix first_jet() const;
  /// Generic rank of the first jet equals k + 1.
  [[nodiscard]] bool is_generic_immersion() const;
  [[nodiscard]] std::vector<std::string> coord_strings() const;

 private:
  std::vector<std::string> params_;
  PolyVector coords_;
};

bool proj_equal(const ParamVariety& a, const ParamVariety& b);

/// m applied to the coordinates, gcd-reduced. Throws on dimension mismatch.
ParamVariety apply_map(const ProjMap& m, const ParamVariety& x);

/// Every hyperplane (as a covector) containing x; empty when x spans P^N.
std::vector<RationalVector> hyperplane_containment(const ParamVariety& x);

/// For a curve: the chart t = 1/s at infinity, written again in the variable t.
ParamVariety invert_parameter(const ParamVariety& curve);

/// Matrix M with M * source.coords == target.coords identically, if one exists.
std::optional<RationalMatrix> find_linear_map(const ParamVariety& source, const ParamVariety& target);

/// Covector-vector pairing of a constant covector with polynomial coordinates.
MultiPoly pair(const RationalVector& covector, const PolyVector& v);

}  // namespace oscdual
