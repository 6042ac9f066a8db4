#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscdual/projective.hpp"

namespace oscdual {

/// Skew-symmetric bilinear form on k^{2n}, B(u, w) = u^T M w.
class SkewForm {
 public:
  /// Validates an even-sized, exactly antisymmetric matrix. Degenerate forms are
  /// allowed here; callers that need a contact structure check is_nondegenerate().
  explicit SkewForm(RationalMatrix matrix);

  [[nodiscard]] std::size_t n() const { return matrix_.size() / 2; }
  [[nodiscard]] std::size_t size() const { return matrix_.size(); }
  [[nodiscard]] const RationalMatrix& matrix() const { return matrix_; }
  [[nodiscard]] Rational pfaffian() const;
  [[nodiscard]] bool is_nondegenerate() const { return !pfaffian().is_zero(); }

  [[nodiscard]] MultiPoly pairing(const PolyVector& u, const PolyVector& w) const;
  [[nodiscard]] Rational pairing(const RationalVector& u, const RationalVector& w) const;
  /// Integer entries with content 1; first nonzero entry above the diagonal positive.
  [[nodiscard]] SkewForm normalized() const;

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.matrix_ == b.matrix_; }

 private:
  RationalMatrix matrix_;
};

/// True iff a and b are nonzero multiples of each other.
bool proportional(const SkewForm& a, const SkewForm& b);

/// Pfaffian of a skew-symmetric polynomial matrix (expansion along the first row).
MultiPoly pfaffian(const PolyMatrix& m);

/// Block form with B(e_{2i}, e_{2i+1}) = 1. Throws for n < 1.
SkewForm standard_B(std::size_t n);

/// A 1-form written on an affine chart: sum of coeffs[i] * d(coordinates[i]).
struct ChartOneForm {
  std::string chart;
  std::vector<std::string> coordinates;
  PolyVector coeffs;

  [[nodiscard]] std::string to_string() const;
};

struct StandardForms {
  ChartOneForm omega;  ///< on {z0 = 1} of P^{2n-1}
  ChartOneForm eta;    ///< on {x0 = y0 = 1} of the incidence variety, xi_j = y_j / y_1
};

/// The contact forms matching standard_B(n) and the canonical structure. Throws for n < 2.
StandardForms standard_forms(std::size_t n);

/// Map x -> B x; sends a point p to (the covector of) its contact hyperplane p^perp.
/// Throws for a degenerate form.
ProjMap polarity(const SkewForm& b);

/// Throws on dimension mismatch.
bool is_isotropic(const LinearSubspace& s, const SkewForm& b);

struct LegendrianCheck {
  /// All residuals vanish: x is an integral variety of the contact structure.
  bool integral = false;
  /// integral and of maximal dimension n - 1.
  bool legendrian = false;
  std::vector<std::string> labels;
  PolyVector residuals;

  [[nodiscard]] PolyVector nonzero_residuals() const;
};

/// B(v, dv/dt_i) and B(dv/dt_i, dv/dt_j) for i < j, as polynomials.
LegendrianCheck legendrian_check(const ParamVariety& x, const SkewForm& b);

struct ContactSearch {
  /// Dimension of the space of skew forms satisfying every integrality condition.
  std::size_t solution_dim = 0;
  std::vector<SkewForm> solution_basis;
  /// Pfaffian of sum_r l_r * basis_r as a polynomial in l1..lm.
  MultiPoly generic_pfaffian;
  /// A nondegenerate solution, when the generic Pfaffian is not identically zero.
  std::optional<SkewForm> form;
};

/// Solves for every skew form making x integral and looks for a nondegenerate one.
/// Throws for odd ambient dimension or ambient dimension above P^7.
ContactSearch find_contact_form(const ParamVariety& x);

struct ConeReduction {
  ProjPoint vertex;
  RationalVector complement;  ///< w with B(v, w) != 0
  LinearSubspace e1;
  ParamVariety reduced;
  SkewForm b1;
};

/// Projects a variety lying in the hyperplane h = B(v, .) from the vertex (v) into
/// P(E_1), E_1 = span{v, w}^perp. Throws if h does not vanish on x or b is degenerate.
ConeReduction cone_reduction(const ParamVariety& x, const SkewForm& b, const RationalVector& h);

}  // namespace oscdual
