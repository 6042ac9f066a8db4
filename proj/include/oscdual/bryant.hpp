#pragma once

#include <string>
#include <vector>

#include "oscdual/contact.hpp"

namespace oscdual {

/// A point x of P^n with a hyperplane y through it.
struct IncidencePoint {
  ProjPoint x;
  ProjPoint y;

  /// Throws unless x and y have equal length and sum x_i y_i vanishes identically.
  IncidencePoint(ProjPoint x_in, ProjPoint y_in);
  [[nodiscard]] std::size_t n() const { return x.ambient_dim(); }
};

/// The forms z0 = x0 y1, z1 = (x1 y1 - x0 y0)/2, z_{2k-2} = x_k y1, z_{2k-1} = -x0 y_k / 2.
PolyVector theta_coords(const PolyVector& x, const PolyVector& y);

/// Throws in the center x0 = y1 = 0 or when n differs from the point's dimension.
ProjPoint theta_point(const IncidencePoint& p, std::size_t n);

/// Inverse of theta on z0 != 0. Throws where x or y vanishes entirely.
IncidencePoint beta_point(const ProjPoint& z);

struct PullbackCheck {
  bool ok = false;
  ChartOneForm pullback;
  ChartOneForm omega;
  PolyVector residuals;
};

/// Pulls eta back along beta on the chart z0 = 1 and compares with omega. Throws unless 2 <= n <= 4.
PullbackCheck verify_pullback(std::size_t n);

/// A plane curve with its family of tangent lines.
struct ConormalLift {
  ParamVariety base;
  PolyVector point;  ///< gamma(t)
  PolyVector line;   ///< gamma x gamma', with common factors removed
  bool is_line = false;
};

/// Throws unless c is a nonconstant curve in P^2.
ConormalLift conormal_lift(const ParamVariety& c);

/// theta applied to (gamma, l). Throws for lines and for lifts inside the center.
ParamVariety theta_pushforward(const ConormalLift& l);

struct Hypothesis {
  int index = 0;
  std::string statement;
  bool pass = false;
  std::string witness;
};

struct GenericityReport {
  char lemma = 'A';
  std::vector<Hypothesis> hypotheses;

  [[nodiscard]] bool pass() const;
};

/// Hypotheses under which theta restricted to the lift is an immersion; checked on
/// the finite chart and at parameter infinity, without root enumeration.
GenericityReport genericity_A(const ParamVariety& c);
/// Hypotheses under which theta restricted to the lift is injective.
GenericityReport genericity_B(const ParamVariety& c);

/// Degree of the image curve, from the homogenized parametrization.
int parametric_curve_degree(const ParamVariety& x);

/// Largest number of distinct intersection points with three fixed hyperplanes,
/// including parameter infinity. Equals the degree for injective parametrizations
/// in general position with respect to those hyperplanes.
int hyperplane_section_count(const ParamVariety& x);

struct ExpectedDegrees {
  long nodes = 0;
  long dual_degree = 0;
  long legendrian_degree = 0;
};

/// Nodal plane curve of degree d and geometric genus g. Throws for d < 2 or g out of range.
ExpectedDegrees expected_degrees(long d, long g);

}  // namespace oscdual
