#pragma once

#include <string>
#include <vector>

#include "oscdual/contact.hpp"

namespace oscdual {

/// v and its partial derivatives up to order s, with the multi-index of every row.
struct JetMatrix {
  ParamVariety source;
  std::size_t order = 0;
  PolyMatrix matrix;
  /// legend[r] is the multi-index of row r; row 0 is v itself.
  std::vector<Exponent> legend;

  [[nodiscard]] std::string row_label(std::size_t r) const;
};

/// Rows grouped by order; within one order, multi-indices in descending lex order
/// ((2,0), (1,1), (0,2) for two parameters).
JetMatrix jet_matrix(const ParamVariety& x, std::size_t s);

/// Throws if v vanishes at the point.
LinearSubspace osculating_space(const ParamVariety& x, std::size_t s, const ParamValues& at);

/// Projective dimension of Osc^s at the generic point (rank over the fraction field, minus one).
std::size_t generic_osculating_dim(const ParamVariety& x, std::size_t s);

/// Space of quadratic forms on the tangent directions.
struct QuadFormSpace {
  std::vector<RationalMatrix> basis;  ///< symmetric k x k matrices
  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Forms sum_ij (h . d_i d_j v) t_i t_j for hyperplanes h containing the tangent space.
/// Throws at a non-immersion point.
QuadFormSpace second_fundamental_form(const ParamVariety& x, const ParamValues& at);

/// Hyperplanes Osc^2 of a k-dimensional variety in P^{2k+1}, as cofactors of the jet matrix.
/// Throws unless the generic second osculating space is a hyperplane.
ParamVariety osculating_dual(const ParamVariety& x);

struct SelfDualReport {
  enum class Status { selfdual, not_legendrian, degenerate_osculation, in_hyperplane, mismatch };

  Status status = Status::mismatch;
  bool legendrian = false;
  std::size_t osc2_generic_dim = 0;
  bool in_hyperplane = false;
  bool selfdual = false;
  /// Nonzero Legendrian residuals, or nonzero cross-determinants between the dual and B v.
  PolyVector residuals;
  std::string message;
};

std::string to_string(SelfDualReport::Status s);

/// Checks symbolically that Osc^2 at v(t) is the contact hyperplane B v(t).
SelfDualReport selfdual_certificate(const ParamVariety& x, const SkewForm& b);

}  // namespace oscdual
