#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscdual/multipoly.hpp"

namespace oscdual {

using PolyVector = std::vector<MultiPoly>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rectangular matrix of polynomials sharing one variable list.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> variables = {});
  /// Rows must have equal length; entries are aligned onto one variable list.
  explicit PolyMatrix(const std::vector<PolyVector>& rows);
  static PolyMatrix from_rationals(const RationalMatrix& m);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }

  [[nodiscard]] const MultiPoly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Assigns an entry, re-aligning the whole matrix if the variable list grows.
  void set(std::size_t r, std::size_t c, const MultiPoly& value);

  [[nodiscard]] PolyVector row(std::size_t r) const;
  [[nodiscard]] PolyVector column(std::size_t c) const;
  [[nodiscard]] PolyMatrix transpose() const;
  [[nodiscard]] PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  [[nodiscard]] PolyMatrix select_rows(const std::vector<std::size_t>& rows) const;
  [[nodiscard]] PolyMatrix evaluate(const std::map<std::string, Rational>& values) const;
  /// Entries as rationals; throws if some entry is not constant.
  [[nodiscard]] RationalMatrix to_rationals() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::string> vars_;
  std::vector<MultiPoly> data_;
};

MultiPoly dot(const PolyVector& a, const PolyVector& b);
PolyVector multiply(const PolyMatrix& m, const PolyVector& v);
PolyVector differentiate(const PolyVector& v, std::string_view name);

/// Divides by the gcd of the entries and the common rational content, then makes
/// the first nonzero entry have positive leading coefficient. Zero vectors pass through.
PolyVector normalize_vector(const PolyVector& v);
RationalVector normalize_vector(const RationalVector& v);

/// Fraction-free (Bareiss) determinant.
MultiPoly determinant(const PolyMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  /// Normalized basis of the right kernel {u : m u = 0}, one vector per non-pivot column.
  std::vector<PolyVector> kernel;
  /// Original indices of rows that are independent over the fraction field.
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

/// Rank over the fraction field of the polynomial ring and a polynomial kernel basis.
RankKernel ff_rank_kernel(const PolyMatrix& m);
std::size_t rank(const PolyMatrix& m);

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  MultiPoly value;
};

/// Every k x k minor; row sets in lexicographic order, then column sets.
std::vector<Minor> all_minors(const PolyMatrix& m, std::size_t k);

/// Sylvester resultant eliminating `name`. Throws std::invalid_argument when both inputs vanish.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view name);

// Dense rational linear algebra.
std::size_t rank(const RationalMatrix& m);
/// Normalized basis of {u : m u = 0}; `cols` is needed when m has no rows.
std::vector<RationalVector> kernel(const RationalMatrix& m, std::size_t cols);
Rational determinant(const RationalMatrix& m);
/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);
/// Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix identity_matrix(std::size_t n);

}  // namespace oscdual
