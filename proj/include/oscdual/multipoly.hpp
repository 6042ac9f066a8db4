#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oscdual/rational.hpp"

namespace oscdual {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order; the map's last element is the leading term.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Natural ordering of variable names ("t2" < "t10").
bool natural_name_less(std::string_view a, std::string_view b);

/// Variable list used when two polynomials over different lists are combined.
/// If one list contains the other, the larger list wins; otherwise the union is
/// naturally sorted.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Sparse multivariate polynomial over the rationals.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(std::vector<std::string> variables, TermMap terms);

  static MultiPoly constant(const Rational& c, std::vector<std::string> variables = {});
  /// The polynomial `name`; `name` is appended to `variables` if absent.
  static MultiPoly variable(const std::string& name, std::vector<std::string> variables = {});
  static MultiPoly monomial(std::vector<std::string> variables, Exponent exponent, const Rational& c);

  /// Parses the text grammar, e.g. "t1^3 + t2^3 - 1/2*t1". Variables are taken
  /// from `variables` when given (unknown names are an error), otherwise
  /// collected and naturally sorted.
  static MultiPoly parse(std::string_view text);
  static MultiPoly parse(std::string_view text, const std::vector<std::string>& variables);

  [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] int var_index(std::string_view name) const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term (coefficient of the zero exponent).
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] Rational coefficient(const Exponent& e) const;

  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const;
  /// Degree in one variable; -1 for zero, 0 for an unknown name.
  [[nodiscard]] int degree_in(std::string_view name) const;
  [[nodiscard]] bool involves(std::string_view name) const { return degree_in(name) > 0; }
  /// Names of variables that actually occur.
  [[nodiscard]] std::vector<std::string> used_variables() const;
  [[nodiscard]] bool is_homogeneous() const;

  [[nodiscard]] const Exponent& leading_exponent() const;
  [[nodiscard]] const Rational& leading_coefficient() const;

  /// Same polynomial over another variable list. Throws if a used variable is missing.
  [[nodiscard]] MultiPoly with_variables(const std::vector<std::string>& variables) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);

  [[nodiscard]] MultiPoly pow(unsigned exponent) const;

  /// Formal partial derivative; throws std::invalid_argument for an unknown name.
  [[nodiscard]] MultiPoly differentiate(std::string_view name) const;

  /// Substitutes polynomials for variables. Variables not in `values` are kept.
  [[nodiscard]] MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
  /// Substitutes rationals for some variables; the variable list is kept.
  [[nodiscard]] MultiPoly evaluate(const std::map<std::string, Rational>& values) const;
  /// Full evaluation; throws if a used variable has no value.
  [[nodiscard]] Rational evaluate_all(const std::map<std::string, Rational>& values) const;

  /// Coefficients of powers of `name` (index = power); each omits `name`.
  [[nodiscard]] std::vector<MultiPoly> coefficients_in(std::string_view name) const;
  /// Leading coefficient with respect to one variable.
  [[nodiscard]] MultiPoly leading_coefficient_in(std::string_view name) const;

  /// Positive rational c with p / c having coprime integer coefficients.
  [[nodiscard]] Rational content() const;
  /// p / content, sign fixed so the leading coefficient is positive. Zero stays zero.
  [[nodiscard]] MultiPoly normalized() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void prune();

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Brings both polynomials onto one variable list.
std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b);
/// Brings all polynomials onto one variable list.
std::vector<MultiPoly> align_all(const std::vector<MultiPoly>& polys);

/// Exact quotient a / b, or nullopt if b does not divide a. Throws on b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
/// Like divide_exact, but throws std::domain_error when the division is not exact.
MultiPoly divide(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to `name`.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view name);

/// Normalized greatest common divisor (positive leading coefficient, integer content 1).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly gcd(const std::vector<MultiPoly>& polys);

/// p / gcd(p, dp/dname), normalized. Throws std::invalid_argument for p = 0.
MultiPoly squarefree_part(const MultiPoly& p, std::string_view name);

/// Checks a variable name against [a-z][a-z0-9]*.
bool valid_variable_name(std::string_view name);

}  // namespace oscdual
