#pragma once

#include <random>
#include <string>
#include <vector>

#include "oscdual/projective.hpp"

namespace oscdual::testing {

inline MultiPoly P(const std::string& text) { return MultiPoly::parse(text); }
inline MultiPoly P(const std::string& text, const std::vector<std::string>& vars) {
  return MultiPoly::parse(text, vars);
}

inline PolyVector PV(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  PolyVector out;
  for (const auto& t : texts) out.push_back(MultiPoly::parse(t, vars));
  return out;
}

inline ParamVariety X(const std::vector<std::string>& params, const std::vector<std::string>& coords) {
  return ParamVariety(params, PV(coords, params));
}

inline RationalVector RV(const std::vector<long>& v) {
  RationalVector out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

inline RationalMatrix RM(const std::vector<std::vector<long>>& m) {
  RationalMatrix out;
  for (const auto& row : m) out.push_back(RV(row));
  return out;
}

/// Small-coefficient random polynomials over a fixed variable list.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int bound = 5) {
    const int num = integer(-bound, bound);
    const int den = integer(1, 3);
    return Rational(num, den);
  }

  MultiPoly poly(const std::vector<std::string>& vars, int max_degree, int max_terms) {
    MultiPoly p(vars);
    const int terms = integer(1, max_terms);
    for (int i = 0; i < terms; ++i) {
      Exponent e(vars.size(), 0);
      int budget = integer(0, max_degree);
      for (auto& x : e) {
        const int k = integer(0, budget);
        x = static_cast<std::uint32_t>(k);
        budget -= k;
      }
      p += MultiPoly::monomial(vars, e, rational());
    }
    return p;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oscdual::testing
