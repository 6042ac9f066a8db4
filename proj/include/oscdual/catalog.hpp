#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "oscdual/osculation.hpp"

namespace oscdual {

struct MonomialSpec {
  int a = 1;
  int b = 2;
  int c = 3;

  /// Throws unless 0 < a < b < c and gcd(a, b, c) = 1.
  void validate() const;
};

/// (1 : t^a : t^b : t^c).
ParamVariety monomial_curve(const MonomialSpec& s);

struct DualExponents {
  std::array<int, 4> exponents{};  ///< (0, c - b, c - a, c)
  bool symmetric = false;          ///< c = a + b
};

DualExponents monomial_dual_exponents(const MonomialSpec& s);

/// p03 = a - b, p12 = c when c = a + b; none otherwise.
std::optional<SkewForm> monomial_contact_form(const MonomialSpec& s);

struct MonomialWitness {
  ParamVariety dual;
  std::array<int, 4> dual_exponents{};
  /// Sends the dual to (1 : t^{c-b} : t^{c-a} : t^c).
  ProjMap normalizer;
  /// Reversal of coordinates followed by t = 1/s must give back C_{a,b,c}.
  ProjMap reversal;
  bool certified = false;
};

/// Computes the osculating dual of C_{a,b,c} and checks the reversal witness.
MonomialWitness monomial_selfduality_witness(const MonomialSpec& s);

/// (1, (d-2)/2 F, x2, -dF/dx2 / 2, ..., xn, -dF/dxn / 2) for F homogeneous of degree d >= 3
/// in n - 1 variables. When F uses only some of x2..xn the remaining ones become parameters.
ParamVariety hypersurface_family_curve(std::size_t n, const MultiPoly& f);

/// (1, t1..tk, t1^2..tk^2, t1^3 + ... + tk^3). Throws for k < 2.
ParamVariety v_family(std::size_t k);

struct VFamilyWitness {
  ParamVariety dual;
  /// dual rewritten in the affine coordinates s_i read off its linear entries
  ParamVariety reparametrized;
  /// the correction in the cubic entry, normalized so the cubic part is t1^3 + ... + tk^3
  MultiPoly correction;
  bool correction_in_span = false;
  /// M with M v(t) = reparametrized dual, when it exists and is invertible
  std::optional<ProjMap> map;
  bool certified = false;
};

VFamilyWitness v_family_witness(std::size_t k);

/// "monomial:a,b,c", "hypersurface:n:F" or "vfamily:k". Throws std::invalid_argument otherwise.
ParamVariety catalog_entry(std::string_view name);

}  // namespace oscdual
