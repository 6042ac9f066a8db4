#include "oscdual/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oscdual {

void MonomialSpec::validate() const {
  if (a <= 0 || !(a < b && b < c)) throw std::invalid_argument("monomial exponents must satisfy 0 < a < b < c");
  if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("monomial exponents must have gcd 1");
}

ParamVariety monomial_curve(const MonomialSpec& s) {
  s.validate();
  const std::vector<std::string> t{"t"};
  PolyVector v{MultiPoly::constant(Rational(1), t)};
  for (int e : {s.a, s.b, s.c}) v.push_back(MultiPoly::monomial(t, {static_cast<std::uint32_t>(e)}, Rational(1)));
  return ParamVariety(t, v);
}

DualExponents monomial_dual_exponents(const MonomialSpec& s) {
  s.validate();
  return {{0, s.c - s.b, s.c - s.a, s.c}, s.c == s.a + s.b};
}

std::optional<SkewForm> monomial_contact_form(const MonomialSpec& s) {
  s.validate();
  if (s.c != s.a + s.b) return std::nullopt;
  RationalMatrix m(4, RationalVector(4));
  m[0][3] = Rational(s.a - s.b);
  m[3][0] = Rational(s.b - s.a);
  m[1][2] = Rational(s.c);
  m[2][1] = Rational(-s.c);
  return SkewForm(std::move(m));
}

MonomialWitness monomial_selfduality_witness(const MonomialSpec& s) {
  const ParamVariety curve = monomial_curve(s);
  const ParamVariety dual = osculating_dual(curve);
  const auto expected = monomial_dual_exponents(s).exponents;

  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < 4; ++i) {
    const MultiPoly& c = dual.coords()[i];
    if (c.term_count() != 1) throw std::logic_error("dual of a monomial curve is not monomial");
    order.emplace_back(c.total_degree(), i);
  }
  std::sort(order.begin(), order.end());
  RationalMatrix n(4, RationalVector(4));
  std::array<int, 4> exps{};
  for (std::size_t pos = 0; pos < 4; ++pos) {
    const std::size_t i = order[pos].second;
    exps[pos] = order[pos].first;
    n[pos][i] = dual.coords()[i].leading_coefficient().inverse();
  }
  MonomialWitness w{dual, exps, ProjMap(n), ProjMap::reversal(3), false};
  if (exps != expected) return w;
  const ParamVariety normalized = apply_map(w.normalizer, dual);
  w.certified = proj_equal(invert_parameter(apply_map(w.reversal, normalized)), curve);
  return w;
}

ParamVariety hypersurface_family_curve(std::size_t n, const MultiPoly& f) {
  if (n < 2) throw std::invalid_argument("hypersurface family needs n >= 2");
  if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("F must be a nonzero homogeneous polynomial");
  const int d = f.total_degree();
  if (d < 3) throw std::invalid_argument("F must have degree at least 3");

  std::vector<std::string> params;
  const auto used = f.used_variables();
  std::vector<std::string> defaults;
  for (std::size_t k = 2; k <= n; ++k) defaults.push_back("x" + std::to_string(k));
  const bool default_names =
      std::all_of(used.begin(), used.end(), [&](const std::string& v) {
        return std::find(defaults.begin(), defaults.end(), v) != defaults.end();
      });
  if (default_names)
    params = defaults;
  else if (f.variables().size() == n - 1)
    params = f.variables();
  else
    throw std::invalid_argument("F must be a polynomial in " + std::to_string(n - 1) + " variables");

  const MultiPoly ff = f.with_variables(params);
  PolyVector v{MultiPoly::constant(Rational(1), params), ff * Rational(d - 2, 2)};
  for (const auto& p : params) {
    v.push_back(MultiPoly::variable(p, params));
    v.push_back(ff.differentiate(p) * Rational(-1, 2));
  }
  return ParamVariety(params, v);
}

ParamVariety v_family(std::size_t k) {
  if (k < 2) throw std::invalid_argument("the V family needs k >= 2");
  std::vector<std::string> t;
  for (std::size_t i = 1; i <= k; ++i) t.push_back("t" + std::to_string(i));
  PolyVector v{MultiPoly::constant(Rational(1), t)};
  for (const auto& p : t) v.push_back(MultiPoly::variable(p, t));
  for (const auto& p : t) v.push_back(MultiPoly::variable(p, t).pow(2));
  MultiPoly cubic(t);
  for (const auto& p : t) cubic += MultiPoly::variable(p, t).pow(3);
  v.push_back(cubic);
  return ParamVariety(t, v);
}

VFamilyWitness v_family_witness(std::size_t k) {
  const ParamVariety v = v_family(k);
  const ParamVariety dual = osculating_dual(v);
  const auto& t = v.params();
  VFamilyWitness w{dual, dual, MultiPoly(t), false, std::nullopt, false};

  std::optional<std::size_t> constant;
  std::vector<std::size_t> linear;
  for (std::size_t i = 0; i < dual.coords().size(); ++i) {
    const int deg = dual.coords()[i].total_degree();
    if (deg == 0 && !constant) constant = i;
    if (deg == 1) linear.push_back(i);
  }
  if (!constant || linear.size() != k) return w;

  // s_j = h_{linear j} / h_constant = sum_i a_ji t_i + b_j
  const Rational c0 = dual.coords()[*constant].constant_term();
  RationalMatrix a(k, RationalVector(k));
  RationalVector b(k);
  for (std::size_t j = 0; j < k; ++j) {
    const MultiPoly& h = dual.coords()[linear[j]];
    b[j] = h.constant_term() / c0;
    for (std::size_t i = 0; i < k; ++i) {
      Exponent e(k, 0);
      e[i] = 1;
      a[j][i] = h.coefficient(e) / c0;
    }
  }
  if (determinant(a).is_zero()) return w;
  const RationalMatrix ainv = inverse(a);
  std::map<std::string, MultiPoly> subst;
  for (std::size_t i = 0; i < k; ++i) {
    MultiPoly e(t);
    for (std::size_t j = 0; j < k; ++j)
      e += (MultiPoly::variable(t[j], t) - MultiPoly::constant(b[j], t)) * ainv[i][j];
    subst[t[i]] = e;
  }
  w.reparametrized = dual.reparametrize(t, subst);

  std::vector<std::size_t> cubic_rows;
  for (std::size_t i = 0; i < w.reparametrized.coords().size(); ++i)
    if (w.reparametrized.coords()[i].total_degree() == 3) cubic_rows.push_back(i);
  if (cubic_rows.size() == 1) {
    const MultiPoly& h = w.reparametrized.coords()[cubic_rows[0]];
    Exponent e(k, 0);
    e[0] = 3;
    const Rational lambda = h.coefficient(e);
    MultiPoly sum(t);
    for (const auto& p : t) sum += MultiPoly::variable(p, t).pow(3);
    if (!lambda.is_zero()) {
      w.correction = h * lambda.inverse() - sum;
      w.correction_in_span = w.correction.total_degree() <= 2;
      for (const auto& [exp, coeff] : w.correction.terms()) {
        const auto nonzero = std::count_if(exp.begin(), exp.end(), [](std::uint32_t x) { return x > 0; });
        if (nonzero != 1) w.correction_in_span = false;
      }
    }
  }

  const auto m = find_linear_map(v, w.reparametrized);
  if (m && !determinant(*m).is_zero()) {
    w.map = ProjMap(*m);
    w.certified = proj_equal(apply_map(*w.map, v), w.reparametrized);
  }
  return w;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep, std::size_t max_parts) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < max_parts) {
    const std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) break;
    out.emplace_back(s.substr(start, p - start));
    start = p + 1;
  }
  out.emplace_back(s.substr(start));
  return out;
}

long to_integer(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

ParamVariety catalog_entry(std::string_view name) {
  const auto parts = split(name, ':', 3);
  if (parts[0] == "monomial" && parts.size() == 2) {
    const auto e = split(parts[1], ',', 4);
    if (e.size() != 3) throw std::invalid_argument("expected monomial:a,b,c");
    return monomial_curve({static_cast<int>(to_integer(e[0])), static_cast<int>(to_integer(e[1])),
                           static_cast<int>(to_integer(e[2]))});
  }
  if (parts[0] == "hypersurface" && parts.size() == 3) {
    const long n = to_integer(parts[1]);
    if (n < 2) throw std::invalid_argument("hypersurface family needs n >= 2");
    return hypersurface_family_curve(static_cast<std::size_t>(n), MultiPoly::parse(parts[2]));
  }
  if (parts[0] == "vfamily" && parts.size() == 2) {
    const long k = to_integer(parts[1]);
    if (k < 2) throw std::invalid_argument("the V family needs k >= 2");
    return v_family(static_cast<std::size_t>(k));
  }
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace oscdual
