#include "oscdual/bryant.hpp"

#include <algorithm>
#include <utility>
#include <stdexcept>

namespace oscdual {

namespace {

bool all_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

const Rational half(1, 2);

}  // namespace

IncidencePoint::IncidencePoint(ProjPoint x_in, ProjPoint y_in) : x(std::move(x_in)), y(std::move(y_in)) {
  if (x.coords().size() != y.coords().size()) throw std::invalid_argument("point and hyperplane dimensions differ");
  if (x.ambient_dim() < 2) throw std::invalid_argument("incidence points need n >= 2");
  if (!dot(x.coords(), y.coords()).is_zero()) throw std::invalid_argument("point does not lie on the hyperplane");
}

PolyVector theta_coords(const PolyVector& x_in, const PolyVector& y_in) {
  if (x_in.size() != y_in.size() || x_in.size() < 3) throw std::invalid_argument("theta needs x, y in P^n, n >= 2");
  PolyVector all = x_in;
  all.insert(all.end(), y_in.begin(), y_in.end());
  all = align_all(all);
  const std::size_t n = x_in.size() - 1;
  const PolyVector x(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n + 1));
  const PolyVector y(all.begin() + static_cast<std::ptrdiff_t>(n + 1), all.end());
  PolyVector z(2 * n, MultiPoly(all[0].variables()));
  z[0] = x[0] * y[1];
  z[1] = (x[1] * y[1] - x[0] * y[0]) * half;
  for (std::size_t k = 2; k <= n; ++k) {
    z[2 * k - 2] = x[k] * y[1];
    z[2 * k - 1] = x[0] * y[k] * (-half);
  }
  return z;
}

ProjPoint theta_point(const IncidencePoint& p, std::size_t n) {
  if (p.n() != n) throw std::invalid_argument("incidence point is not in P^" + std::to_string(n));
  if (p.x[0].is_zero() && p.y[1].is_zero()) throw std::invalid_argument("point lies in the center x0 = y1 = 0");
  return ProjPoint(theta_coords(p.x.coords(), p.y.coords()));
}

IncidencePoint beta_point(const ProjPoint& z_in) {
  const PolyVector& z = z_in.coords();
  if (z.size() < 4 || z.size() % 2 != 0) throw std::invalid_argument("beta needs a point of P^{2n-1}, n >= 2");
  const std::size_t n = z.size() / 2;
  MultiPoly s(z[0].variables());
  for (std::size_t j = 1; j < n; ++j) s += z[2 * j] * z[2 * j + 1];
  PolyVector x(n + 1);
  PolyVector y(n + 1);
  x[0] = z[0] * z[0];
  y[1] = x[0];
  x[1] = z[0] * z[1] + s;
  y[0] = -(z[0] * z[1]) + s;
  for (std::size_t k = 2; k <= n; ++k) {
    x[k] = z[0] * z[2 * k - 2];
    y[k] = z[0] * z[2 * k - 1] * Rational(-2);
  }
  if (all_zero(x) || all_zero(y)) throw std::invalid_argument("beta is undefined at this point");
  return IncidencePoint(ProjPoint(x), ProjPoint(y));
}

PullbackCheck verify_pullback(std::size_t n) {
  if (n < 2 || n > 4) throw std::invalid_argument("pullback check is limited to 2 <= n <= 4");
  const StandardForms forms = standard_forms(n);
  const auto& zs = forms.omega.coordinates;

  PolyVector z{MultiPoly::constant(Rational(1), zs)};
  for (const auto& name : zs) z.push_back(MultiPoly::variable(name, zs));
  const IncidencePoint b = beta_point(ProjPoint(z));
  // x0 = y1 = z0^2 = 1 on this chart, so affine x_k and xi_j are polynomial.
  std::map<std::string, MultiPoly> values;
  for (std::size_t k = 1; k <= n; ++k) values["x" + std::to_string(k)] = b.x[k];
  for (std::size_t j = 2; j <= n; ++j) values["xi" + std::to_string(j)] = b.y[j];

  PullbackCheck out;
  out.omega = forms.omega;
  out.pullback.chart = forms.omega.chart;
  out.pullback.coordinates = zs;
  out.pullback.coeffs.assign(zs.size(), MultiPoly(zs));
  for (std::size_t i = 0; i < forms.eta.coordinates.size(); ++i) {
    const MultiPoly a = forms.eta.coeffs[i].substitute(values).with_variables(zs);
    const MultiPoly& f = values.at(forms.eta.coordinates[i]);
    for (std::size_t k = 0; k < zs.size(); ++k) out.pullback.coeffs[k] += a * f.differentiate(zs[k]).with_variables(zs);
  }
  for (std::size_t k = 0; k < zs.size(); ++k) out.residuals.push_back(out.pullback.coeffs[k] - forms.omega.coeffs[k]);
  out.ok = all_zero(out.residuals);
  return out;
}

namespace {

PolyVector cross(const PolyVector& a, const PolyVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

PolyVector tangent_lines(const PolyVector& g, const std::string& t) { return normalize_vector(cross(g, differentiate(g, t))); }

MultiPoly wronskian(const PolyVector& g, const std::string& t) {
  const PolyVector d1 = differentiate(g, t);
  const PolyVector d2 = differentiate(d1, t);
  return determinant(PolyMatrix(std::vector<PolyVector>{g, d1, d2}));
}

Rational at_zero(const MultiPoly& p) { return p.constant_term(); }

MultiPoly rename(const MultiPoly& p, const std::string& from, const std::string& to) {
  return p.substitute({{from, MultiPoly::variable(to)}});
}

// Do two distinct roots t1 != t2 of the squarefree f satisfy D(t1, t2) = 0?
// D is given in terms of the parameter t through d0, d2: D = d0(t1) d2(t2) - d0(t2) d2(t1).
// Returns the final eliminant as witness (zero means such a pair exists).
MultiPoly pair_eliminant(const MultiPoly& f, const MultiPoly& d0, const MultiPoly& d2, const std::string& t) {
  const std::string a = t + "a";
  const std::string b = t + "b";
  const MultiPoly fa = rename(f, t, a);
  const MultiPoly fb = rename(f, t, b);
  const MultiPoly f2 = divide(fb - fa, MultiPoly::variable(b) - MultiPoly::variable(a));
  const MultiPoly dd = rename(d0, t, a) * rename(d2, t, b) - rename(d0, t, b) * rename(d2, t, a);
  if (dd.is_zero()) return MultiPoly::constant(Rational(0));
  const MultiPoly r = resultant(f2, dd, b);
  if (r.is_zero()) return r;
  return resultant(fa, r, a);
}

struct CurveData {
  std::string t;
  PolyVector g;
  PolyVector l;
  MultiPoly w;
  // the same objects in the chart t = 1/s, at s = 0
  PolyVector gi;
  PolyVector li;
  MultiPoly wi;
};

CurveData curve_data(const ParamVariety& c) {
  if (c.param_count() != 1 || c.coords().size() != 3) throw std::invalid_argument("genericity checks need a plane curve");
  CurveData d;
  d.t = c.params()[0];
  d.g = c.coords();
  d.l = tangent_lines(d.g, d.t);
  d.w = wronskian(d.g, d.t);
  const ParamVariety inv = invert_parameter(c);
  d.gi = inv.coords();
  d.li = tangent_lines(d.gi, d.t);
  d.wi = wronskian(d.gi, d.t);
  return d;
}

Hypothesis transversal(const CurveData& d) {
  Hypothesis h{1, "the curve meets {x0 = 0} transversally, at smooth points", true, ""};
  const MultiPoly& x0 = d.g[0];
  if (x0.is_zero()) return {1, h.statement, false, "x0 = 0 identically"};
  const MultiPoly g = gcd(x0, x0.differentiate(d.t));
  if (!g.is_constant()) return {1, h.statement, false, "gcd(x0, x0') = " + g.to_string()};
  const MultiPoly& y0 = d.gi[0];
  if (at_zero(y0).is_zero() && at_zero(y0.differentiate(d.t)).is_zero())
    return {1, h.statement, false, "tangent to {x0 = 0} at parameter infinity: " + y0.to_string()};
  if (x0.total_degree() >= 1) {
    const MultiPoly f = squarefree_part(x0, d.t);
    const MultiPoly e = pair_eliminant(f, d.g[1], d.g[2], d.t);
    if (e.is_zero()) return {1, h.statement, false, "two parameters of {x0 = 0} map to one point"};
    h.witness = "pair eliminant = " + e.to_string();
    if (at_zero(y0).is_zero()) {
      const MultiPoly q = d.g[2] * at_zero(d.gi[1]) - d.g[1] * at_zero(d.gi[2]);
      const MultiPoly r = q.is_zero() ? q : resultant(x0, q, d.t);
      if (r.is_zero()) return {1, h.statement, false, "the point at parameter infinity is also hit at a finite parameter"};
    }
  }
  return h;
}

Hypothesis tangents_avoid_p0(const CurveData& d) {
  const std::string s = "tangent lines at points of {x0 = 0} avoid (0:1:0)";
  if (d.l[1].is_zero()) return {2, s, false, "l1 = 0 identically"};
  const MultiPoly r = resultant(d.g[0], d.l[1], d.t);
  if (r.is_zero()) return {2, s, false, "Res(x0, l1) = 0"};
  if (at_zero(d.gi[0]).is_zero() && at_zero(d.li[1]).is_zero())
    return {2, s, false, "fails at parameter infinity"};
  return {2, s, true, "Res(x0, l1) = " + r.to_string()};
}

}  // namespace

ConormalLift conormal_lift(const ParamVariety& c) {
  if (c.param_count() != 1 || c.coords().size() != 3) throw std::invalid_argument("conormal lift needs a curve in P^2");
  const std::string& t = c.params()[0];
  const PolyVector l = cross(c.coords(), differentiate(c.coords(), t));
  if (all_zero(l)) throw std::invalid_argument("parametrization is constant");
  ConormalLift out{c, c.coords(), normalize_vector(l), false};
  out.is_line = std::all_of(out.line.begin(), out.line.end(), [](const MultiPoly& p) { return p.is_constant(); });
  return out;
}

ParamVariety theta_pushforward(const ConormalLift& l) {
  if (l.is_line) throw std::invalid_argument("the conormal variety of a line is a fibre; theta pushforward needs a non-line");
  if (l.point[0].is_zero() && l.line[1].is_zero()) throw std::invalid_argument("lift lies inside the center x0 = y1 = 0");
  return ParamVariety(l.base.params(), normalize_vector(theta_coords(l.point, l.line)));
}

bool GenericityReport::pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.pass; });
}

GenericityReport genericity_A(const ParamVariety& c) {
  const CurveData d = curve_data(c);
  GenericityReport out{'A', {transversal(d), tangents_avoid_p0(d)}};

  Hypothesis inflect{3, "tangent lines at inflection points avoid (0:1:0)", true, ""};
  if (d.w.is_zero()) {
    inflect.pass = false;
    inflect.witness = "curve is a line";
  } else {
    const MultiPoly g = gcd(d.w, d.l[1]);
    inflect.witness = "gcd(W, l1) = " + g.to_string();
    if (!g.is_constant()) inflect.pass = false;
    if (at_zero(d.wi).is_zero() && at_zero(d.li[1]).is_zero()) {
      inflect.pass = false;
      inflect.witness = "inflection at parameter infinity with tangent through (0:1:0)";
    }
  }
  out.hypotheses.push_back(inflect);

  Hypothesis p1{4, "the curve avoids (0:0:1)", true, ""};
  const MultiPoly r = d.g[0].is_zero() && d.g[1].is_zero() ? d.g[0] : resultant(d.g[0], d.g[1], d.t);
  p1.witness = "Res(x0, x1) = " + r.to_string();
  if (r.is_zero()) p1.pass = false;
  if (at_zero(d.gi[0]).is_zero() && at_zero(d.gi[1]).is_zero()) {
    p1.pass = false;
    p1.witness = "passes through (0:0:1) at parameter infinity";
  }
  out.hypotheses.push_back(p1);
  return out;
}

GenericityReport genericity_B(const ParamVariety& c) {
  const CurveData d = curve_data(c);
  GenericityReport out{'B', {transversal(d), tangents_avoid_p0(d)}};

  Hypothesis bi{3, "no bitangent passes through (0:1:0)", true, "l1 is constant"};
  if (d.l[1].is_zero()) {
    bi.pass = false;
    bi.witness = "l1 = 0 identically";
  } else if (d.l[1].total_degree() >= 1) {
    const MultiPoly f = squarefree_part(d.l[1], d.t);
    const MultiPoly e = pair_eliminant(f, d.l[0], d.l[2], d.t);
    bi.witness = "eliminant = " + e.to_string();
    if (e.is_zero()) bi.pass = false;
    if (bi.pass && at_zero(d.li[1]).is_zero()) {
      const MultiPoly q = d.l[2] * at_zero(d.li[0]) - d.l[0] * at_zero(d.li[2]);
      if (q.is_zero() || resultant(d.l[1], q, d.t).is_zero()) {
        bi.pass = false;
        bi.witness = "bitangent through (0:1:0) touching at parameter infinity";
      }
    }
  }
  out.hypotheses.push_back(bi);
  return out;
}

int parametric_curve_degree(const ParamVariety& x) {
  if (x.param_count() != 1) throw std::invalid_argument("degree computation needs a curve");
  const std::string& t = x.params()[0];
  const std::string h = t + "h";
  const int d = x.max_degree();
  PolyVector hom;
  for (const auto& c : x.coords()) {
    MultiPoly p(std::vector<std::string>{t, h});
    for (const auto& [e, v] : c.terms())
      p += MultiPoly::monomial({t, h}, {e[0], static_cast<std::uint32_t>(d) - e[0]}, v);
    hom.push_back(p);
  }
  const MultiPoly g = gcd(hom);
  return d - std::max(g.total_degree(), 0);
}

int hyperplane_section_count(const ParamVariety& x) {
  if (x.param_count() != 1) throw std::invalid_argument("section count needs a curve");
  const std::string& t = x.params()[0];
  const int d = x.max_degree();
  const std::size_t size = x.coords().size();
  std::vector<RationalVector> covectors(3, RationalVector(size));
  long f0 = 1;
  long f1 = 1;
  for (std::size_t i = 0; i < size; ++i) {
    const long li = static_cast<long>(i);
    covectors[0][i] = Rational(f0);
    covectors[1][i] = Rational(i % 2 == 0 ? li + 2 : -(li + 2));
    covectors[2][i] = Rational((li * li + 3) % 7 + 1);
    f0 = std::exchange(f1, f0 + f1);
  }
  int best = 0;
  for (const auto& c : covectors) {
    const MultiPoly p = pair(c, x.coords());
    if (p.is_zero()) continue;
    int count = p.is_constant() ? 0 : squarefree_part(p, t).total_degree();
    if (p.total_degree() < d) ++count;
    best = std::max(best, count);
  }
  return best;
}

ExpectedDegrees expected_degrees(long d, long g) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  const long max_genus = (d - 1) * (d - 2) / 2;
  if (g < 0 || g > max_genus) throw std::invalid_argument("genus out of range for this degree");
  ExpectedDegrees out;
  out.nodes = max_genus - g;
  out.dual_degree = d * (d - 1) - 2 * out.nodes;
  out.legendrian_degree = 3 * d + 2 * g - 2;
  return out;
}

}  // namespace oscdual
