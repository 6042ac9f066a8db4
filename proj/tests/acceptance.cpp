// Acceptance criteria. With no argument all eight run; with a number only that one.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "oscdual/bryant.hpp"
#include "oscdual/catalog.hpp"
#include "test_support.hpp"

using namespace oscdual;
using oscdual::testing::PolyGen;
using oscdual::testing::X;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<std::string> names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Outcome bryant_map() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    o.require(verify_pullback(n).ok, "pullback n=" + std::to_string(n));

    const auto zn = names("z", 2 * n);
    PolyVector z;
    for (const auto& s : zn) z.push_back(MultiPoly::variable(s, zn));
    const IncidencePoint b = beta_point(ProjPoint(z));
    o.require(proj_equal(theta_coords(b.x.coords(), b.y.coords()), z), "theta(beta(z)) n=" + std::to_string(n));

    std::vector<std::string> all = names("x", n + 1);
    for (const auto& s : names("y", n + 1)) all.push_back(s);
    PolyVector x;
    PolyVector y;
    for (std::size_t i = 0; i <= n; ++i) {
      x.push_back(MultiPoly::variable("x" + std::to_string(i), all));
      y.push_back(MultiPoly::variable("y" + std::to_string(i), all));
    }
    x[0] = MultiPoly::constant(Rational(1), all);
    MultiPoly s(all);
    for (std::size_t i = 1; i <= n; ++i) s += x[i] * y[i];
    y[0] = -s;
    const IncidencePoint back = beta_point(ProjPoint(theta_coords(x, y)));
    o.require(proj_equal(back.x.coords(), x) && proj_equal(back.y.coords(), y), "beta(theta(x,y)) n=" + std::to_string(n));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    o.require(ms < 1000, "n=" + std::to_string(n) + " took " + std::to_string(ms) + " ms");
  }
  if (o.ok) o.detail = "pullback and both round trips exact for n = 2, 3, 4";
  return o;
}

Outcome monomial_duality() {
  Outcome o;
  int count = 0;
  int forms = 0;
  for (int c = 3; c <= 8; ++c)
    for (int b = 2; b < c; ++b)
      for (int a = 1; a < b; ++a) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        const MonomialSpec s{a, b, c};
        const std::string tag = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
        const MonomialWitness w = monomial_selfduality_witness(s);
        o.require(w.dual_exponents == monomial_dual_exponents(s).exponents, "exponents " + tag);
        o.require(w.certified, "witness " + tag);
        const auto direct = monomial_contact_form(s);
        const ContactSearch search = find_contact_form(monomial_curve(s));
        o.require(direct.has_value() == (c == a + b), "iff criterion " + tag);
        o.require(direct.has_value() == search.form.has_value(), "search agreement " + tag);
        if (direct && search.form) o.require(proportional(*direct, *search.form), "form mismatch " + tag);
        ++count;
        forms += direct.has_value();
      }
  if (o.ok) o.detail = std::to_string(count) + " curves, " + std::to_string(forms) + " with contact forms";
  return o;
}

SkewForm paper_matrix(long a, long b, long c) {
  RationalMatrix m(4, RationalVector(4));
  m[0][3] = Rational(a - b);
  m[3][0] = Rational(b - a);
  m[1][2] = Rational(c);
  m[2][1] = Rational(-c);
  return SkewForm(m);
}

Outcome twisted_cubic() {
  Outcome o;
  const ParamVariety x = monomial_curve({1, 2, 3});
  const SkewForm b = paper_matrix(1, 2, 3);
  o.require(legendrian_check(x, b).legendrian, "legendrian_check");
  const SelfDualReport r = selfdual_certificate(x, b);
  o.require(r.selfdual && r.residuals.empty(), "selfdual_certificate: " + r.message);
  o.require(proj_equal(osculating_dual(x).coords(), oscdual::testing::PV({"-t^3", "3*t^2", "-3*t", "1"}, {"t"})),
            "osculating plane");
  o.require(proj_equal(polarity(b).apply(x.coords()), osculating_dual(x).coords()), "B v(t)");
  if (o.ok) o.detail = "Osc^2 = (-t^3 : 3t^2 : -3t : 1) = B v(t), zero residuals";
  return o;
}

Outcome curve_construction() {
  Outcome o;
  const ParamVariety conic = X({"t"}, {"1 + t^2", "1 - t^2", "2*t"});
  o.require(genericity_A(conic).pass(), "Lemma A");
  o.require(genericity_B(conic).pass(), "Lemma B");
  const ParamVariety c = theta_pushforward(conormal_lift(conic));
  o.require(legendrian_check(c, standard_B(2)).legendrian, "Legendrian");
  o.require(hyperplane_containment(c).empty(), "hyperplane");
  const int deg = parametric_curve_degree(c);
  o.require(deg == 4 && hyperplane_section_count(c) == 4, "degree " + std::to_string(deg));
  o.require(deg == 2 + expected_degrees(2, 0).dual_degree, "deg X + deg X*");
  o.require(expected_degrees(2, 0).legendrian_degree == 4, "(2,0)");
  o.require(expected_degrees(3, 1).legendrian_degree == 9, "(3,1)");
  if (o.ok) o.detail = "conic passes A and B; pushforward degree 4; formulas give 4 and 9";
  return o;
}

Outcome genericity_sensitivity() {
  Outcome o;
  const ParamVariety parabola = X({"t"}, {"1", "t", "t^2"});
  const GenericityReport a = genericity_A(parabola);
  o.require(!a.pass(), "parabola passes Lemma A");
  std::string failed;
  for (const auto& h : a.hypotheses)
    if (!h.pass) failed += (failed.empty() ? "" : ",") + std::to_string(h.index);
  const int deg = parametric_curve_degree(theta_pushforward(conormal_lift(parabola)));
  o.require(deg == 3, "pushforward degree " + std::to_string(deg));
  if (o.ok) o.detail = "Lemma A hypotheses (" + failed + ") fail; pushforward degree 3 != 4";
  return o;
}

Outcome hypersurface_family() {
  Outcome o;
  for (int d : {3, 4}) {
    const std::string f = "x2^" + std::to_string(d) + " + x3^" + std::to_string(d);
    const ParamVariety x = hypersurface_family_curve(3, MultiPoly::parse(f));
    const SkewForm b = standard_B(3);
    o.require(legendrian_check(x, b).legendrian, "Legendrian d=" + std::to_string(d));
    o.require(hyperplane_containment(x).empty(), "hyperplane d=" + std::to_string(d));
    o.require(generic_osculating_dim(x, 2) - x.param_count() == 2, "generic dim Phi^2 d=" + std::to_string(d));
    o.require(second_fundamental_form(x, {{"x2", Rational(1)}, {"x3", Rational(2)}}).dim() == 2,
              "dim Phi^2 at (1,2) d=" + std::to_string(d));
    o.require(selfdual_certificate(x, b).selfdual, "selfdual d=" + std::to_string(d));
  }
  if (o.ok) o.detail = "d = 3, 4: Legendrian, spanning, dim Phi^2 = 2, self-dual";
  return o;
}

Outcome v_family_check() {
  Outcome o;
  std::string found;
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::string tag = " k=" + std::to_string(k);
    const ParamVariety v = v_family(k);
    o.require(generic_osculating_dim(v, 2) == 2 * k, "dim Osc^2" + tag);
    const VFamilyWitness w = v_family_witness(k);
    o.require(w.correction_in_span, "correction term" + tag);
    o.require(w.certified, "shear witness" + tag);
    const ContactSearch s = find_contact_form(v);
    if (s.form) {
      const bool leg = legendrian_check(v, *s.form).legendrian;
      found += ";" + tag + ": nondegenerate form found (solution dim " + std::to_string(s.solution_dim) +
               ", Pfaffian " + s.generic_pfaffian.to_string() + ", Legendrian " + (leg ? "yes" : "no") + ")";
    }
    o.require(!s.form && s.generic_pfaffian.is_zero(), "find_contact_form returned a form" + tag);
  }
  o.detail += found;
  if (o.ok) o.detail = "Osc^2 = 2k, P in span, witness certified, no contact form";
  return o;
}

Outcome property_suites() {
  Outcome o;
  PolyGen gen(20240611);

  // (a) Legendrian catalog entries
  std::vector<std::pair<ParamVariety, SkewForm>> legendrian;
  for (int c = 3; c <= 8; ++c)
    for (int b = 2; b < c; ++b)
      for (int a = 1; a < b; ++a)
        if (std::gcd(std::gcd(a, b), c) == 1)
          if (const auto f = monomial_contact_form({a, b, c})) legendrian.emplace_back(monomial_curve({a, b, c}), *f);
  for (const auto& [n, f] : std::vector<std::pair<std::size_t, std::string>>{
           {2, "t^3"}, {3, "x2^3 + x3^3"}, {3, "x2^4 + x3^4"}, {3, "x2^2*x3"}, {4, "x2^3 + x3^3 + x4^3"}})
    legendrian.emplace_back(hypersurface_family_curve(n, MultiPoly::parse(f)), standard_B(n));
  for (std::size_t k = 2; k <= 3; ++k)
    if (const auto s = find_contact_form(v_family(k)); s.form) legendrian.emplace_back(v_family(k), *s.form);
  for (const auto& [x, b] : legendrian) {
    if (!legendrian_check(x, b).legendrian) {
      o.require(false, "(a) entry not Legendrian");
      continue;
    }
    for (int i = 0; i < 5; ++i) {
      ParamValues at;
      for (const auto& p : x.params()) at[p] = gen.rational() + Rational(1, 7);
      o.require(osculating_space(x, 2, at).dimension() - 1 <= 2 * b.n() - 2, "(a) dim Osc^2 too large");
    }
  }

  // (b) dual annihilates the jet
  int curves = 0;
  while (curves < 25) {
    PolyVector v;
    for (int i = 0; i < 4; ++i) v.push_back(gen.poly({"t"}, 6, 4));
    try {
      const ParamVariety x({"t"}, v);
      if (generic_osculating_dim(x, 2) != 2) continue;
      const ParamVariety h = osculating_dual(x);
      const JetMatrix j = jet_matrix(x, 2);
      for (std::size_t r = 0; r < j.matrix.rows(); ++r) o.require(dot(h.coords(), j.matrix.row(r)).is_zero(), "(b) h . jet");
      ++curves;
    } catch (const std::invalid_argument&) {
    }
  }

  // (c) pushforwards of random plane curves
  int plane = 0;
  while (plane < 25) {
    PolyVector g;
    for (int i = 0; i < 3; ++i) g.push_back(gen.poly({"t"}, 4, 4));
    try {
      const ConormalLift l = conormal_lift(ParamVariety({"t"}, g));
      if (l.is_line) continue;
      const ParamVariety c = theta_pushforward(l);
      o.require(standard_B(2).pairing(c.coords(), differentiate(c.coords(), "t")).is_zero(), "(c) B(v,v')");
      ++plane;
    } catch (const std::invalid_argument&) {
    }
  }

  // (d) a planar Legendrian curve is a line: it reduces to a point
  const ParamVariety line = X({"t"}, {"1", "0", "t", "0"});
  for (const auto& h : hyperplane_containment(line)) {
    const ConeReduction r = cone_reduction(line, standard_B(2), h);
    o.require(r.reduced.max_degree() == 0 && r.b1.is_nondegenerate(), "(d) cone reduction");
  }
  if (o.ok)
    o.detail = std::to_string(legendrian.size()) + " Legendrian entries, " + std::to_string(curves) +
               " random duals, " + std::to_string(plane) + " random pushforwards, line reduces to a point";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_ms;
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Bryant map", 3000, bryant_map},
      {2, "monomial duality", 5000, monomial_duality},
      {3, "twisted cubic certificate", 1000, twisted_cubic},
      {4, "curve construction and degree", 2000, curve_construction},
      {5, "genericity sensitivity", 1000, genericity_sensitivity},
      {6, "hypersurface family", 10000, hypersurface_family},
      {7, "V_k family", 30000, v_family_check},
      {8, "property suites", 60000, property_suites},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > c.limit_ms) o.require(false, "over time limit");
    std::printf("criterion %d (%s): %s in %.1f ms: %s\n", c.number, c.name, o.ok ? "PASS" : "FAIL", ms, o.detail.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
