#include <algorithm>

#include "doctest.h"
#include "oscdual/projective.hpp"
#include "test_support.hpp"

using namespace oscdual;
using oscdual::testing::P;
using oscdual::testing::PolyGen;
using oscdual::testing::PV;
using oscdual::testing::RM;
using oscdual::testing::RV;
using oscdual::testing::X;

TEST_CASE("proj_equal examples") {
  CHECK(proj_equal(ProjPoint::from_rationals(RV({1, 2, 3})), ProjPoint::from_rationals(RV({2, 4, 6}))));
  CHECK_FALSE(proj_equal(ProjPoint::from_rationals(RV({1, 0, 0})), ProjPoint::from_rationals(RV({0, 1, 0}))));
  CHECK(proj_equal(ProjPoint(PV({"t", "t^2"}, {"t"})), ProjPoint(PV({"1", "t"}, {"t"}))));
  CHECK_THROWS_AS(proj_equal(ProjPoint::from_rationals(RV({1, 2})), ProjPoint::from_rationals(RV({1, 2, 3}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(ProjPoint::from_rationals(RV({0, 0})), std::invalid_argument);
}

TEST_CASE("proj_equal is an equivalence relation") {
  PolyGen gen(3);
  const std::vector<std::string> vars{"t"};
  for (int i = 0; i < 30; ++i) {
    PolyVector a;
    for (int k = 0; k < 4; ++k) a.push_back(gen.poly(vars, 3, 3));
    if (std::all_of(a.begin(), a.end(), [](const MultiPoly& p) { return p.is_zero(); })) continue;
    MultiPoly s1 = gen.poly(vars, 2, 2);
    MultiPoly s2 = gen.poly(vars, 2, 2);
    if (s1.is_zero() || s2.is_zero()) continue;
    PolyVector b;
    PolyVector c;
    for (const auto& x : a) {
      b.push_back(x * s1);
      c.push_back(x * s1 * s2);
    }
    CHECK(proj_equal(a, a));
    CHECK(proj_equal(a, b) == proj_equal(b, a));
    CHECK(proj_equal(a, b));
    CHECK(proj_equal(b, c));
    CHECK(proj_equal(a, c));
    PolyVector d = a;
    d[0] += MultiPoly::constant(Rational(1), vars);
    CHECK(proj_equal(a, d) == proj_equal(d, a));
  }
}

TEST_CASE("apply_map examples") {
  const ParamVariety cubic = X({"t"}, {"1", "t", "t^2", "t^3"});
  CHECK(proj_equal(apply_map(ProjMap::identity(3), cubic), cubic));
  const ParamVariety rev = apply_map(ProjMap::reversal(3), cubic);
  CHECK(rev.coords() == PV({"t^3", "t^2", "t", "1"}, {"t"}));
  CHECK(proj_equal(invert_parameter(rev), cubic));
  const ParamVariety diag = apply_map(ProjMap::diagonal(RV({1, 1, 1, -1})), cubic);
  CHECK(diag.coords() == PV({"1", "t", "t^2", "-t^3"}, {"t"}));
  CHECK_THROWS_AS(apply_map(ProjMap::identity(2), cubic), std::invalid_argument);
  CHECK_THROWS_AS(ProjMap(RM({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("apply_map composes") {
  PolyGen gen(17);
  const ParamVariety cubic = X({"t"}, {"1", "t", "t^2", "t^3"});
  int tested = 0;
  while (tested < 20) {
    RationalMatrix a(4, RationalVector(4));
    RationalMatrix b(4, RationalVector(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a[i][j] = gen.rational(3);
        b[i][j] = gen.rational(3);
      }
    if (determinant(a).is_zero() || determinant(b).is_zero()) continue;
    const ProjMap m1(a);
    const ProjMap m2(b);
    CHECK(proj_equal(apply_map(m2, apply_map(m1, cubic)), apply_map(m2.compose(m1), cubic)));
    ++tested;
  }
  CHECK(ProjMap(RM({{2, 0}, {0, 2}})) == ProjMap::identity(1));
}

TEST_CASE("parametrizations drop common factors") {
  const ParamVariety x = X({"t"}, {"t", "t^2"});
  CHECK(x.coords() == PV({"1", "t"}, {"t"}));
  CHECK_THROWS_AS(X({"t"}, {"0", "0"}), std::invalid_argument);
  CHECK_THROWS_AS(X({"t"}, {"s", "1"}), std::invalid_argument);
  CHECK(X({"t"}, {"1", "t", "t^2", "t^3"}).is_generic_immersion());
  CHECK_FALSE(X({"s", "t"}, {"1", "s + t", "s^2 + 2*s*t + t^2"}).is_generic_immersion());
}

TEST_CASE("hyperplane containment") {
  const auto h = hyperplane_containment(X({"t"}, {"1", "t", "0", "0"}));
  REQUIRE(h.size() == 2);
  CHECK(h[0] == RV({0, 0, 1, 0}));
  CHECK(h[1] == RV({0, 0, 0, 1}));
  CHECK(hyperplane_containment(X({"t"}, {"1", "t", "t^2", "t^3"})).empty());
  CHECK(hyperplane_containment(X({"t"}, {"t^4 - 1", "-t^4 - 1", "2*t^3 - 2*t", "t^3 + t"})).empty());

  PolyGen gen(5);
  for (int i = 0; i < 20; ++i) {
    PolyVector v;
    for (int k = 0; k < 3; ++k) v.push_back(gen.poly({"t"}, 3, 3));
    if (std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); })) continue;
    v.push_back(v[0] * Rational(2) - v[2]);
    const ParamVariety x({"t"}, v);
    const auto hs = hyperplane_containment(x);
    CHECK_FALSE(hs.empty());
    for (const auto& c : hs) CHECK(pair(c, x.coords()).is_zero());
  }
}

TEST_CASE("span of rows") {
  const ParamVariety cubic = X({"t"}, {"1", "t", "t^2", "t^3"});
  const auto s = span_of_rows(cubic.first_jet(), {{"t", Rational(1)}});
  CHECK(s.dimension() == 2);
  CHECK(s.basis.to_rationals() == RM({{1, 1, 1, 1}, {0, 1, 2, 3}}));
  CHECK(span_of_rows(PolyMatrix::from_rationals(RM({{1, 0, 0, 0}})), {}).dimension() == 1);
  std::vector<PolyVector> rows{cubic.coords(), differentiate(cubic.coords(), "t"),
                               differentiate(differentiate(cubic.coords(), "t"), "t")};
  const auto s2 = span_of_rows(PolyMatrix(rows), {{"t", Rational(0)}});
  CHECK(s2.dimension() == 3);
  CHECK(s2.basis.to_rationals() == RM({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}}));
  CHECK_THROWS_AS(span_of_rows(PolyMatrix(std::vector<PolyVector>{PV({"t", "t^2"}, {"t"})}), {{"t", Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("find_linear_map recovers a known map") {
  const ParamVariety cubic = X({"t"}, {"1", "t", "t^2", "t^3"});
  const RationalMatrix m = RM({{1, 2, 0, 0}, {0, 1, 0, 3}, {0, 0, 1, 0}, {1, 0, 0, 1}});
  const ParamVariety image(cubic.params(), ProjMap(m).apply(cubic.coords()));
  const auto found = find_linear_map(cubic, image);
  REQUIRE(found);
  CHECK(*found == m);
  CHECK_FALSE(find_linear_map(cubic, X({"t"}, {"1", "t^4", "t", "t^2"})));
}
