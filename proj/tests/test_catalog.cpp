#include <numeric>

#include "doctest.h"
#include "oscdual/catalog.hpp"
#include "test_support.hpp"

using namespace oscdual;
using oscdual::testing::P;
using oscdual::testing::PV;
using oscdual::testing::X;

namespace {

std::vector<MonomialSpec> specs_up_to(int cmax) {
  std::vector<MonomialSpec> out;
  for (int c = 3; c <= cmax; ++c)
    for (int b = 2; b < c; ++b)
      for (int a = 1; a < b; ++a)
        if (std::gcd(std::gcd(a, b), c) == 1) out.push_back({a, b, c});
  return out;
}

}  // namespace

TEST_CASE("monomial curves") {
  CHECK(monomial_curve({1, 2, 3}).coords() == PV({"1", "t", "t^2", "t^3"}, {"t"}));
  CHECK(monomial_curve({1, 2, 4}).coords() == PV({"1", "t", "t^2", "t^4"}, {"t"}));
  CHECK_THROWS_AS(monomial_curve({2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(monomial_curve({2, 4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(monomial_curve({0, 1, 2}), std::invalid_argument);

  const auto e123 = monomial_dual_exponents({1, 2, 3});
  CHECK(e123.exponents == std::array<int, 4>{0, 1, 2, 3});
  CHECK(e123.symmetric);
  const auto e124 = monomial_dual_exponents({1, 2, 4});
  CHECK(e124.exponents == std::array<int, 4>{0, 2, 3, 4});
  CHECK_FALSE(e124.symmetric);
  const auto e235 = monomial_dual_exponents({2, 3, 5});
  CHECK(e235.exponents == std::array<int, 4>{0, 2, 3, 5});
  CHECK(e235.symmetric);
}

TEST_CASE("monomial contact forms") {
  const auto f123 = monomial_contact_form({1, 2, 3});
  REQUIRE(f123);
  CHECK(f123->matrix()[0][3] == Rational(-1));
  CHECK(f123->matrix()[1][2] == Rational(3));
  CHECK(legendrian_check(monomial_curve({1, 2, 3}), *f123).legendrian);
  CHECK_FALSE(monomial_contact_form({1, 2, 4}));
  const auto f235 = monomial_contact_form({2, 3, 5});
  REQUIRE(f235);
  CHECK(f235->matrix()[0][3] == Rational(-1));
  CHECK(f235->matrix()[1][2] == Rational(5));
  CHECK(Rational(5) * f235->matrix()[0][3] + Rational(3 - 2) * f235->matrix()[1][2] == Rational(0));
}

TEST_CASE("monomial forms agree with the general search") {
  for (const auto& s : specs_up_to(8)) {
    CAPTURE(s.a);
    CAPTURE(s.b);
    CAPTURE(s.c);
    const auto direct = monomial_contact_form(s);
    const auto search = find_contact_form(monomial_curve(s));
    CHECK(direct.has_value() == search.form.has_value());
    CHECK(search.solution_dim == (direct ? 1u : 0u));
    if (direct && search.form) {
      CHECK(proportional(*direct, *search.form));
      CHECK(selfdual_certificate(monomial_curve(s), *direct).selfdual);
    }
  }
}

TEST_CASE("every monomial curve is osculating self-dual by reversal") {
  for (const auto& s : specs_up_to(8)) {
    CAPTURE(s.a);
    CAPTURE(s.b);
    CAPTURE(s.c);
    const auto w = monomial_selfduality_witness(s);
    CHECK(w.dual_exponents == monomial_dual_exponents(s).exponents);
    CHECK(w.certified);
  }
  const auto w = monomial_selfduality_witness({1, 2, 3});
  CHECK(proj_equal(w.dual.coords(), PV({"-t^3", "3*t^2", "-3*t", "1"}, {"t"})));
}

TEST_CASE("hypersurface family") {
  const auto c = hypersurface_family_curve(2, P("t^3"));
  CHECK(c.coords() == PV({"1", "1/2*t^3", "t", "-3/2*t^2"}, {"t"}));
  CHECK(legendrian_check(c, standard_B(2)).legendrian);

  const auto s = hypersurface_family_curve(3, P("x2^3 + x3^3"));
  CHECK(s.coords().size() == 6);
  CHECK(second_fundamental_form(s, {{"x2", Rational(1)}, {"x3", Rational(1)}}).dim() == 2);

  const auto m = hypersurface_family_curve(3, P("x2^2*x3"));
  CHECK(m.coords().size() == 6);
  CHECK(legendrian_check(m, standard_B(3)).legendrian);
  CHECK(hypersurface_family_curve(3, P("x2^3")).params() == std::vector<std::string>{"x2", "x3"});

  CHECK_THROWS_AS(hypersurface_family_curve(2, P("t^3 + t")), std::invalid_argument);
  CHECK_THROWS_AS(hypersurface_family_curve(2, P("t^2")), std::invalid_argument);
  CHECK_THROWS_AS(hypersurface_family_curve(3, P("a^3 + b^3 + c^3")), std::invalid_argument);
}

TEST_CASE("hypersurface family is Legendrian") {
  const std::vector<std::pair<std::size_t, std::string>> cases{
      {2, "t^3"},          {2, "-2/3*t^5"},        {3, "x2^3 + x3^3"},           {3, "x2^2*x3 - x3^3"},
      {3, "x2^4 + 2*x2*x3^3"}, {4, "x2*x3*x4"}, {4, "x2^3 + x3^3 + x4^3"}, {4, "x2^2*x4^2 - 5*x3^4"}};
  for (const auto& [n, f] : cases) {
    CAPTURE(f);
    const auto x = hypersurface_family_curve(n, P(f));
    CHECK(legendrian_check(x, standard_B(n)).legendrian);
  }
  // the opposite sign in the z1 entry breaks integrality
  const ParamVariety flipped = X({"t"}, {"1", "-1/2*t^3", "t", "-3/2*t^2"});
  CHECK(legendrian_check(flipped, standard_B(2)).residuals[0] == P("-3*t^2"));
}

TEST_CASE("fermat hypersurface curves are self-dual") {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::string f;
    for (std::size_t k = 2; k <= n; ++k) f += (f.empty() ? "" : " + ") + std::string("x") + std::to_string(k) + "^3";
    const auto x = hypersurface_family_curve(n, P(f));
    const auto r = selfdual_certificate(x, standard_B(n));
    CHECK(r.selfdual);
    CHECK(r.osc2_generic_dim == 2 * n - 2);
  }
}

TEST_CASE("V family") {
  CHECK(v_family(2).coords() == PV({"1", "t1", "t2", "t1^2", "t2^2", "t1^3 + t2^3"}, {"t1", "t2"}));
  CHECK(v_family(3).coords().size() == 8);
  CHECK_THROWS_AS(v_family(1), std::invalid_argument);
  for (std::size_t k = 2; k <= 3; ++k) {
    CHECK(generic_osculating_dim(v_family(k), 2) == 2 * k);
    const auto w = v_family_witness(k);
    CHECK(w.correction_in_span);
    CHECK(w.certified);
    REQUIRE(w.map);
  }
}

TEST_CASE("V family contact forms") {
  // B(d_i v, d_j v) = 0 leaves p_{0,2k+1} and p_{i,k+i} free enough for a nondegenerate form
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto v = v_family(k);
    const auto s = find_contact_form(v);
    CHECK(s.solution_dim == 1);
    REQUIRE(s.form);
    CHECK(s.form->matrix()[0][2 * k + 1] != Rational(0));
    for (std::size_t i = 1; i <= k; ++i) CHECK(s.form->matrix()[i][k + i] == Rational(-3) * s.form->matrix()[0][2 * k + 1]);
    CHECK(selfdual_certificate(v, *s.form).selfdual);
  }
}

TEST_CASE("catalog names") {
  CHECK(catalog_entry("monomial:1,2,3").coords() == monomial_curve({1, 2, 3}).coords());
  CHECK(catalog_entry("hypersurface:3:x2^3 + x3^3").coords().size() == 6);
  CHECK(catalog_entry("vfamily:2").coords() == v_family(2).coords());
  CHECK_THROWS_AS(catalog_entry("monomial:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_entry("monomial:1,x,3"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_entry("vfamily:1"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_entry("sphere:2"), std::invalid_argument);
}
