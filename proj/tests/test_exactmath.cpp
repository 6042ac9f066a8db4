#include <algorithm>

#include "doctest.h"
#include "oscdual/linalg.hpp"
#include "oscdual/multipoly.hpp"
#include "test_support.hpp"

using namespace oscdual;
using oscdual::testing::P;
using oscdual::testing::PolyGen;

TEST_CASE("rational canonical form") {
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(4, -6).denominator() == 3);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("polynomial text grammar") {
  const MultiPoly p = P("t1^3 + t2^3 - 1/2*t1");
  CHECK(p.variables() == std::vector<std::string>{"t1", "t2"});
  CHECK(p.to_string() == "t1^3 + t2^3 - 1/2*t1");
  CHECK(P("-3/2*t^2").to_string() == "-3/2*t^2");
  CHECK(P("2*t*s - s*t") == P("s*t"));
  CHECK(P("0").is_zero());
  CHECK(P("t10 + t2").variables() == std::vector<std::string>{"t2", "t10"});
  CHECK_THROWS_AS(P("t +"), std::invalid_argument);
  CHECK_THROWS_AS(P("T"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse("x + y", {"x"}), std::invalid_argument);

  PolyGen gen(7);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly q = gen.poly({"a", "b1", "c"}, 4, 5);
    CHECK(MultiPoly::parse(q.to_string(), q.variables()) == q);
  }
}

TEST_CASE("differentiate examples") {
  CHECK(P("t^3").differentiate("t") == P("3*t^2"));
  CHECK(P("t1^3 + t2^3").differentiate("t1") == P("3*t1^2", {"t1", "t2"}));
  // (2 - d)/2 * t^d with d = 3
  CHECK(P("-1/2*t^3").differentiate("t") == P("-3/2*t^2"));
  CHECK_THROWS_AS(P("t^2").differentiate("s"), std::invalid_argument);
}

TEST_CASE("product rule holds exactly") {
  PolyGen gen(11);
  const std::vector<std::string> vars{"s", "t"};
  for (int i = 0; i < 40; ++i) {
    const MultiPoly p = gen.poly(vars, 4, 4);
    const MultiPoly q = gen.poly(vars, 4, 4);
    for (const auto& v : vars)
      CHECK((p * q).differentiate(v) == p.differentiate(v) * q + p * q.differentiate(v));
  }
}

TEST_CASE("exact division and gcd") {
  const MultiPoly a = P("t^2 - 1");
  CHECK(divide(a, P("t - 1")) == P("t + 1"));
  CHECK_FALSE(divide_exact(a, P("t - 2")).has_value());
  CHECK(gcd(P("t^2 - 1"), P("t^2 + 2*t + 1")) == P("t + 1"));
  CHECK(gcd(P("2*s*t + 2*t^2"), P("3*s^2 - 3*t^2")) == P("s + t"));
  CHECK(gcd(P("t^2 + 1"), P("t")).is_constant());

  PolyGen gen(3);
  const std::vector<std::string> vars{"s", "t"};
  for (int i = 0; i < 25; ++i) {
    const MultiPoly f = gen.poly(vars, 2, 3);
    const MultiPoly g = gen.poly(vars, 2, 3);
    const MultiPoly h = gen.poly(vars, 2, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const MultiPoly d = gcd(f * h, g * h);
    CHECK(divide_exact(f * h, d).has_value());
    CHECK(divide_exact(g * h, d).has_value());
    CHECK(divide_exact(d, h.normalized()).has_value());
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("1 + t^2"), P("1 - t^2"), "t") == MultiPoly::constant(Rational(4)));
  CHECK(resultant(P("t"), P("t"), "t").is_zero());
  CHECK(resultant(P("t - 1"), P("t + 1"), "t") == MultiPoly::constant(Rational(2)));
  CHECK_THROWS_AS(resultant(P("0"), P("0"), "t"), std::invalid_argument);
  // Eliminating t from a bivariate system leaves a polynomial in s.
  CHECK(resultant(P("t - s"), P("t^2 - 2"), "t") == P("s^2 - 2", {"s", "t"}));
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
  PolyGen gen(5);
  int common = 0;
  for (int i = 0; i < 60; ++i) {
    MultiPoly p = gen.poly({"t"}, 3, 3);
    MultiPoly q = gen.poly({"t"}, 3, 3);
    if (i % 3 == 0) {
      const MultiPoly shared = gen.poly({"t"}, 1, 2);
      p *= shared;
      q *= shared;
    }
    if (p.is_zero() || q.is_zero()) continue;
    const bool res_zero = resultant(p, q, "t").is_zero();
    const bool gcd_nonconst = !gcd(p, q).is_constant();
    CHECK(res_zero == gcd_nonconst);
    common += gcd_nonconst ? 1 : 0;
  }
  CHECK(common > 5);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P("t^3 - 3*t + 2"), "t") ==
        P("t^2 + t - 2"));
  CHECK(squarefree_part(P("1 + t^2"), "t") == P("t^2 + 1"));
  CHECK(squarefree_part(P("t^3"), "t") == P("t"));
  CHECK(squarefree_part(P("-4*t^2 + 8*t - 4"), "t") == P("t - 1"));
  CHECK_THROWS_AS(squarefree_part(P("0"), "t"), std::invalid_argument);
}

TEST_CASE("ff_rank_kernel examples") {
  const PolyMatrix id = PolyMatrix::from_rationals(identity_matrix(3));
  const auto r1 = ff_rank_kernel(id);
  CHECK(r1.rank == 3);
  CHECK(r1.kernel.empty());

  const PolyMatrix jet({{P("1"), P("t"), P("t^2")}, {P("0"), P("1"), P("2*t")}});
  const auto r2 = ff_rank_kernel(jet);
  CHECK(r2.rank == 2);
  REQUIRE(r2.kernel.size() == 1);
  CHECK(r2.kernel[0] == PolyVector{P("t^2"), P("-2*t"), P("1")});

  const PolyMatrix zero(2, 2);
  const auto r3 = ff_rank_kernel(zero);
  CHECK(r3.rank == 0);
  REQUIRE(r3.kernel.size() == 2);
  CHECK(r3.kernel[0] == PolyVector{P("1"), P("0")});
  CHECK(r3.kernel[1] == PolyVector{P("0"), P("1")});
}

TEST_CASE("kernel vectors annihilate and rank matches minors") {
  PolyGen gen(17);
  const std::vector<std::string> vars{"t"};
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
    std::vector<PolyVector> data(rows, PolyVector(cols));
    for (auto& row : data)
      for (auto& e : row) e = gen.integer(0, 2) == 0 ? MultiPoly(vars) : gen.poly(vars, 2, 2);
    // Force dependencies now and then.
    if (rows > 2 && trial % 2 == 0)
      for (std::size_t c = 0; c < cols; ++c) data[2][c] = data[0][c] * P("t + 1") - data[1][c];
    const PolyMatrix m(data);
    const RankKernel rk = ff_rank_kernel(m);
    CHECK(rk.rank + rk.kernel.size() == cols);
    for (const auto& u : rk.kernel)
      for (const auto& z : multiply(m, u)) CHECK(z.is_zero());
    std::size_t minor_rank = 0;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      const auto minors = all_minors(m, k);
      if (std::any_of(minors.begin(), minors.end(), [](const Minor& x) { return !x.value.is_zero(); }))
        minor_rank = k;
    }
    CHECK(minor_rank == rk.rank);
  }
}

TEST_CASE("all_minors examples") {
  const PolyMatrix m2({{P("a"), P("b")}, {P("c"), P("d")}});
  const auto d = all_minors(m2, 2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].value == P("a*d - b*c"));

  const PolyMatrix jet({{P("1"), P("t"), P("t^2"), P("t^3")},
                        {P("0"), P("1"), P("2*t"), P("3*t^2")},
                        {P("0"), P("0"), P("2"), P("6*t")}});
  const auto minors = all_minors(jet, 3);
  REQUIRE(minors.size() == 4);
  // Column sets {0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}.
  CHECK(minors[0].value == P("2"));
  CHECK(minors[1].value == P("6*t"));
  CHECK(minors[2].value == P("6*t^2"));
  CHECK(minors[3].value == P("2*t^3"));

  const auto ones = all_minors(m2, 1);
  REQUIRE(ones.size() == 4);
  CHECK(ones[3].value == P("d"));
  CHECK_THROWS_AS(all_minors(m2, 3), std::invalid_argument);
}

TEST_CASE("operations are deterministic") {
  PolyGen g1(99);
  PolyGen g2(99);
  for (int i = 0; i < 10; ++i) {
    const MultiPoly a = g1.poly({"s", "t"}, 3, 4);
    const MultiPoly b = g2.poly({"s", "t"}, 3, 4);
    CHECK(a.to_string() == b.to_string());
    CHECK(gcd(a * a, a).to_string() == gcd(b * b, b).to_string());
  }
}

TEST_CASE("rational linear algebra") {
  const RationalMatrix m{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(determinant(m) == Rational(-2));
  CHECK(multiply(m, inverse(m)) == identity_matrix(2));
  const auto k = kernel(RationalMatrix{{Rational(1), Rational(2), Rational(3)}}, 3);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == RationalVector{Rational(2), Rational(-1), Rational(0)});
  CHECK_THROWS_AS(inverse(RationalMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}),
                  std::domain_error);
}
