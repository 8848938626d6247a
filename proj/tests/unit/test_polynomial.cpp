#include <doctest.h>

#include <cmath>
#include <random>

#include "symdyn/error.hpp"
#include "symdyn/polynomial.hpp"

using namespace symdyn;

namespace {

Polynomial random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

}  // namespace

TEST_SUITE("poly-ring") {
  TEST_CASE("arithmetic") {
    Polynomial p{-1, -1, 1};  // z^2 - z - 1
    CHECK(p.degree() == 2);
    CHECK(Polynomial().degree() == -1);
    CHECK((p * Polynomial{1, 1}) == Polynomial{-1, -2, 0, 1});
    CHECK(p.derivative() == Polynomial{-1, 2});
    CHECK(p.str() == "z^2 - z - 1");
    CHECK(Polynomial{0, 0, 3}.valuation() == 2);
    CHECK(Polynomial{0, 1}.shifted(2) == Polynomial::monomial(3));
    CHECK(p.evaluate(Rational(2)) == 1);
    CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), InvalidArgument);
  }

  TEST_CASE("division identity a = q b + r on random inputs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      auto a = random_poly(rng, 1 + t % 7), b = random_poly(rng, 1 + t % 4);
      auto [q, r] = Polynomial::divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }

  TEST_CASE("gcd divides both and is monic") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
      auto c = random_poly(rng, 1 + t % 3);
      auto a = c * random_poly(rng, 2), b = c * random_poly(rng, 3);
      auto g = gcd(a, b);
      CHECK(g.leading() == 1);
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      CHECK((g % c.monic()).is_zero());
    }
    CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  }

  TEST_CASE("squarefree part") {
    Polynomial p = pow(Polynomial{-1, 1}, 3) * Polynomial{-1, -1, 1};
    CHECK(squarefree_part(p) == (Polynomial{-1, 1} * Polynomial{-1, -1, 1}));
  }

  TEST_CASE("rational functions reduce") {
    RationalFunction r(Polynomial{0, 1, 1}, Polynomial{0, -1, 1});  // (z^2+z)/(z^2-z)
    CHECK(r.numerator() == Polynomial{1, 1});
    CHECK(r.denominator() == Polynomial{-1, 1});
    CHECK((r - r).is_zero());
    CHECK(r.evaluate(Rational(3)) == 2);
    CHECK_THROWS_AS(RationalFunction(Polynomial{1}, Polynomial()), InvalidArgument);
  }

  TEST_CASE("series expansion in 1/z") {
    // (z^2 + z)/(z^2 - z - 1) = 1 + 2/z + 3/z^2 + 5/z^3 + ...
    RationalFunction f(Polynomial{0, 1, 1}, Polynomial{-1, -1, 1});
    auto s = series_expand(f, 10);
    std::vector<long> fib{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    for (std::size_t i = 0; i < fib.size(); ++i) CHECK(s.coefficients[i] == fib[i]);
    CHECK(s.principal.empty());
    auto t = series_expand(RationalFunction(Polynomial{0, 0, 2}, Polynomial{-1, 1}), 3);  // 2z^2/(z-1)
    REQUIRE(t.principal.size() == 1);
    CHECK(t.principal[0] == 2);
    CHECK(t.coefficients[0] == 2);
    CHECK(t.coefficients[3] == 2);
  }

  TEST_CASE("Sturm root counts") {
    Polynomial p = Polynomial{-1, 1} * Polynomial{-2, 1} * Polynomial{-2, 1} * Polynomial{3, 1};
    CHECK(count_roots(p, Rational(0), Rational(5)) == 2);
    CHECK(count_roots(p, Rational(-5), Rational(5)) == 3);
    CHECK(count_roots(p, Rational(1), Rational(2)) == 1);  // (1, 2]
    CHECK(count_roots(Polynomial{1, 0, 1}, Rational(-9), Rational(9)) == 0);
  }

  TEST_CASE("largest real roots") {
    auto phi = largest_real_root(Polynomial{-1, -1, 1}, 0.0, 2.0);
    REQUIRE(phi);
    CHECK(*phi == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    auto plastic = largest_real_root(Polynomial{-1, -1, 0, 1}, 1.0, 2.0);
    REQUIRE(plastic);
    CHECK(std::fabs(*plastic * *plastic * *plastic - *plastic - 1) < 1e-11);
    // Double root at 1 is found.
    auto one = largest_real_root(Polynomial{1, -2, 1}, 0.0, 2.0);
    REQUIRE(one);
    CHECK(*one == doctest::Approx(1.0));
    CHECK_FALSE(largest_real_root(Polynomial{1, 0, 1}, -3.0, 3.0));
    auto exact = isolate_largest_root(Polynomial{-2, 1}, Rational(0), Rational(4), Rational(1, 1024));
    REQUIRE(exact);
    CHECK(exact->lo <= 2);
    CHECK(exact->hi >= 2);
    auto inexact = isolate_largest_root(Polynomial{-2, 0, 1}, Rational(0), Rational(4), Rational(1, 1024));
    REQUIRE(inexact);
    CHECK(inexact->lo * inexact->lo < 2);
    CHECK(inexact->hi * inexact->hi >= 2);
    CHECK(inexact->hi - inexact->lo <= Rational(1, 1024));
  }

  TEST_CASE("largest pole ignores cancelled factors") {
    RationalFunction r(Polynomial{-1, -1, 1} * Polynomial{-3, 1}, Polynomial{-1, -1, 1} * Polynomial{-3, 1} * Polynomial{-1, 1});
    auto p = largest_real_pole(r, 0.0, 5.0);
    REQUIRE(p);
    CHECK(*p == doctest::Approx(1.0));
  }

  TEST_CASE("rational round trip") {
    CHECK(to_rational(0.5) == Rational(1, 2));
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(2)) == "2");
  }
}
