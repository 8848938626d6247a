#include <doctest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "symdyn/error.hpp"
#include "symdyn/perron.hpp"
#include "symdyn/poly_matrix.hpp"

using namespace symdyn;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t n, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("poly-ring") {
  TEST_CASE("rational determinant matches Laplace expansion") {
    std::mt19937 rng(3);
    for (int t = 0; t < 60; ++t) {
      auto m = random_matrix(rng, 1 + t % 5);
      CHECK(determinant(m) == oracle::laplace_det(m));
    }
  }

  TEST_CASE("Bareiss determinant of zI - A is the characteristic polynomial") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + t % 5;
      auto a = random_matrix(rng, n, 0, 2);
      PolyMatrix p(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = Polynomial::constant(-a(i, j)) + (i == j ? Polynomial::z() : Polynomial());
      CHECK(determinant(p).coefficients() == oracle::faddeev_charpoly(a));
      CHECK(characteristic_polynomial(a).coefficients() == oracle::faddeev_charpoly(a));
    }
  }

  TEST_CASE("inverse and solve") {
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
      auto m = random_matrix(rng, 2 + t % 3);
      if (determinant(m) == 0) continue;
      auto inv = inverse(m);
      CHECK(m * inv == RationalMatrix::identity(m.rows(), Rational(1)));
    }
    RFMatrix p(2, 2);
    p(0, 0) = RationalFunction(Polynomial{0, 1});
    p(0, 1) = RationalFunction::constant(1);
    p(1, 0) = RationalFunction::constant(1);
    p(1, 1) = RationalFunction(Polynomial{0, 1});
    auto sol = polymatrix_solve(p, {RationalFunction::constant(1), RationalFunction::constant(1)});
    // [[z,1],[1,z]] x = 1 gives x_i = 1/(z+1).
    CHECK(sol.solution[0] == RationalFunction(Polynomial{1}, Polynomial{1, 1}));
    CHECK(sol.determinant == RationalFunction(Polynomial{-1, 0, 1}));
    RFMatrix s(2, 2, RationalFunction::constant(1));
    CHECK_THROWS_AS(polymatrix_solve(s, {RationalFunction::constant(1), RationalFunction()}), SingularMatrix);
  }
}

TEST_SUITE("graph") {
  TEST_CASE("characteristic polynomial of graphs") {
    DirectedGraph golden({{1, 1}, {1, 0}});
    CHECK(characteristic_polynomial(golden) == Polynomial{-1, -1, 1});
    // Reducible: two loops and a connecting edge.
    DirectedGraph red({{2, 1}, {0, 1}});
    CHECK(characteristic_polynomial(red) == (Polynomial{-2, 1} * Polynomial{-1, 1}));
  }

  TEST_CASE("Perron root with Collatz-Wielandt bracket") {
    auto e = perron_estimate(DirectedGraph({{1, 1}, {1, 0}}));
    CHECK(e.root == doctest::Approx(1.6180339887498949).epsilon(1e-12));
    CHECK(e.lower <= e.root + 1e-9);
    CHECK(e.upper >= e.root - 1e-9);
    CHECK(perron_root(DirectedGraph::bouquet(2)) == doctest::Approx(2.0));
    // Period two: power iteration on A alone would not settle.
    CHECK(perron_root(DirectedGraph({{0, 2}, {1, 0}})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(perron_root(DirectedGraph({{0, 1}, {0, 0}})), Unsupported);
  }

  TEST_CASE("Perron root agrees with power iteration on random irreducible graphs") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<unsigned> d(0, 2);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 2 + t % 4;
      std::vector<std::vector<unsigned>> a(n, std::vector<unsigned>(n));
      for (auto& row : a)
        for (auto& x : row) x = d(rng);
      for (std::size_t i = 0; i < n; ++i) a[i][(i + 1) % n] = std::max(1u, a[i][(i + 1) % n]);
      std::vector<std::vector<double>> ad(n, std::vector<double>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ad[i][j] = a[i][j];
      DirectedGraph g(a);
      CHECK(is_irreducible(g));
      CHECK(perron_root(g) == doctest::Approx(oracle::power_radius(ad)).epsilon(1e-9));
    }
  }
}
