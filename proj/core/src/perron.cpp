#include "symdyn/perron.hpp"

#include <algorithm>
#include <cmath>

#include "symdyn/error.hpp"

namespace symdyn {

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("matrix is not square");
  const std::size_t n = a.rows();
  RationalMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Rational t = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      Rational u = h(r, m - 1) / t;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::constant(1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (Polynomial::z() - Polynomial::constant(h(m - 1, m - 1))) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t == 0) break;
      p[m] -= p[m - i - 1] * (t * h(m - i - 1, m - 1));
    }
  }
  return p[n];
}

namespace {

RationalMatrix submatrix(const DirectedGraph& g, const std::vector<std::size_t>& vs) {
  RationalMatrix m(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) m(i, j) = g.count(vs[i], vs[j]);
  return m;
}

std::vector<std::vector<std::size_t>> components(const DirectedGraph& g) {
  std::size_t ncomp = 0;
  auto comp = strongly_connected_components(g, &ncomp);
  std::vector<std::vector<std::size_t>> members(ncomp);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);
  return members;
}

// Collatz-Wielandt bracket for the spectral radius of one strong component,
// from power iteration on the primitive matrix A + I.
std::pair<double, double> component_bracket(const DirectedGraph& g, const std::vector<std::size_t>& vs) {
  const std::size_t k = vs.size();
  std::vector<double> x(k, 1.0), y(k);
  double lo = 0, hi = 0;
  for (int it = 0; it < 20000; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < k; ++j) acc += g.count(vs[i], vs[j]) * x[j];
      y[i] = acc;
    }
    lo = INFINITY;
    hi = 0;
    double norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      norm = std::max(norm, y[i]);
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
    if (hi - lo < 1e-13 * hi) break;
  }
  return {lo - 1.0, hi - 1.0};
}

}  // namespace

Polynomial characteristic_polynomial(const DirectedGraph& g) {
  Polynomial chi = Polynomial::constant(1);
  for (const auto& vs : components(g)) chi *= characteristic_polynomial(submatrix(g, vs));
  return chi;
}

PerronEstimate perron_estimate(const DirectedGraph& g, double tol) {
  std::optional<double> root;
  double lower = 0, upper = 0;
  for (const auto& vs : components(g)) {
    const bool cyclic = vs.size() > 1 || g.count(vs[0], vs[0]) > 0;
    if (!cyclic) continue;
    unsigned long max_row = 0;
    for (std::size_t i : vs) {
      unsigned long s = 0;
      for (std::size_t j : vs) s += g.count(i, j);
      max_row = std::max(max_row, s);
    }
    auto r = largest_real_root(characteristic_polynomial(submatrix(g, vs)), 0.0, static_cast<double>(max_row), tol);
    if (!r) throw Error("strong component without a positive eigenvalue");
    if (!root || *r > *root) root = r;
    auto [lo, hi] = component_bracket(g, vs);
    lower = std::max(lower, lo);
    upper = std::max(upper, hi);
  }
  if (!root) throw Unsupported("matrix is nilpotent: the shift is empty");
  const double slack = 1e-9 * std::max(1.0, *root);
  if (*root < lower - slack || *root > upper + slack)
    throw Error("Perron root " + std::to_string(*root) + " outside power-iteration bracket");
  return {*root, lower, upper};
}

double perron_root(const DirectedGraph& g, double tol) { return perron_estimate(g, tol).root; }

}  // namespace symdyn
