#pragma once

#include "symdyn/graph.hpp"
#include "symdyn/poly_matrix.hpp"
#include "symdyn/polynomial.hpp"

namespace symdyn {

// det(zI - A), as the product of the strong components' characteristic
// polynomials (Hessenberg reduction over Q).
Polynomial characteristic_polynomial(const DirectedGraph& g);
Polynomial characteristic_polynomial(const RationalMatrix& a);

struct PerronEstimate {
  double root;
  // Collatz-Wielandt bracket from power iteration on each strong component.
  double lower;
  double upper;
};

// Spectral radius of A: the largest real root of det(zI - A), checked
// against power iteration. Throws if A is nilpotent (no cycles).
PerronEstimate perron_estimate(const DirectedGraph& g, double tol = 1e-12);
double perron_root(const DirectedGraph& g, double tol = 1e-12);

}  // namespace symdyn
