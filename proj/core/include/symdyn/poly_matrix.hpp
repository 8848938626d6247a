#pragma once

#include <cstddef>
#include <vector>

#include "symdyn/error.hpp"
#include "symdyn/polynomial.hpp"

namespace symdyn {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;
using RFMatrix = Matrix<RationalFunction>;

// Fraction-free (Bareiss) determinant.
Polynomial determinant(const PolyMatrix& m);
Rational determinant(const RationalMatrix& m);

// Solves P x = rhs by Gaussian elimination over the rational-function field.
// Throws SingularMatrix when det(P) vanishes identically.
struct LinearSolve {
  std::vector<RationalFunction> solution;
  RationalFunction determinant;
};
LinearSolve polymatrix_solve(const RFMatrix& p, const std::vector<RationalFunction>& rhs);

// Column 0 of P^{-1}.
LinearSolve polymatrix_solve_first_column(const RFMatrix& p);

RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix evaluate(const RFMatrix& m, const Rational& z);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace symdyn
