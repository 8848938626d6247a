#include "symdyn/poly_matrix.hpp"

#include <utility>

namespace symdyn {

namespace {

template <class T>
void require_square(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
}

}  // namespace

Polynomial determinant(const PolyMatrix& m_in) {
  require_square(m_in);
  const std::size_t n = m_in.rows();
  if (n == 0) return Polynomial::constant(1);
  PolyMatrix m = m_in;
  Polynomial prev = Polynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return Polynomial();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Polynomial();
    }
    prev = m(k, k);
  }
  Polynomial d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Rational determinant(const RationalMatrix& m_in) {
  require_square(m_in);
  RationalMatrix m = m_in;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

LinearSolve polymatrix_solve(const RFMatrix& p, const std::vector<RationalFunction>& rhs) {
  require_square(p);
  const std::size_t n = p.rows();
  if (rhs.size() != n) throw InvalidArgument("right-hand side size mismatch");
  RFMatrix m = p;
  std::vector<RationalFunction> b = rhs;
  RationalFunction det = RationalFunction::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    // Prefer the pivot of lowest total degree to keep entries small.
    std::size_t piv = n;
    int best = 0;
    for (std::size_t r = k; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      int size = m(r, k).numerator().degree() + m(r, k).denominator().degree();
      if (piv == n || size < best) {
        piv = r;
        best = size;
      }
    }
    if (piv == n) throw SingularMatrix("polynomial matrix is singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(b[k], b[piv]);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      RationalFunction f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j)
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
      if (!b[k].is_zero()) b[i] -= f * b[k];
      m(i, k) = RationalFunction();
    }
  }
  std::vector<RationalFunction> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    RationalFunction acc = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j)
      if (!m(ii, j).is_zero() && !x[j].is_zero()) acc -= m(ii, j) * x[j];
    x[ii] = acc / m(ii, ii);
  }
  return {std::move(x), std::move(det)};
}

LinearSolve polymatrix_solve_first_column(const RFMatrix& p) {
  std::vector<RationalFunction> e(p.rows());
  if (!e.empty()) e[0] = RationalFunction::constant(1);
  return polymatrix_solve(p, e);
}

RationalMatrix inverse(const RationalMatrix& m_in) {
  require_square(m_in);
  const std::size_t n = m_in.rows();
  RationalMatrix m = m_in;
  RationalMatrix inv = RationalMatrix::identity(n, Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) throw SingularMatrix("rational matrix is singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    Rational d = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RationalMatrix evaluate(const RFMatrix& m, const Rational& z) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(z);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace symdyn
