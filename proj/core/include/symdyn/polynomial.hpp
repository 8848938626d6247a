#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace symdyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Univariate polynomial in z with exact rational coefficients, ascending
// order, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = 1);
  static Polynomial z() { return monomial(1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }

  // Throws on division by the zero polynomial.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  Polynomial operator/(const Polynomial& b) const { return divmod(*this, b).first; }
  Polynomial operator%(const Polynomial& b) const { return divmod(*this, b).second; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // Multiply by z^k (k may be negative only if the low coefficients vanish).
  Polynomial shifted(int k) const;
  // Lowest index with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  bool is_integral() const;

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned k);
Polynomial squarefree_part(const Polynomial& p);

// numerator/denominator in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial p);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  bool operator==(const RationalFunction& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

  // Throws if x is a pole.
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  std::string str(const std::string& var = "z") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

// Expansion sum_{n>=0} a_n z^{-n} plus a polynomial part in positive powers.
struct SeriesPrefix {
  std::vector<Rational> coefficients;  // a_0 .. a_K
  std::vector<Rational> principal;     // principal[j-1] is the coefficient of z^j
};

SeriesPrefix series_expand(const RationalFunction& r, int K);

// Number of distinct real roots of p in (lo, hi].
int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

struct RootBracket {
  Rational lo;
  Rational hi;  // the root lies in (lo, hi]; lo == hi means exact
  double midpoint() const;
};

// Largest real root in (lo, hi], bracketed to width <= width.
std::optional<RootBracket> isolate_largest_root(const Polynomial& p, const Rational& lo,
                                                const Rational& hi, const Rational& width);

std::optional<double> largest_real_root(const Polynomial& p, double lo, double hi, double tol = 1e-12);

// Largest real root of the reduced denominator in (lo, hi].
std::optional<double> largest_real_pole(const RationalFunction& r, double lo, double hi,
                                        double tol = 1e-12);

Rational to_rational(double x);
std::string to_string(const Rational& q);

}  // namespace symdyn
