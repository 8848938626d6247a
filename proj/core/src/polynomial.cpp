#include "symdyn/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  if (degree < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  r *= Rational(1) / leading();
  return r;
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Rational> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }
  const auto drop = static_cast<std::size_t>(-k);
  if (valuation() < -k) throw InvalidArgument("negative shift would drop nonzero terms");
  return Polynomial(std::vector<Rational>(c_.begin() + static_cast<long>(drop), c_.end()));
}

int Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

bool Polynomial::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r = Polynomial::constant(1);
  Polynomial base = p;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return p / gcd(p, p.derivative());
}

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  Rational lead = den.leading();
  num_ = num * (Rational(1) / lead);
  den_ = den.monic();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
  } else {
    *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("rational function division by zero");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw InvalidArgument("evaluation at a pole");
  return num_.evaluate(x) / d;
}

double RationalFunction::evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

SeriesPrefix series_expand(const RationalFunction& r, int K) {
  if (K < 0) throw InvalidArgument("negative truncation order");
  const Polynomial& N = r.numerator();
  const Polynomial& D = r.denominator();
  SeriesPrefix out;
  out.coefficients.assign(static_cast<std::size_t>(K) + 1, Rational(0));
  if (N.is_zero()) return out;

  // With t = 1/z, r = t^s * Nr(t) / Dr(t) where Nr, Dr have reversed
  // coefficients and Dr(0) = lead(D) != 0.
  const int dn = N.degree();
  const int dd = D.degree();
  const int s = dd - dn;
  const int order = K - s;
  std::vector<Rational> c;
  if (order >= 0) {
    c.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    const Rational d0 = D.leading();
    for (int n = 0; n <= order; ++n) {
      Rational acc = N.coeff(dn - n);
      for (int i = 1; i <= std::min(n, dd); ++i) acc -= D.coeff(dd - i) * c[static_cast<std::size_t>(n - i)];
      c[static_cast<std::size_t>(n)] = acc / d0;
    }
  }
  for (int n = 0; n <= K; ++n) {
    int idx = n - s;
    if (idx >= 0 && idx <= order) out.coefficients[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(idx)];
  }
  if (s < 0) {
    out.principal.assign(static_cast<std::size_t>(-s), Rational(0));
    for (int j = 1; j <= -s; ++j) {
      int idx = -j - s;
      if (idx <= order) out.principal[static_cast<std::size_t>(j - 1)] = c[static_cast<std::size_t>(idx)];
    }
  }
  return out;
}

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& q) {
  std::vector<Polynomial> seq;
  auto normalized = [](Polynomial p) {
    // Positive scaling keeps signs and curbs coefficient growth.
    Rational lead = p.leading();
    if (lead < 0) lead = -lead;
    return p * (Rational(1) / lead);
  };
  seq.push_back(normalized(q));
  if (q.degree() < 1) return seq;
  seq.push_back(normalized(q.derivative()));
  while (true) {
    Polynomial r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(normalized(r));
  }
  return seq;
}

int sign_of(const Rational& q) { return sgn(q); }

int variations(const std::vector<Polynomial>& seq, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = sign_of(p.evaluate(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int count_in(const std::vector<Polynomial>& seq, const Rational& lo, const Rational& hi) {
  return variations(seq, lo) - variations(seq, hi);
}

}  // namespace

int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (p.degree() == 0 || !(lo < hi)) return 0;
  return count_in(sturm_sequence(squarefree_part(p)), lo, hi);
}

double RootBracket::midpoint() const {
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

std::optional<RootBracket> isolate_largest_root(const Polynomial& p, const Rational& lo,
                                                const Rational& hi, const Rational& width) {
  if (p.is_zero()) throw InvalidArgument("root isolation of the zero polynomial");
  if (!(lo < hi)) throw InvalidArgument("empty root interval");
  if (width <= 0) throw InvalidArgument("non-positive tolerance");
  if (p.degree() == 0) return std::nullopt;
  const Polynomial q = squarefree_part(p);
  const auto seq = sturm_sequence(q);
  Rational a = lo;
  Rational b = hi;
  if (count_in(seq, a, b) == 0) return std::nullopt;
  if (q.evaluate(b) == 0) return RootBracket{b, b};
  while (count_in(seq, a, b) > 1) {
    Rational mid = (a + b) / 2;
    if (count_in(seq, mid, b) >= 1) {
      a = mid;
    } else {
      b = mid;
    }
  }
  // Exactly one simple root of q in (a, b).
  if (q.evaluate(b) == 0) return RootBracket{b, b};
  const int sb = sign_of(q.evaluate(b));
  while (b - a > width) {
    Rational mid = (a + b) / 2;
    int sm = sign_of(q.evaluate(mid));
    if (sm == 0) return RootBracket{mid, mid};
    if (sm == sb) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return RootBracket{a, b};
}

std::optional<double> largest_real_root(const Polynomial& p, double lo, double hi, double tol) {
  auto br = isolate_largest_root(p, to_rational(lo), to_rational(hi), to_rational(tol));
  if (!br) return std::nullopt;
  return br->midpoint();
}

std::optional<double> largest_real_pole(const RationalFunction& r, double lo, double hi, double tol) {
  return largest_real_root(r.denominator(), lo, hi, tol);
}

Rational to_rational(double x) {
  Rational q(x);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace symdyn
