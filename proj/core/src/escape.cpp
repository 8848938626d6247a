#include "symdyn/escape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symdyn/error.hpp"
#include "symdyn/language.hpp"
#include "symdyn/perturbation.hpp"

namespace symdyn {

namespace {

Word rotate_left(const Word& w, std::size_t k) {
  k %= w.size();
  return w.substr(k, w.size() - k) + w.prefix(k);
}

}  // namespace

EventuallyPeriodicPoint::EventuallyPeriodicPoint(Word preperiod, Word period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InvalidArgument("period must be nonempty");
  const std::size_t p = period_.size();
  for (std::size_t d = 1; d < p; ++d)
    if (p % d == 0 && rotate_left(period_, d) == period_) {
      period_ = period_.prefix(d);
      break;
    }
  while (!pre_.empty() && pre_.back() == period_.back()) {
    period_ = rotate_left(period_, period_.size() - 1);
    pre_ = pre_.prefix(pre_.size() - 1);
  }
}

EventuallyPeriodicPoint EventuallyPeriodicPoint::parse(const std::string& preperiod, const std::string& period) {
  return EventuallyPeriodicPoint(Word::parse(preperiod), Word::parse(period));
}

Symbol EventuallyPeriodicPoint::at(std::size_t i) const {
  return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
}

Word EventuallyPeriodicPoint::prefix(std::size_t n) const {
  std::vector<Symbol> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = at(i);
  return Word(std::move(s));
}

EventuallyPeriodicPoint EventuallyPeriodicPoint::shift(std::size_t m) const {
  if (m <= pre_.size()) return EventuallyPeriodicPoint(pre_.substr(m, pre_.size() - m), period_);
  return EventuallyPeriodicPoint(Word(), rotate_left(period_, m - pre_.size()));
}

std::size_t EventuallyPeriodicPoint::min_alphabet() const {
  return std::max(pre_.min_alphabet(), period_.min_alphabet());
}

std::string EventuallyPeriodicPoint::str() const { return pre_.str() + "(" + period_.str() + ")^inf"; }

std::optional<std::size_t> point_relation(const EventuallyPeriodicPoint& x, const EventuallyPeriodicPoint& y) {
  const std::size_t bound = x.preperiod().size() + x.period().size();
  for (std::size_t m = 1; m <= bound; ++m)
    if (x.shift(m) == y) return m;
  return std::nullopt;
}

RationalFunction alpha_entry(const EventuallyPeriodicPoint& xi, const EventuallyPeriodicPoint& xj) {
  std::optional<std::size_t> d0;
  if (xi == xj)
    d0 = 0;
  else
    d0 = point_relation(xj, xi);
  if (!d0) return RationalFunction();
  // (1/z) z^{-d0}, summed over the period of x_i when it is periodic.
  RationalFunction base(Polynomial::constant(1), Polynomial::monomial(static_cast<int>(*d0 + 1)));
  if (!xi.is_periodic()) return base;
  const auto s = static_cast<unsigned>(xi.least_period());
  return base * RationalFunction(Polynomial::monomial(static_cast<int>(s)), Polynomial::monomial(static_cast<int>(s)) - Polynomial::constant(1));
}

RFMatrix alpha_matrix(const std::vector<EventuallyPeriodicPoint>& points) {
  const std::size_t k = points.size();
  RFMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = alpha_entry(points[i], points[j]);
  return a;
}

namespace {

void check_points(const std::vector<EventuallyPeriodicPoint>& points, std::size_t alphabet) {
  if (points.empty()) throw InvalidArgument("need at least one point");
  if (alphabet < 2) throw InvalidArgument("alphabet size must be at least 2");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].min_alphabet() > alphabet) throw InvalidArgument("point uses a symbol outside the alphabet");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j]) throw InvalidArgument("points must be distinct");
  }
}

}  // namespace

LocalRate local_rate(const std::vector<EventuallyPeriodicPoint>& points, std::size_t alphabet) {
  check_points(points, alphabet);
  const std::size_t k = points.size();
  LocalRate r;
  r.alphabet = alphabet;
  r.alpha = evaluate(alpha_matrix(points), Rational(static_cast<long>(alphabet)));
  r.diagonally_dominant = true;
  for (std::size_t i = 0; i < k; ++i) {
    Rational off = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) off += abs(r.alpha(i, j));
    if (!(off < abs(r.alpha(i, i)))) r.diagonally_dominant = false;
  }
  r.alpha_invertible = determinant(r.alpha) != 0;
  if (!r.alpha_invertible) return r;
  auto inv = inverse(r.alpha);
  r.t = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r.t += inv(i, j);
  r.lambda = r.t / Rational(static_cast<long>(alphabet));
  r.rho = r.lambda / Rational(static_cast<long>(k));
  return r;
}

std::vector<LambdaRow> lambda_sequence(const std::vector<EventuallyPeriodicPoint>& points, std::size_t alphabet,
                                       std::size_t n_lo, std::size_t n_hi, double tol) {
  check_points(points, alphabet);
  if (n_lo < 1 || n_hi < n_lo) throw InvalidArgument("bad n range");
  const std::size_t k = points.size();
  const Rational big_n(static_cast<long>(alphabet));
  std::vector<LambdaRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    std::vector<Word> words;
    for (const auto& p : points) words.push_back(p.prefix(n));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (words[i] == words[j]) throw InvalidArgument("prefixes of length " + std::to_string(n) + " coincide");
    RFMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = RationalFunction(correlate(words[j], words[i]).polynomial());
    auto sol = polymatrix_solve(m, std::vector<RationalFunction>(k, RationalFunction::constant(1)));
    RationalFunction s;
    for (const auto& x : sol.solution) s += x;
    RationalFunction f = RationalFunction(Polynomial::z() - Polynomial::constant(big_n)) + s;
    Rational nn = 1;
    for (std::size_t i = 0; i < n; ++i) nn *= big_n;
    const Rational width = Rational(1) / (nn * Rational(Integer(1) << 50));
    auto br = isolate_largest_root(f.numerator(), Rational(0), big_n, width);
    if (!br) throw Unsupported("no root of z - N + s_n(z) in (0, N]");
    LambdaRow row;
    row.n = n;
    const Rational mid = (br->lo + br->hi) / 2;
    row.lambda = mid.get_d();
    const double drop = Rational((big_n - mid) / big_n).get_d();
    row.scaled_gap = -std::log1p(-drop) * nn.get_d();
    EngineOptions opt;
    opt.oracle = false;
    auto engine = full_shift_gf(alphabet, ForbiddenSet(words), opt);
    row.engine_lambda = engine.lambda;
    row.engines_agree = std::fabs(engine.lambda - row.lambda) <= tol;
    rows.push_back(row);
  }
  return rows;
}

double escape_rate(std::size_t alphabet, const std::vector<Word>& forbidden) {
  if (alphabet < 1) throw InvalidArgument("alphabet size must be positive");
  if (forbidden.empty()) return 0.0;
  auto k = reduce_forbidden(forbidden);
  auto res = full_shift_gf(alphabet, ForbiddenSet(k));
  if (res.empty || res.lambda <= 0) return std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(alphabet)) - std::log(res.lambda);
}

}  // namespace symdyn
