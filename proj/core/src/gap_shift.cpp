#include "symdyn/gap_shift.hpp"

#include <algorithm>

#include "symdyn/error.hpp"

namespace symdyn {

GapSet::GapSet(std::vector<bool> preperiod, std::vector<bool> period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InvalidArgument("gap set period must be nonempty");
  canonicalize();
}

void GapSet::canonicalize() {
  const std::size_t q = period_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < q && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

GapSet GapSet::finite(const std::vector<unsigned>& elements) {
  std::vector<bool> pre;
  for (unsigned e : elements) {
    if (e >= pre.size()) pre.resize(e + 1, false);
    pre[e] = true;
  }
  return GapSet(std::move(pre), {false});
}

GapSet GapSet::eventually_periodic(const std::string& preperiod, const std::string& period) {
  auto bits = [](const std::string& s) {
    std::vector<bool> b;
    for (char c : s) {
      if (c != '0' && c != '1') throw InvalidArgument("gap set bits must be 0/1: \"" + s + "\"");
      b.push_back(c == '1');
    }
    return b;
  };
  return GapSet(bits(preperiod), bits(period));
}

GapSet GapSet::multiples(unsigned d, unsigned offset) {
  if (d == 0) throw InvalidArgument("period must be positive");
  std::vector<bool> period(d, false);
  period[0] = true;
  return GapSet(std::vector<bool>(offset, false), std::move(period));
}

bool GapSet::contains(unsigned long n) const {
  if (n < pre_.size()) return pre_[n];
  return period_[(n - pre_.size()) % period_.size()];
}

bool GapSet::empty() const {
  return is_finite() && std::none_of(pre_.begin(), pre_.end(), [](bool b) { return b; });
}

std::optional<unsigned long> GapSet::max() const {
  if (!is_finite() || empty()) return std::nullopt;
  for (std::size_t i = pre_.size(); i-- > 0;)
    if (pre_[i]) return i;
  return std::nullopt;
}

std::optional<unsigned long> GapSet::least_at_least(unsigned long n) const {
  const unsigned long limit = std::max<unsigned long>(n, pre_.size()) + period_.size();
  for (unsigned long i = n; i < limit; ++i)
    if (contains(i)) return i;
  return std::nullopt;
}

std::vector<unsigned long> GapSet::elements_below(unsigned long n) const {
  std::vector<unsigned long> out;
  for (unsigned long i = 0; i < n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

GapSet GapSet::complement() const {
  std::vector<bool> pre = pre_, per = period_;
  pre.flip();
  per.flip();
  return GapSet(std::move(pre), std::move(per));
}

GapSet GapSet::shifted(unsigned long m) const {
  if (m <= pre_.size()) return GapSet(std::vector<bool>(pre_.begin() + static_cast<long>(m), pre_.end()), period_);
  std::vector<bool> per = period_;
  std::rotate(per.begin(), per.begin() + static_cast<long>((m - pre_.size()) % per.size()), per.end());
  return GapSet({}, std::move(per));
}

GapSet GapSet::below(unsigned long n) const {
  std::vector<bool> pre(n);
  for (unsigned long i = 0; i < n; ++i) pre[i] = contains(i);
  return GapSet(std::move(pre), {false});
}

std::string GapSet::str() const {
  auto bits = [](const std::vector<bool>& b) {
    std::string s;
    for (bool x : b) s.push_back(x ? '1' : '0');
    return s;
  };
  if (is_finite()) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < pre_.size(); ++i) {
      if (!pre_[i]) continue;
      s += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
    return s + "}";
  }
  return bits(pre_) + "(" + bits(period_) + ")";
}

RationalFunction gap_series(const GapSet& s) {
  // T_S = [(z^Q - 1) sum_n p_n z^{P-1-n} + sum_j q_j z^{Q-1-j}] / (z^P (z^Q - 1))
  const int P = static_cast<int>(s.preperiod().size());
  const int Q = static_cast<int>(s.period().size());
  Polynomial head, tail;
  for (int n = 0; n < P; ++n)
    if (s.preperiod()[static_cast<std::size_t>(n)]) head += Polynomial::monomial(P - 1 - n);
  for (int j = 0; j < Q; ++j)
    if (s.period()[static_cast<std::size_t>(j)]) tail += Polynomial::monomial(Q - 1 - j);
  Polynomial zq1 = Polynomial::monomial(Q) - Polynomial::constant(1);
  return RationalFunction(zq1 * head + tail, Polynomial::monomial(P) * zq1);
}

double sgap_entropy(const GapSet& s, double tol) {
  if (s.empty()) return 0.0;
  RationalFunction f = RationalFunction::constant(1) - gap_series(s);
  auto r = largest_real_root(f.numerator(), 1.0, 2.0, tol);
  return r ? *r : 1.0;
}

bool sgap_allows(const GapSet& s, const Word& w) {
  if (s.empty()) return false;
  for (Symbol a : w.symbols())
    if (a > 1) return false;
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 1) ones.push_back(i);
  auto fits_boundary = [&](unsigned long run) { return run == 0 || s.least_at_least(run).has_value(); };
  if (ones.empty()) return fits_boundary(w.size());
  for (std::size_t k = 1; k < ones.size(); ++k)
    if (!s.contains(ones[k] - ones[k - 1] - 1)) return false;
  return fits_boundary(ones.front()) && fits_boundary(w.size() - 1 - ones.back());
}

LabeledGraph sgap_presentation(const GapSet& s) {
  if (s.empty()) throw InvalidArgument("S-gap shift needs a nonempty gap set");
  std::vector<LabeledEdge> edges;
  if (s.is_finite()) {
    const std::size_t M = *s.max();
    for (std::size_t i = 0; i < M; ++i) edges.push_back({i, i + 1, 0});
    for (std::size_t i = 0; i <= M; ++i)
      if (s.contains(i)) edges.push_back({i, 0, 1});
    return LabeledGraph(M + 1, 2, std::move(edges));
  }
  const std::size_t P = s.preperiod().size();
  const std::size_t n = P + s.period().size();
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 0});
  edges.push_back({n - 1, P, 0});
  for (std::size_t i = 0; i < n; ++i)
    if (s.contains(i)) edges.push_back({i, 0, 1});
  return LabeledGraph(n, 2, std::move(edges));
}

LabeledGraph dgap_presentation(unsigned d) {
  if (d < 1) throw InvalidArgument("d-gap shift needs d >= 1");
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i < d; ++i) edges.push_back({i, (i + 1) % d, 0});
  edges.push_back({0, 0, 1});
  return LabeledGraph(d, 2, std::move(edges));
}

NormalizedWord normalize_wtilde(const GapSet& s, const Word& w) {
  if (!sgap_allows(s, w)) throw InvalidArgument("word " + w.str() + " does not occur in the S-gap shift");
  std::size_t first = w.size(), last = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 1) {
      first = std::min(first, i);
      last = i;
    }
  if (first == w.size()) throw Unsupported("all-zero word has no normalized form");
  const unsigned long a = first;
  const unsigned long b = w.size() - 1 - last;
  NormalizedWord out;
  out.leading = a == 0 ? 0 : *s.least_at_least(a);
  out.trailing = b == 0 ? 0 : *s.least_at_least(b);
  out.boundary_in_gaps = (a == 0 || s.contains(a)) && (b == 0 || s.contains(b));
  out.wtilde = Word::repeat(0, out.leading) + w.substr(first, last - first + 1) + Word::repeat(0, out.trailing);
  if (a > 0 && b > 0) {
    out.m = std::nullopt;
  } else if (a > 0) {
    out.m = out.leading;
  } else if (b > 0) {
    out.m = out.trailing;
  } else {
    out.m = 0;
  }
  return out;
}

}  // namespace symdyn
