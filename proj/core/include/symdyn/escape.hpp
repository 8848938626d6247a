#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/poly_matrix.hpp"
#include "symdyn/polynomial.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// One-sided sequence preperiod . period^inf, kept with a primitive period and
// the shortest preperiod.
class EventuallyPeriodicPoint {
 public:
  EventuallyPeriodicPoint(Word preperiod, Word period);
  static EventuallyPeriodicPoint parse(const std::string& preperiod, const std::string& period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }
  Symbol at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  EventuallyPeriodicPoint shift(std::size_t m) const;
  // Periodic under the shift, i.e. no preperiod.
  bool is_periodic() const { return pre_.empty(); }
  std::size_t least_period() const { return period_.size(); }
  std::size_t min_alphabet() const;
  std::string str() const;

  bool operator==(const EventuallyPeriodicPoint&) const = default;

 private:
  Word pre_;
  Word period_;
};

// Least m >= 1 with S^m x = y.
std::optional<std::size_t> point_relation(const EventuallyPeriodicPoint& x, const EventuallyPeriodicPoint& y);

// Limit of z^{-n} (w_{j,n}, w_{i,n})_z, i.e. (1/z) sum of z^{-d} over d >= 0
// with S^d x_j = x_i.
RationalFunction alpha_entry(const EventuallyPeriodicPoint& xi, const EventuallyPeriodicPoint& xj);
RFMatrix alpha_matrix(const std::vector<EventuallyPeriodicPoint>& points);

struct LocalRate {
  std::size_t alphabet = 0;
  RationalMatrix alpha;  // alpha(N)
  bool alpha_invertible = false;
  bool diagonally_dominant = false;  // by rows
  Rational t;                        // sum of the entries of alpha(N)^{-1}
  Rational lambda;                   // T / N
  Rational rho;                      // T / (kN)
};

// Throws InvalidArgument for repeated points or symbols outside the alphabet.
LocalRate local_rate(const std::vector<EventuallyPeriodicPoint>& points, std::size_t alphabet);

struct LambdaRow {
  std::size_t n = 0;
  double lambda = 0.0;  // largest root of the numerator of z - N + s_n(z)
  double scaled_gap = 0.0;  // (ln N - ln lambda_n) N^n
  double engine_lambda = 0.0;  // from the multi-word generating function
  bool engines_agree = false;
};

std::vector<LambdaRow> lambda_sequence(const std::vector<EventuallyPeriodicPoint>& points, std::size_t alphabet,
                                       std::size_t n_lo, std::size_t n_hi, double tol = 1e-9);

// ln N - h(X_K) for the full N-shift; 0 for empty K, +inf when X_K is empty.
double escape_rate(std::size_t alphabet, const std::vector<Word>& forbidden);

}  // namespace symdyn
