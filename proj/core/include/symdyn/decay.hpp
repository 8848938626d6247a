#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "symdyn/escape.hpp"
#include "symdyn/gap_shift.hpp"
#include "symdyn/graph.hpp"

namespace symdyn {

// w_n is the length-n prefix of a one-sided point; a^inf gives w_n = a^n.
using WordFamily = EventuallyPeriodicPoint;
using DecaySystem = std::variant<GapSet, LabeledGraph>;

struct DecayRow {
  std::size_t n = 0;
  Word word;
  double lambda = 0.0;
  double gap = 0.0;          // lambda_ambient - lambda_n
  double scaled_gap = 0.0;   // gap * lambda_ambient^n
  double entropy_gap = 0.0;  // n (h - h_n)
};

struct DecayProfile {
  double ambient_lambda = 0.0;
  std::vector<DecayRow> rows;

  // max/min of the scaled gaps; +inf if some scaled gap is not positive.
  double band_ratio() const;
  // n (h - h_n) never increases over rows with n >= from.
  bool entropy_gap_nonincreasing(std::size_t from) const;
};

DecayProfile decay_profile(const WordFamily& family, const DecaySystem& system, std::size_t n_lo, std::size_t n_hi,
                           double tol = 1e-13);

}  // namespace symdyn
