#include "symdyn/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symdyn/error.hpp"
#include "symdyn/language.hpp"
#include "symdyn/perturbation.hpp"

namespace symdyn {

double DecayProfile::band_ratio() const {
  if (rows.empty()) return std::numeric_limits<double>::infinity();
  double lo = rows.front().scaled_gap, hi = lo;
  for (const auto& r : rows) {
    lo = std::min(lo, r.scaled_gap);
    hi = std::max(hi, r.scaled_gap);
  }
  return lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
}

bool DecayProfile::entropy_gap_nonincreasing(std::size_t from) const {
  const DecayRow* prev = nullptr;
  for (const auto& r : rows) {
    if (r.n < from) continue;
    if (prev && r.entropy_gap > prev->entropy_gap) return false;
    prev = &r;
  }
  return true;
}

DecayProfile decay_profile(const WordFamily& family, const DecaySystem& system, std::size_t n_lo, std::size_t n_hi,
                           double tol) {
  if (n_lo < 1 || n_hi < n_lo) throw InvalidArgument("bad n range");
  EngineOptions opt;
  opt.tol = tol;
  opt.oracle = false;
  DecayProfile prof;
  if (const auto* s = std::get_if<GapSet>(&system))
    prof.ambient_lambda = sgap_entropy(*s, tol);
  else
    prof.ambient_lambda = language_growth(std::get<LabeledGraph>(system), {}, tol).lambda;
  const double h = std::log(prof.ambient_lambda);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    DecayRow row;
    row.n = n;
    row.word = family.prefix(n);
    if (const auto* s = std::get_if<GapSet>(&system))
      row.lambda = sgap_perturb_gf(*s, row.word, opt).lambda;
    else
      row.lambda = sofic_perturb(std::get<LabeledGraph>(system), row.word, opt).result.lambda;
    row.gap = prof.ambient_lambda - row.lambda;
    row.scaled_gap = row.gap * std::pow(prof.ambient_lambda, static_cast<double>(n));
    row.entropy_gap = static_cast<double>(n) * (h - std::log(row.lambda));
    prof.rows.push_back(std::move(row));
  }
  return prof;
}

}  // namespace symdyn
