#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/graph.hpp"
#include "symdyn/polynomial.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// Subset of N0 given by an eventually periodic characteristic sequence
// chi = preperiod . period^inf. Finite sets have period "0". Stored in the
// canonical form: primitive period, shortest preperiod.
class GapSet {
 public:
  GapSet() : GapSet({}, {false}) {}
  GapSet(std::vector<bool> preperiod, std::vector<bool> period);

  static GapSet finite(const std::vector<unsigned>& elements);
  // Bit strings such as "0001" / "001".
  static GapSet eventually_periodic(const std::string& preperiod, const std::string& period);
  static GapSet naturals() { return GapSet({}, {true}); }
  // {offset, offset + d, offset + 2d, ...}
  static GapSet multiples(unsigned d, unsigned offset = 0);

  bool contains(unsigned long n) const;
  bool empty() const;
  bool is_finite() const { return period_.size() == 1 && !period_[0]; }
  std::optional<unsigned long> max() const;
  std::optional<unsigned long> least_at_least(unsigned long n) const;
  std::vector<unsigned long> elements_below(unsigned long n) const;

  const std::vector<bool>& preperiod() const { return pre_; }
  const std::vector<bool>& period() const { return period_; }

  GapSet complement() const;
  // {n - m : n in S, n >= m}
  GapSet shifted(unsigned long m) const;
  // {s in S : s < n}
  GapSet below(unsigned long n) const;

  std::string str() const;
  bool operator==(const GapSet&) const = default;

 private:
  void canonicalize();
  std::vector<bool> pre_;
  std::vector<bool> period_;
};

// T_S(z) = sum_{n in S} z^{-(n+1)} in closed form.
RationalFunction gap_series(const GapSet& s);

// Growth rate of X_S: the root of 1 = T_S(z) in (1, 2]; 1 when S is a
// singleton and 0 when S is empty.
double sgap_entropy(const GapSet& s, double tol = 1e-12);

// Whether a binary word occurs in the S-gap shift.
bool sgap_allows(const GapSet& s, const Word& w);

// Right-resolving presentation: vertex i tracks the current zero run.
LabeledGraph sgap_presentation(const GapSet& s);
LabeledGraph dgap_presentation(unsigned d);

struct NormalizedWord {
  Word wtilde;
  unsigned long leading = 0;   // zero run that starts wtilde
  unsigned long trailing = 0;  // zero run that ends wtilde
  // Boundary zero-run length used by the generating function; absent when
  // wtilde both starts and ends with 0.
  std::optional<unsigned long> m;
  // Whether the raw boundary runs of w already lie in S u {0}.
  bool boundary_in_gaps = true;
};

// Smallest allowed word 0^k u 0^k' containing w with k, k' in S u {0}.
// Throws for words outside X_S and for all-zero words.
NormalizedWord normalize_wtilde(const GapSet& s, const Word& w);

}  // namespace symdyn
