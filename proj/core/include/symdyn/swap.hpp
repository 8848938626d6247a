#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/graph.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// Sliding block code of radius n-1 that exchanges occurrences of u and w.
class SwapCode {
 public:
  SwapCode(Word u, Word w);

  const Word& u() const { return u_; }
  const Word& w() const { return w_; }
  std::size_t length() const { return u_.size(); }
  std::size_t window() const { return 2 * u_.size() - 1; }

 private:
  Word u_;
  Word w_;
};

struct Admissibility {
  bool correlations = false;  // (u,u) = (w,w), (u,w) = (w,u) = (u,u) minus the full overlap
  bool sources = false;
  bool ranges = false;
  std::vector<std::string> reasons;
  bool admissible() const { return correlations && sources && ranges; }
};

Admissibility swap_admissible(const LabeledGraph& g, const Word& u, const Word& w);

// Image of the centre symbol of a window of length 2n-1; nullopt when
// occurrences covering the centre disagree.
std::optional<Symbol> swap_rule(const SwapCode& code, const Word& window);

// Finite words: every occurrence of u or w lying entirely inside x is
// replaced by the other word; other symbols are unchanged. Throws
// InvalidArgument on overlapping occurrences that disagree.
Word apply_swap(const SwapCode& code, const Word& x);

// Sliding block image: position i of the result is the rule applied to the
// window x[i, i + 2n - 1); nullopt on a conflict.
std::optional<Word> block_map(const SwapCode& code, const Word& x);

// Every window of every word of length 2n-1 and 2n over the alphabet gets a
// value, and the windowwise image agrees with apply_swap on those positions.
struct WellDefinedness {
  bool ok = true;
  std::size_t windows_checked = 0;
  std::string witness;
};
WellDefinedness swap_rule_well_defined(const SwapCode& code, std::size_t alphabet);

struct ConjugacyReport {
  Admissibility admissibility;
  std::size_t n_max = 0;
  // apply_swap maps L_j(X_u) onto L_j(X_w) one to one.
  bool word_bijection = true;
  // The block map sends L_j(X_u) onto L_{j-2n+2}(X_w) and L_j(X_w) onto
  // L_{j-2n+2}(X_u).
  bool interior_onto = true;
  // apply_swap is its own inverse on L_j(X_u) and L_j(X_w).
  bool involution = true;
  std::vector<std::size_t> counts_u;  // #L_j(X_u), j = 0..n_max
  std::vector<std::size_t> counts_w;
  double lambda_u = 0.0;
  double lambda_w = 0.0;
  bool entropies_agree = false;
  std::vector<std::string> witnesses;
  bool conjugate() const { return interior_onto && involution && entropies_agree; }
};

// Checks the swap code on L_j for j <= n_max and compares the two Perron
// roots. Throws InvalidArgument if the pair is not admissible.
ConjugacyReport verify_conjugacy(const LabeledGraph& g, const Word& u, const Word& w, std::size_t n_max,
                                 double tol = 1e-9);

}  // namespace symdyn
