#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/gap_shift.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/polynomial.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// Nonempty list of pairwise non-nested words.
class ForbiddenSet {
 public:
  explicit ForbiddenSet(std::vector<Word> words);
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::vector<Word> words_;
};

struct EngineOptions {
  double tol = 1e-12;
  std::size_t oracle_n = 12;  // clamped to at least 6
  bool oracle = true;
  double lambda_tol = 1e-6;  // closed form vs automaton Perron root
};

struct OracleCheck {
  bool performed = false;
  bool agree = true;
  bool series_checked = false;
  bool series_agree = true;
  bool lambda_agree = true;
  bool empty = false;
  double lambda = 0.0;  // Perron root of the language automaton
  std::vector<Integer> counts;           // #L_n(X_K)
  // K-free words of L(X); for gap shifts, free of the normalized word.
  std::vector<Integer> avoiding_counts;
  std::string detail;
};

struct PerturbationResult {
  double lambda = 0.0;
  double entropy = 0.0;  // -inf when empty
  bool empty = false;
  double ambient_lambda = 0.0;
  Polynomial characteristic;  // the polynomial whose largest root is lambda
  std::optional<RationalFunction> generating_function;
  // The generating function exactly as the closed form is usually stated,
  // and z^j with literal = z^j * generating_function when that holds.
  std::optional<RationalFunction> literal_generating_function;
  std::optional<int> normalization_shift;
  std::optional<SeriesPrefix> series;
  OracleCheck oracle;
  std::vector<std::string> notes;
};

// Single forbidden walk w (symbols are edge ids of A.edge_presentation()):
// lambda is the largest zero of det(zI - A) c_w(z) + adj(zI - A)_{r(w), s(w)}.
PerturbationResult sft_entropy_single(const DirectedGraph& a, const Word& walk, const EngineOptions& opt = {});

// Several forbidden walks: F(z) from the block system in the vertex and
// first-occurrence generating functions.
PerturbationResult sft_multi_gf(const DirectedGraph& a, const ForbiddenSet& k, const EngineOptions& opt = {});
PerturbationResult full_shift_gf(std::size_t n, const ForbiddenSet& k, const EngineOptions& opt = {});

struct SoficPerturbation {
  PerturbationResult result;
  LabeledGraph presentation;  // presents X_w, labels as in the input
  LabeledGraph cover;         // right-resolving presentation used for the lift
  std::vector<std::vector<EdgeId>> preimages;
};
SoficPerturbation sofic_perturb(const LabeledGraph& g, const Word& w, const EngineOptions& opt = {});

PerturbationResult sgap_perturb_gf(const GapSet& s, const Word& w, const EngineOptions& opt = {});
PerturbationResult dgap_perturb_entropy(unsigned d, const Word& w, const EngineOptions& opt = {});

// Overlap lengths t in 1..min(|u|,|v|) with suffix_t(u) = prefix_t(v), as
// sum z^{t-1}; equals the correlation polynomial when |u| = |v|.
Polynomial overlap_polynomial(const Word& u, const Word& v);

// Whether a word of edge ids is a walk in A's edge presentation; source and
// range of the walk.
struct WalkInfo {
  bool valid;
  VertexId source;
  VertexId range;
};
WalkInfo walk_info(const LabeledGraph& edges, const Word& walk);

}  // namespace symdyn
