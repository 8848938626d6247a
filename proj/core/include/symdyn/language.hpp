#pragma once

#include <cstddef>
#include <vector>

#include "symdyn/graph.hpp"
#include "symdyn/polynomial.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

// Multi-pattern matcher; state 0 is the root. A state is terminal when some
// pattern is a suffix of the text read so far.
class AhoCorasick {
 public:
  AhoCorasick(const std::vector<Word>& patterns, std::size_t alphabet);

  std::size_t state_count() const { return terminal_.size(); }
  std::size_t alphabet_size() const { return alphabet_; }
  std::size_t step(std::size_t q, Symbol a) const { return go_[q * alphabet_ + a]; }
  bool terminal(std::size_t q) const { return terminal_[q]; }
  std::size_t depth(std::size_t q) const { return depth_[q]; }
  bool matches(const Word& text) const;

 private:
  std::size_t alphabet_;
  std::vector<std::size_t> go_;
  std::vector<bool> terminal_;
  std::vector<std::size_t> depth_;
};

// Vertex (v, q) of the product of g with the matcher of K; edges entering a
// terminal matcher state are dropped. vertex_of[i] = {v, q}.
struct AvoidProduct {
  LabeledGraph graph;
  std::vector<std::pair<VertexId, std::size_t>> vertex_of;
};
AvoidProduct avoid_product(const LabeledGraph& g, const std::vector<Word>& forbidden);

enum class CountMode {
  // #L_n(X_K): words that occur in some point of the perturbed shift.
  kShift,
  // Words of L_n(X) containing no word of K. Differs from kShift when some
  // K-free word of X cannot be extended inside X_K.
  kAvoiding,
};

// Exact word counts f(0..n_max); f(0) = 1 always, the empty word.
std::vector<Integer> count_words(const LabeledGraph& g, const std::vector<Word>& forbidden, std::size_t n_max,
                                 CountMode mode = CountMode::kShift);

// Essential presentation of X_K (labels as in g).
LabeledGraph perturbed_presentation(const LabeledGraph& g, const std::vector<Word>& forbidden);

// Deterministic acceptor of L(X_K).
Dfa language_dfa(const LabeledGraph& g, const std::vector<Word>& forbidden);

// Growth rate of #L_n(X_K) from the Perron root of the language automaton.
struct LanguageGrowth {
  bool empty;
  double lambda;  // 0 when empty
};
LanguageGrowth language_growth(const LabeledGraph& g, const std::vector<Word>& forbidden, double tol = 1e-12);

// Drops words that contain another word of the list, and duplicates.
std::vector<Word> reduce_forbidden(std::vector<Word> words);
bool is_reduced(const std::vector<Word>& words);

}  // namespace symdyn
