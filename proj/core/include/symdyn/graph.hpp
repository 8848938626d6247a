#pragma once

#include <cstddef>
#include <vector>

#include "symdyn/polynomial.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

using VertexId = std::size_t;
using EdgeId = std::size_t;

class LabeledGraph;

// A_{i,j} = number of edges i -> j.
class DirectedGraph {
 public:
  explicit DirectedGraph(std::size_t vertices = 0);
  explicit DirectedGraph(std::vector<std::vector<unsigned>> adjacency);
  // One vertex with n loops: the full n-shift as an edge shift.
  static DirectedGraph bouquet(unsigned n);

  std::size_t vertex_count() const { return a_.size(); }
  unsigned count(VertexId i, VertexId j) const { return a_[i][j]; }
  void add_edges(VertexId i, VertexId j, unsigned n = 1);
  const std::vector<std::vector<unsigned>>& adjacency() const { return a_; }
  std::size_t edge_count() const;

  // Edges are numbered row-major, parallel edges consecutively. The edge id
  // is used as the label, so label words are exactly edge walks.
  LabeledGraph edge_presentation() const;

 private:
  std::vector<std::vector<unsigned>> a_;
};

struct LabeledEdge {
  VertexId source;
  VertexId target;
  Symbol label;
  bool operator==(const LabeledEdge&) const = default;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(std::size_t vertices, std::size_t alphabet, std::vector<LabeledEdge> edges);

  static LabeledGraph full_shift(std::size_t n);

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t alphabet_size() const { return alphabet_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const LabeledEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

  DirectedGraph underlying() const;
  LabeledGraph reversed() const;
  // Subgraph on vertices with keep[v]; map[v] is the new index or npos.
  LabeledGraph induced(const std::vector<bool>& keep, std::vector<std::size_t>* map = nullptr) const;
  // Largest subgraph in which every vertex has an incoming and an outgoing
  // edge; its finite walks are exactly the blocks of bi-infinite walks.
  LabeledGraph essential(std::vector<std::size_t>* map = nullptr) const;
  bool is_right_resolving() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t alphabet_ = 0;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

// Deterministic automaton with every state accepting; -1 means no transition.
class Dfa {
 public:
  Dfa(std::size_t states, std::size_t alphabet, std::size_t initial);

  std::size_t state_count() const { return states_; }
  std::size_t alphabet_size() const { return alphabet_; }
  std::size_t initial() const { return initial_; }
  long step(std::size_t q, Symbol a) const;
  void set(std::size_t q, Symbol a, std::size_t target);
  // Final state, or -1 if the word is rejected.
  long run(const Word& w) const;
  long run_from(std::size_t q, const Word& w) const;
  bool accepts(const Word& w) const { return run(w) >= 0; }

  DirectedGraph adjacency() const;
  // The transition graph as a right-resolving labeled graph.
  LabeledGraph graph() const;
  // Equivalent DFA with the fewest states (Moore partition refinement).
  Dfa minimized() const;
  // Number of accepted words of each length 0..n_max; the empty word is
  // counted even when there are no states.
  std::vector<Integer> count_words(std::size_t n_max) const;
  // Accepted words of length n in lexicographic order.
  std::vector<Word> words(std::size_t n) const;

 private:
  std::size_t states_;
  std::size_t alphabet_;
  std::size_t initial_;
  std::vector<long> delta_;
};

// component id per vertex (ids in reverse topological order of the
// condensation) and number of components.
std::vector<std::size_t> strongly_connected_components(const DirectedGraph& g, std::size_t* count = nullptr);
bool is_irreducible(const DirectedGraph& g);
bool is_irreducible(const LabeledGraph& g);

// Subset construction. The initial state is the set of all vertices unless
// given; the empty set is never materialized.
Dfa determinize(const LabeledGraph& g);
Dfa determinize(const LabeledGraph& g, const std::vector<VertexId>& initial);

struct Endpoints {
  std::vector<VertexId> sources;
  std::vector<VertexId> ranges;
};
Endpoints word_endpoints(const LabeledGraph& g, const Word& w);

// All walks (as edge id sequences) whose label is w, in lexicographic order.
std::vector<std::vector<EdgeId>> label_preimages(const LabeledGraph& g, const Word& w);

}  // namespace symdyn
