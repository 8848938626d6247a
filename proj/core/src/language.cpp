#include "symdyn/language.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "symdyn/error.hpp"
#include "symdyn/perron.hpp"

namespace symdyn {

AhoCorasick::AhoCorasick(const std::vector<Word>& patterns, std::size_t alphabet) : alphabet_(alphabet) {
  if (alphabet == 0) throw InvalidArgument("empty alphabet");
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> trie(alphabet, none);
  terminal_.push_back(false);
  depth_.push_back(0);
  for (const Word& p : patterns) {
    if (p.empty()) throw InvalidArgument("forbidden word must be nonempty");
    // A pattern using symbols outside the alphabet can never occur.
    if (p.min_alphabet() > alphabet) continue;
    std::size_t q = 0;
    for (Symbol a : p.symbols()) {
      std::size_t& slot = trie[q * alphabet + a];
      if (slot == none) {
        slot = terminal_.size();
        terminal_.push_back(false);
        depth_.push_back(depth_[q] + 1);
        trie.resize(trie.size() + alphabet, none);
      }
      q = trie[q * alphabet + a];
    }
    terminal_[q] = true;
  }
  const std::size_t n = terminal_.size();
  go_.assign(n * alphabet, 0);
  std::vector<std::size_t> fail(n, 0);
  std::deque<std::size_t> queue;
  for (Symbol a = 0; a < alphabet; ++a) {
    std::size_t t = trie[a];
    if (t != none) {
      go_[a] = t;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    if (terminal_[fail[q]]) terminal_[q] = true;
    for (Symbol a = 0; a < alphabet; ++a) {
      std::size_t t = trie[q * alphabet + a];
      if (t != none) {
        fail[t] = go_[fail[q] * alphabet + a];
        go_[q * alphabet + a] = t;
        queue.push_back(t);
      } else {
        go_[q * alphabet + a] = go_[fail[q] * alphabet + a];
      }
    }
  }
}

bool AhoCorasick::matches(const Word& text) const {
  std::size_t q = 0;
  if (terminal_[q]) return true;
  for (Symbol a : text.symbols()) {
    if (a >= alphabet_) {
      q = 0;
      continue;
    }
    q = step(q, a);
    if (terminal_[q]) return true;
  }
  return false;
}

AvoidProduct avoid_product(const LabeledGraph& g, const std::vector<Word>& forbidden) {
  const std::size_t alphabet = std::max<std::size_t>(g.alphabet_size(), 1);
  AhoCorasick ac(forbidden, alphabet);
  AvoidProduct out;
  std::map<std::pair<VertexId, std::size_t>, std::size_t> ids;
  std::vector<LabeledEdge> edges;
  std::deque<std::size_t> queue;
  auto intern = [&](VertexId v, std::size_t q) {
    auto [it, inserted] = ids.emplace(std::make_pair(v, q), out.vertex_of.size());
    if (inserted) {
      out.vertex_of.emplace_back(v, q);
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) intern(v, 0);
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    auto [v, q] = out.vertex_of[id];
    for (EdgeId e : g.out_edges(v)) {
      const auto& ed = g.edge(e);
      std::size_t q2 = ac.step(q, ed.label);
      if (ac.terminal(q2)) continue;
      std::size_t t = intern(ed.target, q2);
      edges.push_back({id, t, ed.label});
    }
  }
  out.graph = LabeledGraph(out.vertex_of.size(), alphabet, std::move(edges));
  return out;
}

LabeledGraph perturbed_presentation(const LabeledGraph& g, const std::vector<Word>& forbidden) {
  return avoid_product(g.essential(), forbidden).graph.essential();
}

Dfa language_dfa(const LabeledGraph& g, const std::vector<Word>& forbidden) {
  return determinize(perturbed_presentation(g, forbidden)).minimized();
}

std::vector<Integer> count_words(const LabeledGraph& g, const std::vector<Word>& forbidden, std::size_t n_max,
                                 CountMode mode) {
  if (mode == CountMode::kShift) return language_dfa(g, forbidden).count_words(n_max);
  // Every walk of the product starting at a root-state vertex spells a K-free
  // word of L(X), and every such word arises this way.
  AvoidProduct p = avoid_product(g.essential(), forbidden);
  std::vector<VertexId> start;
  for (std::size_t i = 0; i < p.vertex_of.size(); ++i)
    if (p.vertex_of[i].second == 0) start.push_back(i);
  return determinize(p.graph, start).count_words(n_max);
}

LanguageGrowth language_growth(const LabeledGraph& g, const std::vector<Word>& forbidden, double tol) {
  Dfa dfa = language_dfa(g, forbidden);
  if (dfa.state_count() == 0) return {true, 0.0};
  return {false, perron_root(dfa.adjacency(), tol)};
}

std::vector<Word> reduce_forbidden(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Word> out;
  for (const Word& w : words) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Word& k) { return w.contains(k); });
    if (!redundant) out.push_back(w);
  }
  return out;
}

bool is_reduced(const std::vector<Word>& words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (i != j && words[i].contains(words[j])) return false;
  return true;
}

}  // namespace symdyn
