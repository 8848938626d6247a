#include "symdyn/graph.hpp"

#include <algorithm>
#include <map>

#include "symdyn/error.hpp"

namespace symdyn {

DirectedGraph::DirectedGraph(std::size_t vertices) : a_(vertices, std::vector<unsigned>(vertices, 0)) {}

DirectedGraph DirectedGraph::bouquet(unsigned n) { return DirectedGraph(std::vector<std::vector<unsigned>>{{n}}); }

DirectedGraph::DirectedGraph(std::vector<std::vector<unsigned>> adjacency) : a_(std::move(adjacency)) {
  for (const auto& row : a_)
    if (row.size() != a_.size()) throw InvalidArgument("adjacency matrix is not square");
}

void DirectedGraph::add_edges(VertexId i, VertexId j, unsigned n) {
  if (i >= a_.size() || j >= a_.size()) throw InvalidArgument("vertex out of range");
  a_[i][j] += n;
}

std::size_t DirectedGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : a_)
    for (unsigned c : row) n += c;
  return n;
}

LabeledGraph DirectedGraph::edge_presentation() const {
  std::vector<LabeledEdge> edges;
  for (VertexId i = 0; i < a_.size(); ++i)
    for (VertexId j = 0; j < a_.size(); ++j)
      for (unsigned k = 0; k < a_[i][j]; ++k) edges.push_back({i, j, static_cast<Symbol>(edges.size())});
  const std::size_t alphabet = std::max<std::size_t>(edges.size(), 1);
  return LabeledGraph(a_.size(), alphabet, std::move(edges));
}

LabeledGraph::LabeledGraph(std::size_t vertices, std::size_t alphabet, std::vector<LabeledEdge> edges)
    : alphabet_(alphabet), edges_(std::move(edges)), out_(vertices), in_(vertices) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.source >= vertices || ed.target >= vertices) throw InvalidArgument("edge endpoint out of range");
    if (ed.label >= alphabet) throw InvalidArgument("edge label outside the alphabet");
    out_[ed.source].push_back(e);
    in_[ed.target].push_back(e);
  }
}

LabeledGraph LabeledGraph::full_shift(std::size_t n) {
  std::vector<LabeledEdge> edges;
  for (std::size_t a = 0; a < n; ++a) edges.push_back({0, 0, static_cast<Symbol>(a)});
  return LabeledGraph(1, n, std::move(edges));
}

DirectedGraph LabeledGraph::underlying() const {
  DirectedGraph g(vertex_count());
  for (const auto& e : edges_) g.add_edges(e.source, e.target);
  return g;
}

LabeledGraph LabeledGraph::reversed() const {
  std::vector<LabeledEdge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({e.target, e.source, e.label});
  return LabeledGraph(vertex_count(), alphabet_, std::move(edges));
}

LabeledGraph LabeledGraph::induced(const std::vector<bool>& keep, std::vector<std::size_t>* map) const {
  std::vector<std::size_t> idx(vertex_count(), npos);
  std::size_t n = 0;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (keep[v]) idx[v] = n++;
  std::vector<LabeledEdge> edges;
  for (const auto& e : edges_)
    if (keep[e.source] && keep[e.target]) edges.push_back({idx[e.source], idx[e.target], e.label});
  if (map) *map = idx;
  return LabeledGraph(n, alphabet_, std::move(edges));
}

LabeledGraph LabeledGraph::essential(std::vector<std::size_t>* map) const {
  const std::size_t n = vertex_count();
  std::vector<bool> keep(n, true);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : edges_) {
    ++outdeg[e.source];
    ++indeg[e.target];
  }
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0 || outdeg[v] == 0) {
      keep[v] = false;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : out_[v]) {
      VertexId t = edges_[e].target;
      if (keep[t] && --indeg[t] == 0) {
        keep[t] = false;
        stack.push_back(t);
      }
    }
    for (EdgeId e : in_[v]) {
      VertexId s = edges_[e].source;
      if (keep[s] && --outdeg[s] == 0) {
        keep[s] = false;
        stack.push_back(s);
      }
    }
  }
  return induced(keep, map);
}

bool LabeledGraph::is_right_resolving() const {
  for (VertexId v = 0; v < vertex_count(); ++v) {
    std::vector<bool> seen(alphabet_, false);
    for (EdgeId e : out_[v]) {
      if (seen[edges_[e].label]) return false;
      seen[edges_[e].label] = true;
    }
  }
  return true;
}

Dfa::Dfa(std::size_t states, std::size_t alphabet, std::size_t initial)
    : states_(states), alphabet_(alphabet), initial_(initial), delta_(states * alphabet, -1) {
  if (states > 0 && initial >= states) throw InvalidArgument("initial state out of range");
}

long Dfa::step(std::size_t q, Symbol a) const {
  if (a >= alphabet_) return -1;
  return delta_[q * alphabet_ + a];
}

void Dfa::set(std::size_t q, Symbol a, std::size_t target) { delta_[q * alphabet_ + a] = static_cast<long>(target); }

long Dfa::run_from(std::size_t q, const Word& w) const {
  long cur = static_cast<long>(q);
  for (Symbol a : w.symbols()) {
    cur = step(static_cast<std::size_t>(cur), a);
    if (cur < 0) return -1;
  }
  return cur;
}

long Dfa::run(const Word& w) const {
  if (states_ == 0) return w.empty() ? 0 : -1;
  return run_from(initial_, w);
}

DirectedGraph Dfa::adjacency() const {
  DirectedGraph g(states_);
  for (std::size_t q = 0; q < states_; ++q)
    for (Symbol a = 0; a < alphabet_; ++a) {
      long t = step(q, a);
      if (t >= 0) g.add_edges(q, static_cast<std::size_t>(t));
    }
  return g;
}

LabeledGraph Dfa::graph() const {
  std::vector<LabeledEdge> edges;
  for (std::size_t q = 0; q < states_; ++q)
    for (Symbol a = 0; a < alphabet_; ++a) {
      long t = step(q, a);
      if (t >= 0) edges.push_back({q, static_cast<std::size_t>(t), a});
    }
  return LabeledGraph(states_, alphabet_, std::move(edges));
}

Dfa Dfa::minimized() const {
  if (states_ == 0) return *this;
  std::vector<std::size_t> cls(states_, 0);
  std::size_t nclass = 1;
  while (true) {
    std::map<std::vector<long>, std::size_t> sig_ids;
    std::vector<std::size_t> next(states_);
    for (std::size_t q = 0; q < states_; ++q) {
      std::vector<long> sig{static_cast<long>(cls[q])};
      for (Symbol a = 0; a < alphabet_; ++a) {
        long t = step(q, a);
        sig.push_back(t < 0 ? -1 : static_cast<long>(cls[static_cast<std::size_t>(t)]));
      }
      next[q] = sig_ids.emplace(std::move(sig), sig_ids.size()).first->second;
    }
    const bool stable = sig_ids.size() == nclass;
    cls = std::move(next);
    nclass = sig_ids.size();
    if (stable) break;
  }
  Dfa out(nclass, alphabet_, cls[initial_]);
  for (std::size_t q = 0; q < states_; ++q)
    for (Symbol a = 0; a < alphabet_; ++a) {
      long t = step(q, a);
      if (t >= 0) out.set(cls[q], a, cls[static_cast<std::size_t>(t)]);
    }
  return out;
}

std::vector<Integer> Dfa::count_words(std::size_t n_max) const {
  std::vector<Integer> out(n_max + 1, 0);
  out[0] = 1;
  if (states_ == 0) return out;
  std::vector<Integer> cur(states_, 0), next(states_, 0);
  cur[initial_] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::fill(next.begin(), next.end(), Integer(0));
    for (std::size_t q = 0; q < states_; ++q) {
      if (cur[q] == 0) continue;
      for (Symbol a = 0; a < alphabet_; ++a) {
        long t = step(q, a);
        if (t >= 0) next[static_cast<std::size_t>(t)] += cur[q];
      }
    }
    std::swap(cur, next);
    Integer total = 0;
    for (const auto& c : cur) total += c;
    out[n] = total;
  }
  return out;
}

std::vector<Word> Dfa::words(std::size_t n) const {
  std::vector<Word> out;
  if (states_ == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<Symbol> cur;
  // Depth-first in symbol order gives lexicographic output.
  auto rec = [&](auto& self, std::size_t q) -> void {
    if (cur.size() == n) {
      out.emplace_back(cur);
      return;
    }
    for (Symbol a = 0; a < alphabet_; ++a) {
      long t = step(q, a);
      if (t < 0) continue;
      cur.push_back(a);
      self(self, static_cast<std::size_t>(t));
      cur.pop_back();
    }
  };
  rec(rec, initial_);
  return out;
}

std::vector<std::size_t> strongly_connected_components(const DirectedGraph& g, std::size_t* count) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, ncomp = 0;
  struct Frame {
    std::size_t v;
    std::size_t j;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.j < n) {
        std::size_t w = f.j++;
        if (g.count(f.v, w) == 0) continue;
        if (index[w] == unset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        while (true) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
    }
  }
  if (count) *count = ncomp;
  return comp;
}

bool is_irreducible(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::size_t count = 0;
  strongly_connected_components(g, &count);
  if (count != 1) return false;
  if (n == 1) return g.count(0, 0) > 0;
  return true;
}

bool is_irreducible(const LabeledGraph& g) { return is_irreducible(g.underlying()); }

Dfa determinize(const LabeledGraph& g) {
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  return determinize(g, all);
}

Dfa determinize(const LabeledGraph& g, const std::vector<VertexId>& initial) {
  const std::size_t alphabet = std::max<std::size_t>(g.alphabet_size(), 1);
  std::vector<VertexId> start = initial;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  if (start.empty()) return Dfa(0, alphabet, 0);

  std::map<std::vector<VertexId>, std::size_t> ids;
  std::vector<std::vector<VertexId>> sets;
  std::vector<std::vector<std::pair<Symbol, std::size_t>>> trans;
  ids.emplace(start, 0);
  sets.push_back(start);
  for (std::size_t q = 0; q < sets.size(); ++q) {
    std::vector<std::vector<VertexId>> next(alphabet);
    for (VertexId v : sets[q])
      for (EdgeId e : g.out_edges(v)) next[g.edge(e).label].push_back(g.edge(e).target);
    std::vector<std::pair<Symbol, std::size_t>> row;
    for (Symbol a = 0; a < alphabet; ++a) {
      auto& s = next[a];
      if (s.empty()) continue;
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      auto [it, inserted] = ids.emplace(s, sets.size());
      if (inserted) sets.push_back(s);
      row.emplace_back(a, it->second);
    }
    trans.push_back(std::move(row));
  }
  Dfa dfa(sets.size(), alphabet, 0);
  for (std::size_t q = 0; q < trans.size(); ++q)
    for (auto [a, t] : trans[q]) dfa.set(q, a, t);
  return dfa;
}

Endpoints word_endpoints(const LabeledGraph& g, const Word& w) {
  Endpoints out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::vector<bool> cur(g.vertex_count(), false);
    cur[s] = true;
    for (Symbol a : w.symbols()) {
      std::vector<bool> nxt(g.vertex_count(), false);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!cur[v]) continue;
        for (EdgeId e : g.out_edges(v))
          if (g.edge(e).label == a) nxt[g.edge(e).target] = true;
      }
      cur = std::move(nxt);
    }
    bool any = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (cur[v]) {
        any = true;
        out.ranges.push_back(v);
      }
    if (any) out.sources.push_back(s);
  }
  std::sort(out.ranges.begin(), out.ranges.end());
  out.ranges.erase(std::unique(out.ranges.begin(), out.ranges.end()), out.ranges.end());
  return out;
}

std::vector<std::vector<EdgeId>> label_preimages(const LabeledGraph& g, const Word& w) {
  std::vector<std::vector<EdgeId>> out;
  if (w.empty()) return out;
  std::vector<EdgeId> path;
  auto rec = [&](auto& self, VertexId v) -> void {
    if (path.size() == w.size()) {
      out.push_back(path);
      return;
    }
    for (EdgeId e : g.out_edges(v)) {
      if (g.edge(e).label != w[path.size()]) continue;
      path.push_back(e);
      self(self, g.edge(e).target);
      path.pop_back();
    }
  };
  for (EdgeId e = 0; e < g.edges().size(); ++e) {
    if (g.edge(e).label != w[0]) continue;
    path.assign(1, e);
    rec(rec, g.edge(e).target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symdyn
