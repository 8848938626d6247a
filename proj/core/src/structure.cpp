#include "symdyn/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "symdyn/error.hpp"
#include "symdyn/language.hpp"

namespace symdyn {

namespace {

constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

// BFS distances from q, cut off at depth limit.
std::vector<std::size_t> distances(const Dfa& d, std::size_t q, std::size_t limit) {
  std::vector<std::size_t> dist(d.state_count(), kUnreached);
  std::deque<std::size_t> queue{q};
  dist[q] = 0;
  while (!queue.empty()) {
    std::size_t p = queue.front();
    queue.pop_front();
    if (dist[p] == limit) continue;
    for (Symbol a = 0; a < d.alphabet_size(); ++a) {
      long t = d.step(p, a);
      if (t < 0 || dist[static_cast<std::size_t>(t)] != kUnreached) continue;
      dist[static_cast<std::size_t>(t)] = dist[p] + 1;
      queue.push_back(static_cast<std::size_t>(t));
    }
  }
  return dist;
}

// One representative word for each state reached by words of length j.
std::map<std::size_t, Word> states_at_length(const Dfa& d, std::size_t j) {
  std::map<std::size_t, Word> cur{{d.initial(), Word()}};
  for (std::size_t step = 0; step < j; ++step) {
    std::map<std::size_t, Word> next;
    for (const auto& [q, w] : cur)
      for (Symbol a = 0; a < d.alphabet_size(); ++a) {
        long t = d.step(q, a);
        if (t < 0) continue;
        Word x = w;
        x.push_back(a);
        next.emplace(static_cast<std::size_t>(t), std::move(x));
      }
    cur = std::move(next);
  }
  return cur;
}

// Shortest v (|v| <= limit) readable from p but not from q, if any.
std::optional<Word> follower_gap(const Dfa& d, std::size_t p, long q, std::size_t limit) {
  std::map<std::pair<std::size_t, long>, std::pair<std::pair<std::size_t, long>, Symbol>> parent;
  std::deque<std::pair<std::pair<std::size_t, long>, std::size_t>> queue;
  auto start = std::make_pair(p, q);
  parent[start] = {start, 0};
  queue.push_back({start, 0});
  auto rebuild = [&](std::pair<std::size_t, long> node) {
    std::vector<Symbol> s;
    while (node != start) {
      auto [prev, a] = parent[node];
      s.push_back(a);
      node = prev;
    }
    std::reverse(s.begin(), s.end());
    return Word(std::move(s));
  };
  while (!queue.empty()) {
    auto [node, depth] = queue.front();
    queue.pop_front();
    if (node.second < 0) return rebuild(node);
    if (depth == limit) continue;
    for (Symbol a = 0; a < d.alphabet_size(); ++a) {
      long pt = d.step(node.first, a);
      if (pt < 0) continue;
      long qt = d.step(static_cast<std::size_t>(node.second), a);
      auto nxt = std::make_pair(static_cast<std::size_t>(pt), qt);
      if (parent.count(nxt)) continue;
      parent[nxt] = {node, a};
      queue.push_back({nxt, depth + 1});
    }
  }
  return std::nullopt;
}

}  // namespace

StructureReport check_structure(const LabeledGraph& system, const std::vector<Word>& forbidden, std::size_t horizon,
                                const std::optional<Word>& candidate) {
  if (horizon < 1) throw InvalidArgument("horizon must be at least 1");
  StructureReport rep;
  rep.horizon = horizon;
  const Dfa d = language_dfa(system, forbidden);
  rep.nonempty = d.state_count() > 0 && d.count_words(horizon)[horizon] > 0;

  if (rep.nonempty) {
    rep.irreducible_at_horizon = true;
    const std::size_t jmax = std::max<std::size_t>(1, horizon / 3);
    std::vector<std::vector<std::size_t>> dist_cache(d.state_count());
    for (std::size_t j = 1; j <= jmax && rep.irreducible_at_horizon; ++j) {
      const std::size_t budget = horizon > 2 * j ? horizon - 2 * j : 0;
      auto us = states_at_length(d, j);
      // Group right words w by the set of states that can read them.
      std::map<std::vector<bool>, Word> readers;
      for (const Word& w : d.words(j)) {
        std::vector<bool> ok(d.state_count());
        for (std::size_t q = 0; q < d.state_count(); ++q) ok[q] = d.run_from(q, w) >= 0;
        readers.emplace(std::move(ok), w);
      }
      for (const auto& [q, u] : us) {
        auto dist = distances(d, q, budget);
        for (const auto& [ok, w] : readers) {
          bool found = false;
          for (std::size_t p = 0; p < d.state_count() && !found; ++p) found = dist[p] != kUnreached && ok[p];
          if (!found) {
            rep.irreducible_at_horizon = false;
            rep.irreducibility_witness = u.str() + "|" + w.str();
            break;
          }
        }
        if (!rep.irreducible_at_horizon) break;
      }
    }
  }

  if (candidate) {
    SyncCertificate c;
    c.m = *candidate;
    c.not_subword_of_forbidden =
        std::none_of(forbidden.begin(), forbidden.end(), [&](const Word& k) { return k.contains(c.m); });
    c.in_language = rep.nonempty && d.accepts(c.m);
    if (c.in_language) {
      c.synchronizing_at_horizon = true;
      const std::size_t qm = static_cast<std::size_t>(d.run(c.m));
      // States after u for every u with |u| <= horizon, with a witness u.
      std::map<std::size_t, Word> seen{{d.initial(), Word()}};
      std::deque<std::pair<std::size_t, std::size_t>> queue{{d.initial(), 0}};
      while (!queue.empty()) {
        auto [p, depth] = queue.front();
        queue.pop_front();
        if (depth == horizon) continue;
        for (Symbol a = 0; a < d.alphabet_size(); ++a) {
          long t = d.step(p, a);
          if (t < 0 || seen.count(static_cast<std::size_t>(t))) continue;
          Word u = seen[p];
          u.push_back(a);
          seen.emplace(static_cast<std::size_t>(t), std::move(u));
          queue.push_back({static_cast<std::size_t>(t), depth + 1});
        }
      }
      for (const auto& [p, u] : seen) {
        long qu = d.run_from(p, c.m);
        if (qu < 0) continue;
        if (auto v = follower_gap(d, qm, qu, horizon)) {
          c.synchronizing_at_horizon = false;
          c.witness = u.str() + "|" + v->str();
          break;
        }
      }
    }
    rep.sync = c;
  }
  return rep;
}

}  // namespace symdyn
