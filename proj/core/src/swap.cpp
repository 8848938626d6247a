#include "symdyn/swap.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "symdyn/error.hpp"
#include "symdyn/language.hpp"

namespace symdyn {

SwapCode::SwapCode(Word u, Word w) : u_(std::move(u)), w_(std::move(w)) {
  if (u_.size() != w_.size()) throw InvalidArgument("swapped words must have equal length");
  if (u_.empty()) throw InvalidArgument("swapped words must be nonempty");
}

Admissibility swap_admissible(const LabeledGraph& g, const Word& u, const Word& w) {
  if (u.size() != w.size()) throw InvalidArgument("swapped words must have equal length");
  if (u.empty()) throw InvalidArgument("swapped words must be nonempty");
  Admissibility a;
  const std::size_t n = u.size();
  auto uu = correlate(u, u), ww = correlate(w, w), uw = correlate(u, w), wu = correlate(w, u);
  std::vector<std::size_t> proper = uu.positions();
  proper.erase(std::remove(proper.begin(), proper.end(), n - 1), proper.end());
  CorrelationSet cross(n, proper);
  a.correlations = true;
  if (uu != ww) {
    a.correlations = false;
    a.reasons.push_back("(u,u) != (w,w)");
  }
  if (uw != cross) {
    a.correlations = false;
    a.reasons.push_back("(u,w) differs from the proper self-overlaps of u");
  }
  if (wu != cross) {
    a.correlations = false;
    a.reasons.push_back("(w,u) differs from the proper self-overlaps of u");
  }
  auto eu = word_endpoints(g, u), ew = word_endpoints(g, w);
  if (eu.sources.empty()) a.reasons.push_back("u is not presented by the graph");
  if (ew.sources.empty()) a.reasons.push_back("w is not presented by the graph");
  a.sources = !eu.sources.empty() && eu.sources == ew.sources;
  a.ranges = !eu.ranges.empty() && eu.ranges == ew.ranges;
  if (!a.sources && !eu.sources.empty() && !ew.sources.empty()) a.reasons.push_back("source sets differ");
  if (!a.ranges && !eu.ranges.empty() && !ew.ranges.empty()) a.reasons.push_back("range sets differ");
  return a;
}

namespace {

bool occurs_at(const Word& x, std::size_t p, const Word& v) {
  if (p + v.size() > x.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (x[p + i] != v[i]) return false;
  return true;
}

// Proposed image of x[i] from complete occurrences covering i; nullopt on
// disagreement, x[i] when nothing covers it.
std::optional<Symbol> image_at(const SwapCode& code, const Word& x, std::size_t i) {
  const std::size_t n = code.length();
  std::optional<Symbol> out;
  const std::size_t first = i + 1 >= n ? i + 1 - n : 0;
  for (std::size_t p = first; p <= i; ++p) {
    for (int which = 0; which < 2; ++which) {
      const Word& from = which == 0 ? code.u() : code.w();
      const Word& to = which == 0 ? code.w() : code.u();
      if (!occurs_at(x, p, from)) continue;
      Symbol s = to[i - p];
      if (out && *out != s) return std::nullopt;
      out = s;
    }
  }
  return out ? out : std::optional<Symbol>(x[i]);
}

}  // namespace

std::optional<Symbol> swap_rule(const SwapCode& code, const Word& window) {
  if (window.size() != code.window()) throw InvalidArgument("window must have length 2n-1");
  return image_at(code, window, code.length() - 1);
}

Word apply_swap(const SwapCode& code, const Word& x) {
  std::vector<Symbol> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto s = image_at(code, x, i);
    if (!s) throw InvalidArgument("conflicting occurrences of the swapped words in " + x.str());
    out[i] = *s;
  }
  return Word(std::move(out));
}

std::optional<Word> block_map(const SwapCode& code, const Word& x) {
  const std::size_t r = code.length() - 1;
  if (x.size() < 2 * r) return Word();
  std::vector<Symbol> out;
  for (std::size_t i = r; i + r < x.size(); ++i) {
    auto s = image_at(code, x, i);
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return Word(std::move(out));
}

WellDefinedness swap_rule_well_defined(const SwapCode& code, std::size_t alphabet) {
  WellDefinedness r;
  const std::size_t n = code.length(), win = code.window();
  for (std::size_t len = win; len <= 2 * n; ++len) {
    for (const Word& x : all_words(alphabet, len)) {
      std::optional<Word> whole;
      try {
        whole = apply_swap(code, x);
      } catch (const InvalidArgument&) {
      }
      for (std::size_t c = n - 1; c + n - 1 < len; ++c) {
        ++r.windows_checked;
        auto s = swap_rule(code, x.substr(c - (n - 1), win));
        if (!s || !whole || (*whole)[c] != *s) {
          r.ok = false;
          r.witness = x.str() + "@" + std::to_string(c);
          return r;
        }
      }
    }
  }
  return r;
}

namespace {

std::optional<Word> try_swap(const SwapCode& code, const Word& x) {
  try {
    return apply_swap(code, x);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

void note(ConjugacyReport& rep, std::string s) {
  if (rep.witnesses.size() < 16) rep.witnesses.push_back(std::move(s));
}

// Block images of `from` words, compared with the target language one radius
// shorter on each side.
void check_interior(ConjugacyReport& rep, const SwapCode& code, const std::vector<Word>& from,
                    const std::vector<Word>& target, const char* tag) {
  std::set<Word> want(target.begin(), target.end()), got;
  for (const Word& x : from) {
    auto y = block_map(code, x);
    if (!y) {
      rep.interior_onto = false;
      note(rep, std::string(tag) + " conflict in " + x.str());
      continue;
    }
    if (!want.count(*y)) {
      rep.interior_onto = false;
      note(rep, std::string(tag) + " " + x.str() + " -> " + y->str() + " outside the target language");
    }
    got.insert(*y);
  }
  for (const Word& y : want)
    if (!got.count(y)) {
      rep.interior_onto = false;
      note(rep, std::string(tag) + " " + y.str() + " is not an image");
      break;
    }
}

}  // namespace

ConjugacyReport verify_conjugacy(const LabeledGraph& g, const Word& u, const Word& w, std::size_t n_max, double tol) {
  ConjugacyReport rep;
  rep.admissibility = swap_admissible(g, u, w);
  if (!rep.admissibility.admissible()) throw InvalidArgument("swap pair is not admissible");
  rep.n_max = n_max;
  const SwapCode code(u, w);
  const std::size_t r = code.length() - 1;
  const Dfa du = language_dfa(g, {u});
  const Dfa dw = language_dfa(g, {w});
  std::vector<std::vector<Word>> lu, lw;
  for (std::size_t j = 0; j <= n_max; ++j) {
    lu.push_back(du.words(j));
    lw.push_back(dw.words(j));
    rep.counts_u.push_back(lu[j].size());
    rep.counts_w.push_back(lw[j].size());

    std::set<Word> target(lw[j].begin(), lw[j].end()), hit;
    for (const Word& x : lu[j]) {
      auto y = try_swap(code, x);
      if (!y) {
        rep.word_bijection = false;
        rep.involution = false;
        note(rep, "conflict in " + x.str());
        continue;
      }
      if (!target.count(*y)) {
        rep.word_bijection = false;
        note(rep, x.str() + " -> " + y->str() + " not in L(X_w)");
      } else if (!hit.insert(*y).second) {
        rep.word_bijection = false;
        note(rep, "collision at " + y->str());
      }
      if (try_swap(code, *y) != x) {
        rep.involution = false;
        note(rep, "not an involution at " + x.str());
      }
    }
    if (hit.size() != target.size()) rep.word_bijection = false;
    for (const Word& x : lw[j]) {
      auto y = try_swap(code, x);
      if (!y || try_swap(code, *y) != x) {
        rep.involution = false;
        note(rep, "not an involution at " + x.str());
      }
    }
    if (j >= 2 * r) {
      check_interior(rep, code, lu[j], lw[j - 2 * r], "u->w");
      check_interior(rep, code, lw[j], lu[j - 2 * r], "w->u");
    }
  }
  auto gu = language_growth(g, {u}), gw = language_growth(g, {w});
  rep.lambda_u = gu.lambda;
  rep.lambda_w = gw.lambda;
  rep.entropies_agree = gu.empty == gw.empty && std::fabs(gu.lambda - gw.lambda) <= tol;
  return rep;
}

}  // namespace symdyn
