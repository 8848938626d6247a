#include "symdyn/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "symdyn/error.hpp"
#include "symdyn/language.hpp"
#include "symdyn/perron.hpp"
#include "symdyn/poly_matrix.hpp"

namespace symdyn {

ForbiddenSet::ForbiddenSet(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw InvalidArgument("forbidden set must be nonempty");
  for (const auto& w : words_)
    if (w.empty()) throw InvalidArgument("forbidden words must be nonempty");
  if (!is_reduced(words_)) throw InvalidArgument("forbidden set is not reduced (one word contains another)");
}

Polynomial overlap_polynomial(const Word& u, const Word& v) {
  const std::size_t top = std::min(u.size(), v.size());
  std::vector<Rational> c(top);
  for (std::size_t t = 1; t <= top; ++t) {
    bool match = true;
    for (std::size_t i = 0; i < t && match; ++i) match = u[u.size() - t + i] == v[i];
    if (match) c[t - 1] = 1;
  }
  return Polynomial(std::move(c));
}

WalkInfo walk_info(const LabeledGraph& edges, const Word& walk) {
  if (walk.empty()) return {false, 0, 0};
  for (Symbol e : walk.symbols())
    if (e >= edges.edges().size()) return {false, 0, 0};
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (edges.edge(walk[i]).target != edges.edge(walk[i + 1]).source) return {false, 0, 0};
  return {true, edges.edge(walk.front()).source, edges.edge(walk.back()).target};
}

namespace {

std::size_t oracle_len(const EngineOptions& opt) { return std::max<std::size_t>(opt.oracle_n, 6); }

OracleCheck run_oracle(const LabeledGraph& g, const std::vector<Word>& k, const EngineOptions& opt) {
  OracleCheck o;
  o.performed = true;
  const std::size_t n = oracle_len(opt);
  o.counts = count_words(g, k, n, CountMode::kShift);
  o.avoiding_counts = count_words(g, k, n, CountMode::kAvoiding);
  auto growth = language_growth(g, k, opt.tol);
  o.empty = growth.empty;
  o.lambda = growth.lambda;
  return o;
}

void compare_series(OracleCheck& o, const SeriesPrefix& s) {
  o.series_checked = true;
  o.series_agree = true;
  for (std::size_t i = 0; i < o.avoiding_counts.size() && i < s.coefficients.size(); ++i) {
    if (s.coefficients[i] != Rational(o.avoiding_counts[i])) {
      o.series_agree = false;
      std::ostringstream os;
      os << "series coefficient " << i << " is " << s.coefficients[i].get_str() << ", oracle counts "
         << o.avoiding_counts[i].get_str() << "; ";
      o.detail += os.str();
      break;
    }
  }
  if (!s.principal.empty() &&
      std::any_of(s.principal.begin(), s.principal.end(), [](const Rational& q) { return q != 0; })) {
    o.series_agree = false;
    o.detail += "generating function has a polynomial part; ";
  }
}

// Fixes lambda/entropy from the closed-form root and the oracle verdict.
void settle(PerturbationResult& r, std::optional<double> root, const EngineOptions& opt) {
  if (r.oracle.performed && r.oracle.empty) {
    r.empty = true;
    r.lambda = 0.0;
  } else if (root) {
    r.lambda = *root;
  } else if (r.oracle.performed) {
    // No root in the search interval but words of every length survive.
    r.lambda = 1.0;
    r.notes.push_back("no zero in the search interval; zero entropy taken from the oracle");
  } else {
    r.empty = true;
    r.lambda = 0.0;
    r.notes.push_back("no zero in the search interval and oracle disabled; reported as empty");
  }
  r.entropy = r.empty ? -std::numeric_limits<double>::infinity() : std::log(r.lambda);
  if (r.oracle.performed) {
    auto& o = r.oracle;
    if (o.empty) {
      o.lambda_agree = !root.has_value() || *root <= 0.0 || r.empty;
    } else {
      o.lambda_agree = std::abs(r.lambda - o.lambda) <= opt.lambda_tol;
    }
    if (root && !o.empty && std::abs(*root - o.lambda) > opt.lambda_tol) o.lambda_agree = false;
    if (!o.lambda_agree) {
      std::ostringstream os;
      os.precision(12);
      os << "closed form lambda " << (root ? *root : 0.0) << " vs automaton " << o.lambda << "; ";
      o.detail += os.str();
    }
    o.agree = o.lambda_agree && (!o.series_checked || o.series_agree);
  }
}

std::optional<int> monomial_ratio(const RationalFunction& lit, const RationalFunction& f) {
  if (f.is_zero() || lit.is_zero()) return std::nullopt;
  RationalFunction q = lit / f;
  const auto& n = q.numerator();
  const auto& d = q.denominator();
  auto is_monic_monomial = [](const Polynomial& p) { return p.leading() == 1 && p.valuation() == p.degree(); };
  if (!is_monic_monomial(n) || !is_monic_monomial(d)) return std::nullopt;
  return n.degree() - d.degree();
}

Polynomial char_matrix_entry(const DirectedGraph& a, std::size_t i, std::size_t j) {
  Polynomial e = Polynomial::constant(-static_cast<long>(a.count(i, j)));
  if (i == j) e += Polynomial::z();
  return e;
}

// adj(B)_{i,j} = (-1)^{i+j} det(B with row j and column i removed).
Polynomial adjugate_entry(const DirectedGraph& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.vertex_count();
  PolyMatrix m(n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == j) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == i) continue;
      m(rr, cc++) = char_matrix_entry(a, r, c);
    }
    ++rr;
  }
  Polynomial d = determinant(m);
  return (i + j) % 2 == 0 ? d : -d;
}

// Block system for graphs whose labels are their edge ids. Returns the
// generating function of K-free walks and the literal variant.
struct MultiSystem {
  RationalFunction f;
  std::optional<RationalFunction> literal;
};

MultiSystem solve_multi(const LabeledGraph& edges, const std::vector<Word>& k) {
  const std::size_t n = edges.vertex_count();
  const std::size_t kk = k.size();
  const DirectedGraph a = edges.underlying();
  std::vector<WalkInfo> info;
  for (const auto& w : k) {
    auto wi = walk_info(edges, w);
    if (!wi.valid) throw InvalidArgument("forbidden word " + w.str() + " is not a walk");
    info.push_back(wi);
  }
  const RationalFunction z(Polynomial::z());
  auto build = [&](bool transpose) {
    RFMatrix p(n + kk, n + kk);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = transpose ? char_matrix_entry(a, j, i) : char_matrix_entry(a, i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < kk; ++v)
        if (info[v].range == i) p(i, n + v) = z;
    for (std::size_t v = 0; v < kk; ++v) {
      p(n + v, info[v].source) = RationalFunction::constant(1);
      for (std::size_t u = 0; u < kk; ++u)
        p(n + v, n + u) = -(z * RationalFunction(overlap_polynomial(k[u], k[v])));
    }
    return p;
  };
  MultiSystem out;
  {
    // Every vertex carries the empty walk; the n copies are merged after.
    std::vector<RationalFunction> rhs(n + kk);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = z;
    auto sol = polymatrix_solve(build(true), rhs);
    RationalFunction f = RationalFunction::constant(-static_cast<long>(n) + 1);
    for (std::size_t i = 0; i < n; ++i) f += sol.solution[i];
    out.f = f;
  }
  try {
    auto sol = polymatrix_solve_first_column(build(false));
    RationalFunction f;
    for (std::size_t i = 0; i < n; ++i) f += sol.solution[i];
    out.literal = f;
  } catch (const SingularMatrix&) {
  }
  return out;
}

PerturbationResult multi_on_edges(const LabeledGraph& edges, const std::vector<Word>& k, const EngineOptions& opt) {
  PerturbationResult r;
  r.ambient_lambda = perron_root(edges.underlying(), opt.tol);
  MultiSystem sys = solve_multi(edges, k);
  r.generating_function = sys.f;
  r.literal_generating_function = sys.literal;
  if (sys.literal) r.normalization_shift = monomial_ratio(*sys.literal, sys.f);
  r.characteristic = sys.f.denominator();
  r.series = series_expand(sys.f, static_cast<int>(oracle_len(opt)));
  if (opt.oracle) {
    r.oracle = run_oracle(edges, k, opt);
    compare_series(r.oracle, *r.series);
  }
  auto root = largest_real_pole(sys.f, 0.0, r.ambient_lambda, opt.tol);
  settle(r, root, opt);
  return r;
}

LabeledGraph with_edge_labels(const LabeledGraph& g) {
  std::vector<LabeledEdge> edges;
  for (EdgeId e = 0; e < g.edges().size(); ++e)
    edges.push_back({g.edge(e).source, g.edge(e).target, static_cast<Symbol>(e)});
  const std::size_t alphabet = std::max<std::size_t>(edges.size(), 1);
  return LabeledGraph(g.vertex_count(), alphabet, std::move(edges));
}

}  // namespace

PerturbationResult sft_entropy_single(const DirectedGraph& a, const Word& walk, const EngineOptions& opt) {
  const LabeledGraph edges = a.edge_presentation();
  const auto wi = walk_info(edges, walk);
  if (!wi.valid) throw InvalidArgument("word " + walk.str() + " is not a walk of the graph");
  PerturbationResult r;
  if (!is_irreducible(a)) r.notes.push_back("adjacency matrix is reducible; formula evaluated anyway");
  r.ambient_lambda = perron_root(a, opt.tol);
  const Polynomial m = characteristic_polynomial(a);
  const Polynomial c = correlate(walk, walk).polynomial();
  r.characteristic = m * c + adjugate_entry(a, wi.range, wi.source);
  if (wi.range != wi.source) {
    Polynomial transposed = m * c + adjugate_entry(a, wi.source, wi.range);
    if (!(transposed == r.characteristic)) {
      auto alt = largest_real_root(transposed, 0.0, r.ambient_lambda, opt.tol);
      std::ostringstream os;
      os.precision(12);
      os << "cofactor with source/range swapped gives " << transposed.str() << " (largest zero "
         << (alt ? *alt : 0.0) << ")";
      r.notes.push_back(os.str());
    }
  }
  if (opt.oracle) r.oracle = run_oracle(edges, {walk}, opt);
  auto root = largest_real_root(r.characteristic, 0.0, r.ambient_lambda, opt.tol);
  settle(r, root, opt);
  return r;
}

PerturbationResult sft_multi_gf(const DirectedGraph& a, const ForbiddenSet& k, const EngineOptions& opt) {
  PerturbationResult r = multi_on_edges(a.edge_presentation(), k.words(), opt);
  if (!is_irreducible(a)) r.notes.push_back("adjacency matrix is reducible");
  return r;
}

PerturbationResult full_shift_gf(std::size_t n, const ForbiddenSet& k, const EngineOptions& opt) {
  DirectedGraph a(1);
  a.add_edges(0, 0, static_cast<unsigned>(n));
  return sft_multi_gf(a, k, opt);
}

SoficPerturbation sofic_perturb(const LabeledGraph& g, const Word& w, const EngineOptions& opt) {
  SoficPerturbation out;
  out.cover = g.is_right_resolving() ? g.essential() : determinize(g.essential()).graph().essential();
  const LabeledGraph edges = with_edge_labels(out.cover);
  out.preimages = label_preimages(out.cover, w);
  PerturbationResult& r = out.result;
  if (out.preimages.empty()) {
    r.ambient_lambda = perron_root(out.cover.underlying(), opt.tol);
    r.lambda = r.ambient_lambda;
    r.entropy = std::log(r.lambda);
    r.characteristic = characteristic_polynomial(out.cover.underlying());
    r.notes.push_back("word does not occur in the shift; the perturbation is trivial");
    out.presentation = out.cover;
    return out;
  }
  std::vector<Word> k;
  for (const auto& p : out.preimages) k.emplace_back(std::vector<Symbol>(p.begin(), p.end()));

  EngineOptions inner = opt;
  r = multi_on_edges(edges, k, inner);
  r.notes.push_back("generating function counts walks of the cover avoiding the lifted words");
  if (opt.oracle) {
    // The lift is checked against walk counts above; the entropy is checked
    // against the label language of g avoiding w.
    OracleCheck walks = r.oracle;
    OracleCheck labels = run_oracle(g, {w}, opt);
    labels.series_checked = walks.series_checked;
    labels.series_agree = walks.series_agree;
    labels.detail = walks.detail;
    r.oracle = labels;
    std::optional<double> root;
    if (!r.empty) root = r.lambda;
    r.empty = false;
    settle(r, root, opt);
  }

  LabeledGraph lifted = avoid_product(edges, k).graph.essential();
  std::vector<LabeledEdge> relabeled;
  for (const auto& e : lifted.edges()) relabeled.push_back({e.source, e.target, out.cover.edge(e.label).label});
  out.presentation = LabeledGraph(lifted.vertex_count(), g.alphabet_size(), std::move(relabeled));
  return out;
}

PerturbationResult sgap_perturb_gf(const GapSet& s, const Word& w, const EngineOptions& opt) {
  if (s.empty()) throw InvalidArgument("S-gap shift needs a nonempty gap set");
  if (!sgap_allows(s, w)) throw InvalidArgument("word " + w.str() + " does not occur in the S-gap shift");
  PerturbationResult r;
  r.ambient_lambda = sgap_entropy(s, opt.tol);
  const LabeledGraph g = sgap_presentation(s);
  const RationalFunction one = RationalFunction::constant(1);

  const bool all_zero = std::all_of(w.symbols().begin(), w.symbols().end(), [](Symbol a) { return a == 0; });
  if (all_zero) {
    // Forbidding 0^n keeps exactly the gaps below n.
    const GapSet s0 = s.below(w.size());
    r.notes.push_back("all-zero word: gap set restricted to " + s0.str());
    if (!s0.empty()) r.characteristic = (one - gap_series(s0)).numerator();
    if (opt.oracle) r.oracle = run_oracle(g, {w}, opt);
    std::optional<double> root;
    if (!s0.empty()) root = sgap_entropy(s0, opt.tol);
    settle(r, root, opt);
    return r;
  }

  const NormalizedWord nw = normalize_wtilde(s, w);
  if (!nw.m) throw Unsupported("word " + w.str() + " starts and ends with 0; no closed form is available");
  if (!nw.boundary_in_gaps)
    r.notes.push_back("boundary zero run of " + w.str() + " is not a gap length; using " + nw.wtilde.str());
  const unsigned long m = *nw.m;
  const RationalFunction c(correlate(nw.wtilde, nw.wtilde).polynomial());
  const RationalFunction ts = gap_series(s);
  const RationalFunction tsc = gap_series(s.complement());
  const GapSet sm = s.shifted(m);
  const RationalFunction tsm = gap_series(sm);
  const RationalFunction tsmc = gap_series(sm.complement());
  const RationalFunction z(Polynomial::z());
  const RationalFunction prefactor = z / RationalFunction(Polynomial{-1, 1});

  const RationalFunction fw = (one - ts) * c + tsm;
  r.characteristic = fw.numerator();
  r.generating_function = prefactor * (c * (one + tsc) - tsmc) / fw;
  r.literal_generating_function = prefactor * (c * (tsc + z) - tsmc) / fw;
  r.normalization_shift = monomial_ratio(*r.literal_generating_function, *r.generating_function);
  r.series = series_expand(*r.generating_function, static_cast<int>(oracle_len(opt)));
  if (opt.oracle) {
    r.oracle = run_oracle(g, {w}, opt);
    // The closed form counts words free of wtilde, which may contain w.
    r.oracle.avoiding_counts = count_words(g, {nw.wtilde}, oracle_len(opt), CountMode::kAvoiding);
    compare_series(r.oracle, *r.series);
  }
  auto root = largest_real_root(r.characteristic, 1.0, r.ambient_lambda, opt.tol);
  settle(r, root, opt);
  return r;
}

PerturbationResult dgap_perturb_entropy(unsigned d, const Word& w, const EngineOptions& opt) {
  const GapSet s = GapSet::multiples(d);
  if (w.empty() || !sgap_allows(s, w)) throw InvalidArgument("word " + w.str() + " does not occur in the d-gap shift");
  const LabeledGraph g = dgap_presentation(d);
  PerturbationResult r;
  r.ambient_lambda = perron_root(g.underlying(), opt.tol);
  Polynomial cu;
  const bool all_zero = std::all_of(w.symbols().begin(), w.symbols().end(), [](Symbol a) { return a == 0; });
  if (all_zero) {
    const std::size_t k = (w.size() + d - 1) / d;
    for (std::size_t i = 1; i <= k; ++i) cu += Polynomial::monomial(static_cast<int>(i * d - 1));
    r.notes.push_back("all-zero word: normalized to 0^" + std::to_string(k * d));
  } else {
    const NormalizedWord nw = normalize_wtilde(s, w);
    const auto pre = label_preimages(g, nw.wtilde);
    if (pre.size() != 1) throw Error("normalized word should have exactly one preimage");
    Word u(std::vector<Symbol>(pre[0].begin(), pre[0].end()));
    cu = correlate(u, u).polynomial();
  }
  const Polynomial md = Polynomial::monomial(static_cast<int>(d)) - Polynomial::monomial(static_cast<int>(d) - 1) -
                        Polynomial::constant(1);
  r.characteristic = md * cu + Polynomial::monomial(static_cast<int>(d) - 1);
  if (opt.oracle) r.oracle = run_oracle(g, {w}, opt);
  auto root = largest_real_root(r.characteristic, 0.0, r.ambient_lambda, opt.tol);
  settle(r, root, opt);
  return r;
}

}  // namespace symdyn
