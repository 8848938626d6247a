#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle/oracle.hpp"
#include "symdyn/error.hpp"
#include "symdyn/language.hpp"
#include "symdyn/perturbation.hpp"

using namespace symdyn;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kPlastic = 1.3247179572447460;

LabeledGraph even_shift() { return LabeledGraph(2, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

std::vector<Word> words(std::initializer_list<const char*> w) {
  std::vector<Word> out;
  for (const char* s : w) out.push_back(Word::parse(s));
  return out;
}

void check_series_against_oracle(const PerturbationResult& r, const LabeledGraph& g, const std::vector<Word>& k) {
  REQUIRE(r.series);
  auto ref = oracle::avoiding_counts(g, k, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(r.series->coefficients[n] == Rational(static_cast<unsigned long>(ref[n])));
}

}  // namespace

TEST_SUITE("perturbation") {
  TEST_CASE("single word in the full 2-shift") {
    auto r = sft_entropy_single(DirectedGraph::bouquet(2), Word::parse("11"));
    CHECK(r.lambda == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(r.characteristic == Polynomial{-1, -1, 1});
    CHECK(r.oracle.agree);
    auto s = sft_entropy_single(DirectedGraph::bouquet(2), Word::parse("10"));
    CHECK(s.characteristic == Polynomial{1, -2, 1});
    CHECK(s.lambda == doctest::Approx(1.0));
    CHECK(s.entropy == doctest::Approx(0.0));
    auto t = sft_entropy_single(DirectedGraph::bouquet(2), Word::parse("011"));
    CHECK(t.characteristic == Polynomial{1, 0, -2, 1});
    CHECK(t.lambda == doctest::Approx(kPhi).epsilon(1e-12));
  }

  TEST_CASE("single walk uses the cofactor from range to source") {
    DirectedGraph a({{1, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    auto r = sft_entropy_single(a, Word({1, 2}));
    CHECK(r.oracle.agree);
    CHECK(r.lambda == doctest::Approx(kPhi).epsilon(1e-10));
    CHECK_THROWS_AS(sft_entropy_single(a, Word({0, 2})), InvalidArgument);
  }

  TEST_CASE("multi-word generating functions") {
    auto r = full_shift_gf(2, ForbiddenSet(words({"11"})));
    CHECK(*r.generating_function == RationalFunction(Polynomial{0, 1, 1}, Polynomial{-1, -1, 1}));
    CHECK(r.normalization_shift == -1);
    CHECK(r.lambda == doctest::Approx(kPhi).epsilon(1e-12));
    auto s = full_shift_gf(2, ForbiddenSet(words({"01", "10"})));
    CHECK(*s.generating_function == RationalFunction(Polynomial{1, 1}, Polynomial{-1, 1}));
    CHECK(s.lambda == doctest::Approx(1.0));
    CHECK(s.oracle.agree);
    auto e = full_shift_gf(2, ForbiddenSet(words({"0", "1"})));
    CHECK(e.empty);
    CHECK(e.lambda == 0.0);
    CHECK(std::isinf(e.entropy));
  }

  TEST_CASE("one-word system reproduces the single-word formula") {
    DirectedGraph a({{1, 1}, {1, 1}});
    auto edges = a.edge_presentation();
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& w : all_words(edges.alphabet_size(), n)) {
        if (!walk_info(edges, w).valid) continue;
        auto one = sft_entropy_single(a, w);
        auto many = sft_multi_gf(a, ForbiddenSet({w}));
        CHECK(one.lambda == doctest::Approx(many.lambda).epsilon(1e-10));
      }
  }

  TEST_CASE("multi-word series equal oracle counts of K-free words") {
    std::mt19937 rng(99);
    for (int t = 0; t < 15; ++t) {
      const std::size_t n = 2 + t % 2;
      std::vector<Word> k;
      std::uniform_int_distribution<std::size_t> len(1, 4);
      std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(n - 1));
      for (int i = 0; i < 1 + t % 3; ++i) {
        std::vector<Symbol> s(len(rng) + 1);
        for (auto& x : s) x = sym(rng);
        k.emplace_back(s);
      }
      k = reduce_forbidden(k);
      auto r = full_shift_gf(n, ForbiddenSet(k));
      check_series_against_oracle(r, LabeledGraph::full_shift(n), k);
      CHECK(r.oracle.lambda_agree);
    }
  }

  TEST_CASE("sofic lift") {
    auto r = sofic_perturb(even_shift(), Word::parse("11"));
    CHECK(r.result.lambda == doctest::Approx(kPlastic).epsilon(1e-10));
    CHECK(r.result.oracle.agree);
    CHECK(count_words(r.presentation, {}, 10) == count_words(even_shift(), words({"11"}), 10));
    auto f = sofic_perturb(LabeledGraph::full_shift(2), Word::parse("11"));
    CHECK(f.result.lambda == doctest::Approx(kPhi).epsilon(1e-10));
    auto one = sofic_perturb(even_shift(), Word::parse("1"));
    CHECK(one.result.lambda == doctest::Approx(1.0));
    for (const auto& c : one.result.oracle.counts) CHECK(c == 1);
  }

  TEST_CASE("sofic lift from a non-right-resolving presentation") {
    LabeledGraph g(3, 2, {{0, 1, 0}, {0, 2, 0}, {1, 0, 1}, {2, 2, 1}, {2, 0, 0}});
    CHECK_FALSE(g.is_right_resolving());
    for (const char* w : {"1", "01", "11", "010"}) {
      auto r = sofic_perturb(g, Word::parse(w));
      CHECK(r.result.oracle.lambda_agree);
      CHECK(count_words(r.presentation, {}, 9) == count_words(g, {Word::parse(w)}, 9));
    }
  }

  TEST_CASE("gap-shift closed forms") {
    auto r = sgap_perturb_gf(GapSet::naturals(), Word::parse("11"));
    CHECK(r.characteristic.monic() == Polynomial{-1, -1, 1});
    CHECK(r.lambda == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(r.normalization_shift == 1);
    auto e = sgap_perturb_gf(GapSet::multiples(2), Word::parse("11"));
    CHECK(e.lambda == doctest::Approx(kPlastic).epsilon(1e-12));
    CHECK(e.lambda == doctest::Approx(sgap_entropy(GapSet::multiples(2, 2))).epsilon(1e-12));
    auto m = sgap_perturb_gf(GapSet::naturals(), Word::parse("011"));
    CHECK(m.lambda == doctest::Approx(kPhi).epsilon(1e-12));
    CHECK(*m.generating_function == RationalFunction(Polynomial::monomial(3), Polynomial{1, 0, -2, 1}));
    CHECK_THROWS_AS(sgap_perturb_gf(GapSet::naturals(), Word::parse("010")), Unsupported);
    CHECK_THROWS_AS(sgap_perturb_gf(GapSet::multiples(2), Word::parse("101")), InvalidArgument);
    auto z = sgap_perturb_gf(GapSet::multiples(2), Word::parse("0000"));
    CHECK(z.lambda == doctest::Approx(sgap_entropy(GapSet::finite({0, 2}))).epsilon(1e-12));
  }

  TEST_CASE("gap-shift series equal oracle counts") {
    for (const auto& s : {GapSet::naturals(), GapSet::multiples(2), GapSet::multiples(3), GapSet::multiples(1, 1)}) {
      auto g = sgap_presentation(s);
      for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& w : all_words(2, n)) {
          if (!sgap_allows(s, w) || (w.front() == 0 && w.back() == 0)) continue;
          if (std::none_of(w.symbols().begin(), w.symbols().end(), [](Symbol a) { return a == 1; })) continue;
          auto r = sgap_perturb_gf(s, w);
          // The series counts words free of wtilde; the shift itself can be smaller.
          check_series_against_oracle(r, g, {normalize_wtilde(s, w).wtilde});
          CHECK(r.oracle.lambda_agree);
          CHECK(r.oracle.series_agree);
        }
    }
  }

  TEST_CASE("d-gap closed form") {
    auto r = dgap_perturb_entropy(2, Word::parse("11"));
    CHECK(r.characteristic == Polynomial{-1, -1, 0, 1});
    CHECK(r.lambda == doctest::Approx(kPlastic).epsilon(1e-12));
    auto one = dgap_perturb_entropy(2, Word::parse("1"));
    CHECK(one.characteristic == Polynomial{-1, 0, 1});
    CHECK(one.lambda == doctest::Approx(1.0));
    auto full = dgap_perturb_entropy(1, Word::parse("11"));
    CHECK(full.characteristic == Polynomial{-1, -1, 1});
    for (unsigned d = 1; d <= 3; ++d)
      for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& w : all_words(2, n)) {
          if (!sgap_allows(GapSet::multiples(d), w)) continue;
          CHECK(dgap_perturb_entropy(d, w).oracle.agree);
        }
  }

  TEST_CASE("consistency square") {
    const double full = sft_entropy_single(DirectedGraph::bouquet(2), Word::parse("11")).lambda;
    CHECK(full_shift_gf(2, ForbiddenSet(words({"11"}))).lambda == doctest::Approx(full).epsilon(1e-12));
    CHECK(sofic_perturb(LabeledGraph::full_shift(2), Word::parse("11")).result.lambda == doctest::Approx(full).epsilon(1e-12));
    CHECK(sgap_perturb_gf(GapSet::naturals(), Word::parse("11")).lambda == doctest::Approx(full).epsilon(1e-12));
    CHECK(dgap_perturb_entropy(1, Word::parse("11")).lambda == doctest::Approx(full).epsilon(1e-12));
    const double even = dgap_perturb_entropy(2, Word::parse("11")).lambda;
    CHECK(sofic_perturb(even_shift(), Word::parse("11")).result.lambda == doctest::Approx(even).epsilon(1e-12));
    CHECK(sgap_perturb_gf(GapSet::multiples(2), Word::parse("11")).lambda == doctest::Approx(even).epsilon(1e-12));
  }

  TEST_CASE("overlap polynomial of unequal words") {
    CHECK(overlap_polynomial(Word::parse("011"), Word::parse("11")) == Polynomial{1, 1});
    CHECK(overlap_polynomial(Word::parse("10"), Word::parse("011")) == Polynomial{1});
    CHECK(overlap_polynomial(Word::parse("10"), Word::parse("11")).is_zero());
    CHECK(overlap_polynomial(Word::parse("11"), Word::parse("11")) == correlate(Word::parse("11"), Word::parse("11")).polynomial());
  }

  TEST_CASE("forbidden sets must be reduced and nonempty") {
    CHECK_THROWS_AS(ForbiddenSet({}), InvalidArgument);
    CHECK_THROWS_AS(ForbiddenSet(words({"1", "11"})), InvalidArgument);
  }
}
