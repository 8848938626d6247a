#include <doctest.h>

#include "symdyn/error.hpp"
#include "symdyn/gap_shift.hpp"
#include "symdyn/swap.hpp"

using namespace symdyn;

namespace {

LabeledGraph golden_mean() { return LabeledGraph(2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}); }

}  // namespace

TEST_SUITE("swap-conjugacy") {
  TEST_CASE("admissibility") {
    auto t = LabeledGraph::full_shift(3);
    CHECK(swap_admissible(t, Word::parse("120"), Word::parse("110")).admissible());
    auto b = swap_admissible(LabeledGraph::full_shift(2), Word::parse("110"), Word::parse("100"));
    CHECK_FALSE(b.admissible());
    CHECK_FALSE(b.correlations);
    CHECK_FALSE(b.reasons.empty());
    CHECK_THROWS_AS(swap_admissible(t, Word::parse("12"), Word::parse("110")), InvalidArgument);
    // Same correlations, different range vertex.
    auto e = swap_admissible(golden_mean(), Word::parse("0001"), Word::parse("0010"));
    CHECK_FALSE(e.ranges);
  }

  TEST_CASE("golden mean pairs starting with 0 and ending with 1") {
    auto g = golden_mean();
    std::size_t found = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
      auto ws = all_words(2, n);
      for (const auto& u : ws)
        for (const auto& w : ws) {
          if (!(u < w) || u.front() != 0 || w.front() != 0 || u.back() != 1 || w.back() != 1) continue;
          auto a = swap_admissible(g, u, w);
          if (!a.correlations || word_endpoints(g, u).sources.empty() || word_endpoints(g, w).sources.empty()) continue;
          CHECK(a.admissible());
          ++found;
          auto r = verify_conjugacy(g, u, w, 10);
          CHECK(r.conjugate());
        }
    }
    CHECK(found == 3);
  }

  TEST_CASE("apply_swap fixture") {
    SwapCode c(Word::parse("120"), Word::parse("110"));
    // Both occurrences of 120 (positions 1 and 5) become 110.
    CHECK(apply_swap(c, Word::parse("0120112011")).str() == "0110111011");
    CHECK(apply_swap(c, Word::parse("0000222")).str() == "0000222");
    CHECK(apply_swap(c, Word::parse("110")).str() == "120");
  }

  TEST_CASE("apply_swap is an involution on all ternary words up to length 10") {
    SwapCode c(Word::parse("120"), Word::parse("110"));
    for (std::size_t n = 0; n <= 10; ++n)
      for (const auto& x : all_words(3, n)) CHECK(apply_swap(c, apply_swap(c, x)) == x);
  }

  TEST_CASE("rule is well defined on windows") {
    SwapCode c(Word::parse("120"), Word::parse("110"));
    auto r = swap_rule_well_defined(c, 3);
    CHECK(r.ok);
    CHECK(r.windows_checked == 243 + 2 * 729);
    CHECK(swap_rule(c, Word::parse("01200")) == Symbol(1));
    CHECK(swap_rule(c, Word::parse("01100")) == Symbol(2));
    CHECK(swap_rule(c, Word::parse("00110")) == Symbol(1));
    CHECK_THROWS_AS(swap_rule(c, Word::parse("0120")), InvalidArgument);
  }

  TEST_CASE("overlapping occurrences conflict without the hypotheses") {
    SwapCode c(Word::parse("11"), Word::parse("10"));
    CHECK_THROWS_AS(apply_swap(c, Word::parse("110")), InvalidArgument);
    CHECK_FALSE(swap_rule_well_defined(c, 2).ok);
  }

  TEST_CASE("ternary conjugacy report") {
    auto r = verify_conjugacy(LabeledGraph::full_shift(3), Word::parse("120"), Word::parse("110"), 10);
    CHECK(r.word_bijection);
    CHECK(r.interior_onto);
    CHECK(r.involution);
    CHECK(r.entropies_agree);
    CHECK(r.counts_u == r.counts_w);
    CHECK(r.counts_u[4] == 75);
    CHECK(r.witnesses.empty());
  }

  TEST_CASE("gap shift pairs with equal boundary zero runs") {
    const auto s = GapSet::multiples(1, 1);
    auto g = sgap_presentation(s);
    auto r = verify_conjugacy(g, Word::parse("0000101"), Word::parse("0001001"), 10);
    CHECK(r.conjugate());
    CHECK(r.lambda_u == doctest::Approx(r.lambda_w).epsilon(1e-12));
  }

  TEST_CASE("identical words") {
    // (u, w) keeps the full overlap, so the correlation condition fails.
    CHECK_FALSE(swap_admissible(LabeledGraph::full_shift(2), Word::parse("011"), Word::parse("011")).correlations);
    CHECK_THROWS_AS(verify_conjugacy(LabeledGraph::full_shift(2), Word::parse("011"), Word::parse("011"), 8),
                    InvalidArgument);
  }

  TEST_CASE("inadmissible pairs are rejected") {
    CHECK_THROWS_AS(verify_conjugacy(LabeledGraph::full_shift(2), Word::parse("110"), Word::parse("100"), 6),
                    InvalidArgument);
  }
}
