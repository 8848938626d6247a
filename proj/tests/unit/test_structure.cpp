#include <doctest.h>

#include "symdyn/error.hpp"
#include "symdyn/gap_shift.hpp"
#include "symdyn/structure.hpp"

using namespace symdyn;

TEST_SUITE("perturbation") {
  TEST_CASE("forbidding 10 in the full shift is not irreducible") {
    for (std::size_t horizon : {3, 6, 12, 24}) {
      auto r = check_structure(LabeledGraph::full_shift(2), {Word::parse("10")}, horizon);
      CHECK(r.nonempty);
      CHECK_FALSE(r.irreducible_at_horizon);
      CHECK(r.irreducibility_witness == "1|0");
    }
  }

  TEST_CASE("1 synchronizes gap shifts with a zero run forbidden") {
    for (const auto& s : {GapSet::naturals(), GapSet::multiples(1, 1), GapSet::multiples(2), GapSet::multiples(3)})
      for (std::size_t k = 2; k <= 4; ++k) {
        auto r = check_structure(sgap_presentation(s), {Word::repeat(0, k)}, 30, Word::parse("1"));
        REQUIRE(r.sync);
        CHECK(r.sync->passed());
        CHECK(r.irreducible_at_horizon);
      }
  }

  TEST_CASE("candidate inside a forbidden word fails the first hypothesis") {
    auto r = check_structure(LabeledGraph::full_shift(2), {Word::parse("10")}, 8, Word::parse("1"));
    REQUIRE(r.sync);
    CHECK_FALSE(r.sync->not_subword_of_forbidden);
    CHECK(r.sync->in_language);
  }

  TEST_CASE("non-synchronizing candidate has a witness") {
    // In the even shift 0 does not synchronize: 10 0 and 0 01 are allowed, 1001 is, 10 0 1 is not.
    LabeledGraph even(2, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    auto r = check_structure(even, {Word::parse("111")}, 8, Word::parse("0"));
    REQUIRE(r.sync);
    CHECK_FALSE(r.sync->synchronizing_at_horizon);
    CHECK_FALSE(r.sync->witness.empty());
  }

  TEST_CASE("empty perturbation") {
    auto r = check_structure(LabeledGraph::full_shift(2), {Word::parse("0"), Word::parse("1")}, 5, Word::parse("1"));
    CHECK_FALSE(r.nonempty);
    CHECK_FALSE(r.sync->in_language);
    CHECK_THROWS_AS(check_structure(LabeledGraph::full_shift(2), {}, 0), InvalidArgument);
  }

  TEST_CASE("unperturbed irreducible shifts pass") {
    auto r = check_structure(LabeledGraph::full_shift(3), {Word::parse("120")}, 12, Word::parse("0"));
    CHECK(r.irreducible_at_horizon);
    CHECK(r.horizon_limited);
  }
}
