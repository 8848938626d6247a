#include <doctest.h>

#include "oracle/oracle.hpp"
#include "symdyn/error.hpp"
#include "symdyn/gap_shift.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/language.hpp"

using namespace symdyn;

namespace {

// Fischer cover of the even shift: 1 loops at 0, 0 goes back and forth.
LabeledGraph even_shift() { return LabeledGraph(2, 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); }

// Golden mean shift presented with two vertices (no 11).
LabeledGraph golden_mean() { return LabeledGraph(2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("edge presentation numbers edges row-major") {
    DirectedGraph a({{1, 2}, {1, 0}});
    auto e = a.edge_presentation();
    CHECK(e.vertex_count() == 2);
    CHECK(e.alphabet_size() == 4);
    CHECK(e.edge(0).source == 0);
    CHECK(e.edge(0).target == 0);
    CHECK(e.edge(1).target == 1);
    CHECK(e.edge(2).target == 1);
    CHECK(e.edge(3).source == 1);
    CHECK(a.edge_count() == 4);
    for (EdgeId i = 0; i < 4; ++i) CHECK(e.edge(i).label == i);
  }

  TEST_CASE("labels outside the alphabet are rejected") {
    CHECK_THROWS_AS(LabeledGraph(1, 2, {{0, 0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(LabeledGraph(1, 2, {{0, 1, 0}}), InvalidArgument);
  }

  TEST_CASE("strong components and essential part") {
    LabeledGraph g(4, 2, {{0, 1, 0}, {1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {3, 0, 1}});
    std::size_t count = 0;
    auto comp = strongly_connected_components(g.underlying(), &count);
    CHECK(count == 3);
    CHECK(comp[1] == comp[2]);
    CHECK(comp[0] != comp[1]);
    std::vector<std::size_t> map;
    auto e = g.essential(&map);
    CHECK(e.vertex_count() == 2);
    CHECK(map[0] == LabeledGraph::npos);
    CHECK(map[3] == LabeledGraph::npos);
    CHECK(is_irreducible(e));
    CHECK_FALSE(is_irreducible(g));
  }

  TEST_CASE("right-resolving and determinization") {
    CHECK(even_shift().is_right_resolving());
    LabeledGraph nd(2, 2, {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}});
    CHECK_FALSE(nd.is_right_resolving());
    Dfa d = determinize(nd).minimized();
    auto counts = d.count_words(10);
    auto ref = oracle::language_counts(nd, {}, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(counts[n] == Integer(static_cast<unsigned long>(ref[n])));
  }

  TEST_CASE("minimization keeps the language") {
    for (const auto& g : {even_shift(), golden_mean(), sgap_presentation(GapSet::multiples(3, 1))}) {
      Dfa a = determinize(g);
      Dfa m = a.minimized();
      CHECK(m.state_count() <= a.state_count());
      CHECK(a.count_words(12) == m.count_words(12));
      for (const auto& w : m.words(6)) CHECK(a.accepts(w));
    }
  }

  TEST_CASE("DFA word listing is lexicographic and complete") {
    Dfa d = determinize(golden_mean()).minimized();
    auto w = d.words(4);
    CHECK(w.size() == 8);
    CHECK(std::is_sorted(w.begin(), w.end()));
    CHECK(w.front() == Word::parse("0000"));
    CHECK_FALSE(d.accepts(Word::parse("0110")));
  }

  TEST_CASE("endpoints and preimages") {
    auto g = golden_mean();
    auto e = word_endpoints(g, Word::parse("01"));
    CHECK(e.sources == std::vector<VertexId>{0, 1});
    CHECK(e.ranges == std::vector<VertexId>{1});
    auto p = label_preimages(g, Word::parse("010"));
    REQUIRE(p.size() == 2);
    CHECK(p[0] == std::vector<EdgeId>{0, 1, 2});
    CHECK(p[1] == std::vector<EdgeId>{2, 1, 2});
    CHECK(label_preimages(g, Word::parse("11")).empty());
    auto full = LabeledGraph::full_shift(2);
    CHECK(word_endpoints(full, Word::parse("0110")).sources == std::vector<VertexId>{0});
  }
}
