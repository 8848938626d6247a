#include <doctest.h>

#include "oracle/oracle.hpp"
#include "symdyn/error.hpp"
#include "symdyn/polynomial.hpp"
#include "symdyn/word.hpp"

using namespace symdyn;

TEST_SUITE("word") {
  TEST_CASE("parse and print") {
    CHECK(Word::parse("0120").str() == "0120");
    CHECK(Word::parse("a9").symbols() == std::vector<Symbol>{10, 9});
    CHECK(Word::parse("").empty());
    CHECK_THROWS_AS(Word::parse("0 1"), InvalidArgument);
    CHECK(Word::parse("120").min_alphabet() == 3);
    CHECK(Word::parse("120").fits(Alphabet(3)));
    CHECK_FALSE(Word::parse("120").fits(Alphabet(2)));
  }

  TEST_CASE("factors") {
    Word w = Word::parse("0110");
    CHECK(w.contains(Word::parse("11")));
    CHECK_FALSE(w.contains(Word::parse("00")));
    CHECK(w.prefix(2) == Word::parse("01"));
    CHECK(w.suffix(3) == Word::parse("110"));
    CHECK(reverse(w) == w);
    CHECK(Word::parse("01").is_prefix_of(w));
    CHECK(Word::repeat(1, 3) == Word::parse("111"));
  }

  TEST_CASE("correlation fixtures") {
    CHECK(correlate(Word::parse("120"), Word::parse("110")).empty());
    CHECK(correlate(Word::parse("110"), Word::parse("120")).empty());
    CHECK(correlate(Word::parse("11"), Word::parse("11")).positions() == std::vector<std::size_t>{0, 1});
    CHECK(correlate(Word::parse("11"), Word::parse("11")).polynomial() == Polynomial{1, 1});
    CHECK(correlate(Word::parse("110"), Word::parse("100")).positions() == std::vector<std::size_t>{1});
    CHECK(correlate(Word::parse("10100"), Word::parse("10100")).polynomial() == Polynomial{0, 0, 0, 0, 1});
    CHECK(correlate(Word::parse("10101"), Word::parse("10101")).polynomial() == Polynomial{1, 0, 1, 0, 1});
    CHECK_THROWS_AS(correlate(Word::parse("1"), Word::parse("10")), InvalidArgument);
    CHECK_THROWS_AS(correlate(Word::parse("3"), Word::parse("1"), Alphabet(2)), InvalidArgument);
  }

  TEST_CASE("correlation agrees with string overlap for all ternary words up to length 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto words = all_words(3, n);
      for (std::size_t i = 0; i < words.size(); i += 7)
        for (std::size_t j = 0; j < words.size(); j += 5) {
          auto c = correlate(words[i], words[j]);
          CHECK(c.positions() == oracle::correlation(words[i].str(), words[j].str()));
        }
    }
  }

  TEST_CASE("self-correlation always contains the full overlap") {
    for (std::size_t n = 1; n <= 8; ++n)
      for (const auto& w : all_words(2, n)) {
        auto c = correlate(w, w);
        CHECK(c.contains(n - 1));
        CHECK(is_prime(w) == (c.positions().size() == 1));
      }
  }

  TEST_CASE("prime words") {
    CHECK(is_prime(Word::parse("120")));
    CHECK(is_prime(Word::parse("0111")));
    CHECK_FALSE(is_prime(Word::parse("101")));
    CHECK_FALSE(is_prime(Word::parse("00")));
    // Number of binary prime words of length 4: 0001 0011 0111 and complements.
    std::size_t primes = 0;
    for (const auto& w : all_words(2, 4)) primes += is_prime(w);
    CHECK(primes == 6);
  }

  TEST_CASE("all_words is lexicographic") {
    auto w = all_words(2, 3);
    REQUIRE(w.size() == 8);
    CHECK(w.front() == Word::parse("000"));
    CHECK(w.back() == Word::parse("111"));
    CHECK(std::is_sorted(w.begin(), w.end()));
    CHECK(all_words(3, 0).size() == 1);
  }
}
