#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symdyn {

class Polynomial;

using Symbol = std::uint32_t;

class Alphabet {
 public:
  explicit Alphabet(std::size_t size);

  std::size_t size() const { return size_; }
  bool contains(Symbol s) const { return s < size_; }

 private:
  std::size_t size_;
};

// Symbols print as 0-9 then a-z, so alphabets up to 36 letters round-trip
// through strings.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  static Word parse(std::string_view text);
  static Word repeat(Symbol s, std::size_t n);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // Largest symbol + 1, or 0 for the empty word.
  std::size_t min_alphabet() const;
  bool fits(const Alphabet& a) const;

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len, len); }
  bool contains(const Word& sub) const;
  bool is_prefix_of(const Word& other) const;

  Word operator+(const Word& rhs) const;
  Word& operator+=(const Word& rhs);
  void push_back(Symbol s) { symbols_.push_back(s); }

  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

Word reverse(const Word& w);

// Positions l such that the suffix of u of length l+1 equals the prefix of w
// of length l+1.
class CorrelationSet {
 public:
  CorrelationSet(std::size_t length, std::vector<std::size_t> positions);

  std::size_t length() const { return length_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  bool contains(std::size_t l) const;
  bool empty() const { return positions_.empty(); }

  Polynomial polynomial() const;

  bool operator==(const CorrelationSet&) const = default;

 private:
  std::size_t length_;
  std::vector<std::size_t> positions_;
};

CorrelationSet correlate(const Word& u, const Word& w);
CorrelationSet correlate(const Word& u, const Word& w, const Alphabet& a);
bool is_prime(const Word& w);

// All words of length n over {0..N-1} in lexicographic order.
std::vector<Word> all_words(std::size_t alphabet, std::size_t n);

}  // namespace symdyn
