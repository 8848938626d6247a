#include "symdyn/word.hpp"

#include <algorithm>

#include "symdyn/error.hpp"
#include "symdyn/polynomial.hpp"

namespace symdyn {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size == 0) throw InvalidArgument("alphabet must have at least one symbol");
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      out.push_back(static_cast<Symbol>(ch - '0'));
    } else if (ch >= 'a' && ch <= 'z') {
      out.push_back(static_cast<Symbol>(ch - 'a' + 10));
    } else {
      throw InvalidArgument("bad symbol '" + std::string(1, ch) + "' in word \"" + std::string(text) + "\"");
    }
  }
  return Word(std::move(out));
}

Word Word::repeat(Symbol s, std::size_t n) { return Word(std::vector<Symbol>(n, s)); }

std::size_t Word::min_alphabet() const {
  if (symbols_.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(symbols_.begin(), symbols_.end())) + 1;
}

bool Word::fits(const Alphabet& a) const {
  return std::all_of(symbols_.begin(), symbols_.end(), [&](Symbol s) { return a.contains(s); });
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos + len > size()) throw InvalidArgument("substring out of range");
  return Word(std::vector<Symbol>(symbols_.begin() + static_cast<long>(pos),
                                  symbols_.begin() + static_cast<long>(pos + len)));
}

bool Word::contains(const Word& sub) const {
  if (sub.empty()) return true;
  return std::search(symbols_.begin(), symbols_.end(), sub.symbols_.begin(), sub.symbols_.end()) !=
         symbols_.end();
}

bool Word::is_prefix_of(const Word& other) const {
  return size() <= other.size() && std::equal(symbols_.begin(), symbols_.end(), other.symbols_.begin());
}

Word Word::operator+(const Word& rhs) const {
  Word r = *this;
  r += rhs;
  return r;
}

Word& Word::operator+=(const Word& rhs) {
  symbols_.insert(symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return *this;
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (Symbol c : symbols_) {
    if (c < 10) {
      s.push_back(static_cast<char>('0' + c));
    } else if (c < 36) {
      s.push_back(static_cast<char>('a' + c - 10));
    } else {
      s += "<" + std::to_string(c) + ">";
    }
  }
  return s;
}

Word reverse(const Word& w) {
  std::vector<Symbol> s = w.symbols();
  std::reverse(s.begin(), s.end());
  return Word(std::move(s));
}

CorrelationSet::CorrelationSet(std::size_t length, std::vector<std::size_t> positions)
    : length_(length), positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
  if (!positions_.empty() && positions_.back() >= length_) throw InvalidArgument("correlation position out of range");
}

bool CorrelationSet::contains(std::size_t l) const {
  return std::binary_search(positions_.begin(), positions_.end(), l);
}

Polynomial CorrelationSet::polynomial() const {
  std::vector<Rational> c(positions_.empty() ? 0 : positions_.back() + 1);
  for (std::size_t l : positions_) c[l] = 1;
  return Polynomial(std::move(c));
}

CorrelationSet correlate(const Word& u, const Word& w) {
  if (u.size() != w.size()) throw InvalidArgument("correlation needs words of equal length");
  const std::size_t n = u.size();
  std::vector<std::size_t> pos;
  for (std::size_t l = 0; l < n; ++l) {
    // suffix of u of length l+1 vs prefix of w of length l+1
    bool match = true;
    for (std::size_t i = 0; i <= l && match; ++i) match = u[n - 1 - l + i] == w[i];
    if (match) pos.push_back(l);
  }
  return CorrelationSet(n, std::move(pos));
}

CorrelationSet correlate(const Word& u, const Word& w, const Alphabet& a) {
  if (!u.fits(a) || !w.fits(a)) throw InvalidArgument("word symbol outside the alphabet");
  return correlate(u, w);
}

bool is_prime(const Word& w) {
  if (w.empty()) return false;
  auto c = correlate(w, w);
  return c.positions().size() == 1;
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t n) {
  std::vector<Word> out;
  std::vector<Symbol> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] + 1 < alphabet) {
        ++cur[i];
        std::fill(cur.begin() + static_cast<long>(i) + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace symdyn
