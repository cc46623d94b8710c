#pragma once

// Words, eventually periodic points and clopen sets of the Cantor space
// X_{d,k} = [k] x [d]^N.
//
// Letters are stored as raw bytes with values 1..d (tail) or 1..k (root), so
// byte-lexicographic order on the underlying strings is the word order used
// for every canonical form in the library: a prefix sorts before all of its
// extensions, and siblings w1 .. wd are adjacent in any antichain.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace htg {

using Letter = unsigned char;

// A finite sequence of tail letters (values 1..d).
using Letters = std::string;

struct Alphabet {
  int d = 2;
  int k = 1;
  int m = 1;

  Alphabet() = default;
  // Throws InvalidArgument unless 2 <= d <= 9, 1 <= k <= 255, m >= 1.
  Alphabet(int d, int k, int m = 1);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

std::string to_string(const Alphabet& a);

// Throws MismatchedAlphabet when `a != b`.
void require_same(const Alphabet& a, const Alphabet& b, std::string_view context);

class Word {
 public:
  Word() : letters_(1, char{1}) {}
  explicit Word(int root, std::string_view tail = {});

  int root() const noexcept { return static_cast<Letter>(letters_[0]); }
  // |w| = 1 + number of tail letters.
  std::size_t length() const noexcept { return letters_.size(); }
  std::size_t tail_size() const noexcept { return letters_.size() - 1; }
  Letter tail_at(std::size_t i) const noexcept {
    return static_cast<Letter>(letters_[i + 1]);
  }
  std::string_view tail() const noexcept {
    return std::string_view(letters_).substr(1);
  }
  Letter last() const noexcept { return static_cast<Letter>(letters_.back()); }

  Word child(Letter c) const;
  Word extended(std::string_view tail) const;
  // Drops the last tail letter; the root word has no parent.
  Word parent() const;
  // The first `len` letters (root included); 1 <= len <= length().
  Word prefix(std::size_t len) const;

  bool is_prefix_of(const Word& other) const noexcept {
    return other.letters_.size() >= letters_.size() &&
           std::string_view(other.letters_).substr(0, letters_.size()) == letters_;
  }
  bool comparable(const Word& other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }
  bool valid_for(const Alphabet& a) const noexcept;

  const std::string& raw() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.raw());
  }
};

// The d children w1, ..., wd in order.
std::vector<Word> split(const Alphabet& a, const Word& w);

// Text form `r:t1t2...`. For k = 1 the root may be omitted on input and is
// omitted on output unless the tail is empty. For k >= 2 an input without a
// colon reads its first character as the root.
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Alphabet& a, const Word& w);

// An eventually periodic point preperiod . period^inf in canonical form:
// the period is primitive and the preperiod tail cannot absorb a rotation of
// the period.
class Point {
 public:
  Point(const Alphabet& a, Word preperiod, Letters period);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& preperiod() const noexcept { return preperiod_; }
  const Letters& period() const noexcept { return period_; }

  int root() const noexcept { return preperiod_.root(); }
  // The i-th tail letter, 0-based.
  Letter tail_at(std::size_t i) const noexcept;
  // The first `len` letters of the infinite word, root included.
  Word prefix(std::size_t len) const;
  // nu followed by this point with its root and first `drop` tail letters
  // removed.
  Point substitute(const Word& nu, std::size_t drop) const;

  friend bool operator==(const Point& a, const Point& b) noexcept {
    return a.preperiod_ == b.preperiod_ && a.period_ == b.period_;
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept {
    if (auto c = a.preperiod_ <=> b.preperiod_; c != 0) return c;
    return a.period_.compare(b.period_) <=> 0;
  }

 private:
  Alphabet alphabet_;
  Word preperiod_;
  Letters period_;
};

Point point_normalize(const Alphabet& a, const Word& preperiod, const Letters& period);

// Text form `u(v)^inf`, e.g. `1:2(12)^inf`; for k = 1, `2(1)^inf`.
Point parse_point(const Alphabet& a, std::string_view text);
std::string format_point(const Point& x);

// A clopen subset as its canonical antichain of cylinder prefixes: sorted,
// no member is a prefix of another, and no complete sibling family is
// present. The whole space is the family of the k root words; the empty set
// has no prefixes.
class Clopen {
 public:
  explicit Clopen(const Alphabet& a) : alphabet_(a) {}

  static Clopen whole(const Alphabet& a);
  static Clopen cylinder(const Alphabet& a, const Word& w);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Word> prefixes() const noexcept { return prefixes_; }
  bool empty() const noexcept { return prefixes_.empty(); }
  bool is_whole() const noexcept;
  std::size_t max_length() const noexcept;

  friend bool operator==(const Clopen& a, const Clopen& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.prefixes_ == b.prefixes_;
  }

 private:
  friend Clopen clopen_normalize(const Alphabet&, std::vector<Word>);
  Alphabet alphabet_;
  std::vector<Word> prefixes_;
};

Clopen clopen_normalize(const Alphabet& a, std::vector<Word> words);

Clopen unite(const Clopen& a, const Clopen& b);
Clopen intersect(const Clopen& a, const Clopen& b);
Clopen complement(const Clopen& a);
Clopen difference(const Clopen& a, const Clopen& b);
Clopen symmetric_difference(const Clopen& a, const Clopen& b);
bool subset(const Clopen& a, const Clopen& b);

bool member(const Point& x, const Clopen& a);

// Text form `{w1,w2,...}`; any order and whitespace accepted on input.
Clopen parse_clopen(const Alphabet& a, std::string_view text);
std::string format_clopen(const Clopen& c);

}  // namespace htg
