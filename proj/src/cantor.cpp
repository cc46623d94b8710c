#include "htg/cantor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "htg/error.hpp"
#include "text.hpp"

namespace htg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::MismatchedAlphabet: return "MismatchedAlphabet";
    case ErrorKind::OverlappingDomain: return "OverlappingDomain";
    case ErrorKind::IncompleteDomain: return "IncompleteDomain";
    case ErrorKind::OverlappingRange: return "OverlappingRange";
    case ErrorKind::IncompleteRange: return "IncompleteRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::NotRelated: return "NotRelated";
    case ErrorKind::NotTransportable: return "NotTransportable";
    case ErrorKind::OverlappingBoxes: return "OverlappingBoxes";
    case ErrorKind::IncompleteBoxes: return "IncompleteBoxes";
    case ErrorKind::DisjointnessViolation: return "DisjointnessViolation";
    case ErrorKind::InclusionViolation: return "InclusionViolation";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::InconclusiveParameters: return "InconclusiveParameters";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(int d_, int k_, int m_) : d(d_), k(k_), m(m_) {
  if (d < 2 || d > 9)
    throw Error(ErrorKind::InvalidArgument, "branching degree d must be in [2, 9], got " +
                                                std::to_string(d));
  if (k < 1 || k > 255)
    throw Error(ErrorKind::InvalidArgument, "root arity k must be in [1, 255], got " +
                                                std::to_string(k));
  if (m < 1)
    throw Error(ErrorKind::InvalidArgument, "factor count m must be >= 1");
}

std::string to_string(const Alphabet& a) {
  std::string s = "(d=" + std::to_string(a.d) + ", k=" + std::to_string(a.k);
  if (a.m != 1) s += ", m=" + std::to_string(a.m);
  return s + ")";
}

void require_same(const Alphabet& a, const Alphabet& b, std::string_view context) {
  if (a != b)
    throw Error(ErrorKind::MismatchedAlphabet,
                std::string(context) + ": " + to_string(a) + " vs " + to_string(b));
}

// ---------------------------------------------------------------------------
// Word

Word::Word(int root, std::string_view tail) {
  letters_.reserve(1 + tail.size());
  letters_.push_back(static_cast<char>(root));
  letters_.append(tail);
}

Word Word::child(Letter c) const {
  Word w = *this;
  w.letters_.push_back(static_cast<char>(c));
  return w;
}

Word Word::extended(std::string_view tail) const {
  Word w = *this;
  w.letters_.append(tail);
  return w;
}

Word Word::parent() const {
  if (tail_size() == 0) throw Error(ErrorKind::InvalidArgument, "root word has no parent");
  Word w = *this;
  w.letters_.pop_back();
  return w;
}

Word Word::prefix(std::size_t len) const {
  if (len < 1 || len > length())
    throw Error(ErrorKind::InvalidArgument, "prefix length out of range");
  Word w;
  w.letters_ = letters_.substr(0, len);
  return w;
}

bool Word::valid_for(const Alphabet& a) const noexcept {
  if (root() < 1 || root() > a.k) return false;
  return std::all_of(letters_.begin() + 1, letters_.end(), [&](char c) {
    const int v = static_cast<Letter>(c);
    return v >= 1 && v <= a.d;
  });
}

std::vector<Word> split(const Alphabet& a, const Word& w) {
  std::vector<Word> out;
  out.reserve(a.d);
  for (int c = 1; c <= a.d; ++c) out.push_back(w.child(static_cast<Letter>(c)));
  return out;
}

namespace {

Letters parse_letters(const Alphabet& a, std::string_view digits, std::string_view whole) {
  Letters out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '1' || ch > '0' + a.d)
      throw Error(ErrorKind::Parse, "letter '" + std::string(1, ch) + "' outside [1.." +
                                        std::to_string(a.d) + "] in '" + std::string(whole) +
                                        "'");
    out.push_back(static_cast<char>(ch - '0'));
  }
  return out;
}

int parse_root(const Alphabet& a, std::string_view digits, std::string_view whole) {
  int root = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), root);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || root < 1 || root > a.k)
    throw Error(ErrorKind::Parse, "root letter outside [1.." + std::to_string(a.k) +
                                      "] in '" + std::string(whole) + "'");
  return root;
}

void append_letters(std::string& out, std::string_view letters) {
  for (char c : letters) out.push_back(static_cast<char>('0' + c));
}

}  // namespace

Word parse_word(const Alphabet& a, std::string_view text) {
  text = detail::trim(text);
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    const int root = parse_root(a, text.substr(0, colon), text);
    return Word(root, parse_letters(a, text.substr(colon + 1), text));
  }
  if (a.k == 1) return Word(1, parse_letters(a, text, text));
  if (text.empty()) throw Error(ErrorKind::Parse, "empty word");
  const int root = parse_root(a, text.substr(0, 1), text);
  return Word(root, parse_letters(a, text.substr(1), text));
}

std::string format_word(const Alphabet& a, const Word& w) {
  std::string out;
  if (a.k != 1 || w.tail_size() == 0) out = std::to_string(w.root()) + ":";
  append_letters(out, w.tail());
  return out;
}

// ---------------------------------------------------------------------------
// Point

namespace {

Letters primitive_root(const Letters& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = v[i] == v[i - p];
    if (periodic) return v.substr(0, p);
  }
  return v;
}

}  // namespace

Point::Point(const Alphabet& a, Word preperiod, Letters period)
    : alphabet_(a), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::InvalidArgument, "period must be nonempty");
  if (!preperiod_.valid_for(a))
    throw Error(ErrorKind::InvalidArgument, "preperiod letters outside alphabet");
  for (char c : period_)
    if (static_cast<Letter>(c) < 1 || static_cast<Letter>(c) > a.d)
      throw Error(ErrorKind::InvalidArgument, "period letters outside alphabet");
  period_ = primitive_root(period_);
  // Absorb trailing preperiod letters into the period by rotating it right.
  while (preperiod_.tail_size() > 0 && preperiod_.last() == static_cast<Letter>(period_.back())) {
    preperiod_ = preperiod_.parent();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

Letter Point::tail_at(std::size_t i) const noexcept {
  const std::size_t u = preperiod_.tail_size();
  if (i < u) return preperiod_.tail_at(i);
  return static_cast<Letter>(period_[(i - u) % period_.size()]);
}

Word Point::prefix(std::size_t len) const {
  if (len <= preperiod_.length()) return preperiod_.prefix(len);
  std::string extra;
  extra.reserve(len - preperiod_.length());
  for (std::size_t i = preperiod_.tail_size(); i + 1 < len; ++i)
    extra.push_back(static_cast<char>(tail_at(i)));
  return preperiod_.extended(extra);
}

Point Point::substitute(const Word& nu, std::size_t drop) const {
  const std::size_t u = preperiod_.tail_size();
  if (drop < u) return Point(alphabet_, nu.extended(preperiod_.tail().substr(drop)), period_);
  Letters rotated = period_;
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>((drop - u) % rotated.size()),
              rotated.end());
  return Point(alphabet_, nu, std::move(rotated));
}

Point point_normalize(const Alphabet& a, const Word& preperiod, const Letters& period) {
  return Point(a, preperiod, period);
}

Point parse_point(const Alphabet& a, std::string_view text) {
  text = detail::trim(text);
  const auto open = text.find('(');
  const auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      detail::trim(text.substr(close + 1)) != "^inf")
    throw Error(ErrorKind::Parse, "point must look like u(v)^inf: '" + std::string(text) + "'");
  const auto head = detail::trim(text.substr(0, open));
  Word pre = head.empty() ? Word(1) : parse_word(a, head);
  if (head.empty() && a.k != 1)
    throw Error(ErrorKind::Parse, "point needs a root letter when k > 1: '" + std::string(text) + "'");
  Letters period = parse_letters(a, text.substr(open + 1, close - open - 1), text);
  if (period.empty()) throw Error(ErrorKind::Parse, "empty period in '" + std::string(text) + "'");
  return Point(a, std::move(pre), std::move(period));
}

std::string format_point(const Point& x) {
  std::string out;
  if (x.alphabet().k == 1)
    append_letters(out, x.preperiod().tail());
  else
    out = format_word(x.alphabet(), x.preperiod());
  out += "(";
  append_letters(out, x.period());
  out += ")^inf";
  return out;
}

// ---------------------------------------------------------------------------
// Clopen

Clopen Clopen::whole(const Alphabet& a) {
  Clopen c(a);
  for (int r = 1; r <= a.k; ++r) c.prefixes_.emplace_back(r);
  return c;
}

Clopen Clopen::cylinder(const Alphabet& a, const Word& w) {
  return clopen_normalize(a, {w});
}

bool Clopen::is_whole() const noexcept {
  if (prefixes_.size() != static_cast<std::size_t>(alphabet_.k)) return false;
  return std::all_of(prefixes_.begin(), prefixes_.end(),
                     [](const Word& w) { return w.tail_size() == 0; });
}

std::size_t Clopen::max_length() const noexcept {
  std::size_t best = 0;
  for (const auto& w : prefixes_) best = std::max(best, w.length());
  return best;
}

Clopen clopen_normalize(const Alphabet& a, std::vector<Word> words) {
  for (const auto& w : words)
    if (!w.valid_for(a))
      throw Error(ErrorKind::MismatchedAlphabet, "word outside alphabet " + to_string(a));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  Clopen out(a);
  auto& acc = out.prefixes_;
  const std::size_t d = static_cast<std::size_t>(a.d);
  for (auto& w : words) {
    // In sorted order any kept ancestor of w is the most recently kept word.
    if (!acc.empty() && acc.back().is_prefix_of(w)) continue;
    acc.push_back(std::move(w));
    while (acc.size() >= d && acc.back().tail_size() > 0 &&
           acc.back().last() == static_cast<Letter>(a.d)) {
      const Word parent = acc.back().parent();
      bool family = true;
      for (std::size_t i = 0; i < d && family; ++i)
        family = acc[acc.size() - d + i] == parent.child(static_cast<Letter>(i + 1));
      if (!family) break;
      acc.resize(acc.size() - d);
      acc.push_back(parent);
    }
  }
  return out;
}

Clopen unite(const Clopen& a, const Clopen& b) {
  require_same(a.alphabet(), b.alphabet(), "union");
  std::vector<Word> all(a.prefixes().begin(), a.prefixes().end());
  all.insert(all.end(), b.prefixes().begin(), b.prefixes().end());
  return clopen_normalize(a.alphabet(), std::move(all));
}

namespace {

// Index range of sorted words having `p` as a prefix.
std::pair<std::size_t, std::size_t> extensions_of(std::span<const Word> sorted, const Word& p) {
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), p);
  auto hi = lo;
  while (hi != sorted.end() && p.is_prefix_of(*hi)) ++hi;
  return {static_cast<std::size_t>(lo - sorted.begin()), static_cast<std::size_t>(hi - sorted.begin())};
}

bool has_ancestor_or_self(std::span<const Word> sorted, const Word& w) {
  for (std::size_t len = 1; len <= w.length(); ++len)
    if (std::binary_search(sorted.begin(), sorted.end(), w.prefix(len))) return true;
  return false;
}

void complement_below(const Alphabet& a, const Word& p, std::span<const Word> below,
                      std::vector<Word>& out) {
  if (below.empty()) {
    out.push_back(p);
    return;
  }
  if (below.front() == p) return;
  std::size_t pos = 0;
  for (int c = 1; c <= a.d; ++c) {
    const Word ch = p.child(static_cast<Letter>(c));
    std::size_t end = pos;
    while (end < below.size() && ch.is_prefix_of(below[end])) ++end;
    complement_below(a, ch, below.subspan(pos, end - pos), out);
    pos = end;
  }
}

}  // namespace

Clopen intersect(const Clopen& a, const Clopen& b) {
  require_same(a.alphabet(), b.alphabet(), "intersect");
  std::vector<Word> out;
  const auto bs = b.prefixes();
  for (const auto& w : a.prefixes()) {
    if (has_ancestor_or_self(bs, w)) {
      out.push_back(w);
      continue;
    }
    const auto [lo, hi] = extensions_of(bs, w);
    out.insert(out.end(), bs.begin() + static_cast<std::ptrdiff_t>(lo),
               bs.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return clopen_normalize(a.alphabet(), std::move(out));
}

Clopen complement(const Clopen& a) {
  std::vector<Word> out;
  const auto ws = a.prefixes();
  std::size_t pos = 0;
  for (int r = 1; r <= a.alphabet().k; ++r) {
    const Word root(r);
    std::size_t end = pos;
    while (end < ws.size() && ws[end].root() == r) ++end;
    complement_below(a.alphabet(), root, ws.subspan(pos, end - pos), out);
    pos = end;
  }
  return clopen_normalize(a.alphabet(), std::move(out));
}

Clopen difference(const Clopen& a, const Clopen& b) { return intersect(a, complement(b)); }

Clopen symmetric_difference(const Clopen& a, const Clopen& b) {
  return unite(difference(a, b), difference(b, a));
}

bool subset(const Clopen& a, const Clopen& b) { return intersect(a, b) == a; }

bool member(const Point& x, const Clopen& a) {
  require_same(x.alphabet(), a.alphabet(), "member");
  const auto ws = a.prefixes();
  const std::size_t longest = a.max_length();
  for (std::size_t len = 1; len <= longest; ++len)
    if (std::binary_search(ws.begin(), ws.end(), x.prefix(len))) return true;
  return false;
}

Clopen parse_clopen(const Alphabet& a, std::string_view text) {
  std::vector<Word> words;
  for (auto item : detail::split_braced(text, "clopen")) words.push_back(parse_word(a, item));
  return clopen_normalize(a, std::move(words));
}

std::string format_clopen(const Clopen& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& w : c.prefixes()) {
    if (!first) out += ",";
    first = false;
    out += format_word(c.alphabet(), w);
  }
  return out + "}";
}

}  // namespace htg
