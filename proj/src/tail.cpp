#include "htg/tail.hpp"

#include <algorithm>
#include <numeric>

#include "htg/error.hpp"

namespace htg {

namespace {

// sigma^p(x) with the root normalized to 1, so equality compares tails only.
Point shifted(const Point& x, std::size_t p) { return x.substitute(Word(1), p); }

bool same_rotation_class(const Letters& a, const Letters& b) {
  return a.size() == b.size() && (b + b).find(a) != Letters::npos;
}

}  // namespace

std::optional<TailWitness> related(const Point& x, const Point& y) {
  require_same(x.alphabet(), y.alphabet(), "related");
  if (!same_rotation_class(x.period(), y.period())) return std::nullopt;
  const std::size_t n = x.period().size();
  // Some witness has p <= |u_x|; for fixed p the shifts of y repeat after
  // |u_y| + n.
  for (std::size_t p = 0; p <= x.preperiod().tail_size(); ++p) {
    const Point sx = shifted(x, p);
    for (std::size_t q = 0; q < y.preperiod().tail_size() + n; ++q)
      if (shifted(y, q) == sx) return TailWitness{p, q};
  }
  return std::nullopt;
}

DoubleCylinder witness_cell(const Point& x, const Point& y, const TailWitness& w) {
  require_same(x.alphabet(), y.alphabet(), "witness_cell");
  if (shifted(x, w.p) != shifted(y, w.q))
    throw Error(ErrorKind::NotRelated, format_point(x) + " and " + format_point(y) +
                                           " do not agree after (" + std::to_string(w.p) + ", " +
                                           std::to_string(w.q) + ")");
  return DoubleCylinder{y.prefix(w.q + 2), x.prefix(w.p + 2)};
}

bool finite_level_related(const Point& x, const Point& y, std::size_t n) {
  require_same(x.alphabet(), y.alphabet(), "finite_level_related");
  const std::size_t settled = std::max(x.preperiod().tail_size(), y.preperiod().tail_size());
  const std::size_t window = std::lcm(x.period().size(), y.period().size());
  const std::size_t start = n;
  const std::size_t end = std::max(start, settled) + window;
  for (std::size_t i = start; i < end; ++i)
    if (x.tail_at(i) != y.tail_at(i)) return false;
  return true;
}

std::vector<Point> orbit_fragment(const Point& x, std::size_t max_tail) {
  const Alphabet& a = x.alphabet();
  std::vector<Word> prefixes;
  for (int r = 1; r <= a.k; ++r) prefixes.emplace_back(r);
  for (std::size_t level = 0, begin = 0; level < max_tail; ++level) {
    const std::size_t end = prefixes.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int c = 1; c <= a.d; ++c) prefixes.push_back(prefixes[i].child(static_cast<Letter>(c)));
    begin = end;
  }
  std::vector<Point> out;
  for (std::size_t p = 0; p <= max_tail; ++p)
    for (const auto& nu : prefixes) out.push_back(x.substitute(nu, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace htg
