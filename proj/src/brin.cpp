#include "htg/brin.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "htg/error.hpp"
#include "htg/quadratic.hpp"

namespace htg {

namespace {

bool is_prefix(std::string_view p, std::string_view w) {
  return w.size() >= p.size() && w.substr(0, p.size()) == p;
}

bool boxes_disjoint(const Box& a, const Box& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!is_prefix(a[c], b[c]) && !is_prefix(b[c], a[c])) return true;
  return false;
}

std::string box_string(const Box& b) {
  std::string s = "(";
  for (std::size_t c = 0; c < b.size(); ++c) {
    if (c) s += ",";
    for (char l : b[c]) s.push_back(static_cast<char>('0' + l));
  }
  return s + ")";
}

void check_partition(int m, const std::vector<const Box*>& boxes, bool domain_side) {
  const char* side = domain_side ? "domain" : "range";
  for (const Box* b : boxes) {
    if (b->size() != static_cast<std::size_t>(m))
      throw Error(ErrorKind::InvalidArgument, std::string(side) + " box " + box_string(*b) +
                                                  " does not have " + std::to_string(m) + " coordinates");
    for (const auto& w : *b)
      for (char l : w)
        if (l != 1 && l != 2)
          throw Error(ErrorKind::InvalidArgument, std::string(side) + " box letters must be 1 or 2");
  }
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      if (!boxes_disjoint(*boxes[i], *boxes[j]))
        throw Error(ErrorKind::OverlappingBoxes, std::string(side) + " boxes " + box_string(*boxes[i]) +
                                                     " and " + box_string(*boxes[j]) + " overlap");
  // Disjoint boxes cover the product space iff their volumes sum to 1.
  Rational volume = 0;
  for (const Box* b : boxes) {
    std::size_t depth = 0;
    for (const auto& w : *b) depth += w.size();
    volume += Rational(Integer(1), Integer(1) << depth);
  }
  if (volume != 1)
    throw Error(ErrorKind::IncompleteBoxes, std::string(side) + " boxes cover volume " +
                                                format_rational(volume) + " of the product space");
}

}  // namespace

std::vector<BoxPair> mv_reduce(int m, std::vector<BoxPair> pairs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < m; ++c) {
      // key: both boxes with coordinate c cut back to its parent.
      std::map<std::pair<Box, Box>, std::pair<int, int>> families;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const auto& dw = p.domain[c];
        const auto& rw = p.range[c];
        if (dw.empty() || rw.empty() || dw.back() != rw.back()) continue;
        Box dk = p.domain, rk = p.range;
        dk[c].pop_back();
        rk[c].pop_back();
        auto& slot = families.try_emplace({std::move(dk), std::move(rk)}, -1, -1).first->second;
        (dw.back() == 1 ? slot.first : slot.second) = static_cast<int>(i);
      }
      std::vector<char> drop(pairs.size(), 0);
      std::vector<BoxPair> merged;
      for (auto& [key, slot] : families) {
        if (slot.first < 0 || slot.second < 0) continue;
        drop[slot.first] = drop[slot.second] = 1;
        merged.push_back({key.first, key.second});
      }
      if (merged.empty()) continue;
      changed = true;
      std::vector<BoxPair> next;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!drop[i]) next.push_back(std::move(pairs[i]));
      for (auto& p : merged) next.push_back(std::move(p));
      pairs = std::move(next);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

BoxTable::BoxTable(int m) : m_(m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "factor count m must be >= 1");
  pairs_.push_back({Box(m), Box(m)});
}

BoxTable BoxTable::from_valid_pairs(int m, std::vector<BoxPair> pairs) {
  BoxTable t(m);
  t.pairs_ = mv_reduce(m, std::move(pairs));
  return t;
}

BoxTable mv_make(int m, std::vector<BoxPair> pairs) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "factor count m must be >= 1");
  if (pairs.empty()) throw Error(ErrorKind::IncompleteBoxes, "empty box table");
  std::vector<const Box*> dom, ran;
  for (const auto& p : pairs) {
    dom.push_back(&p.domain);
    ran.push_back(&p.range);
  }
  check_partition(m, dom, true);
  check_partition(m, ran, false);
  return BoxTable::from_valid_pairs(m, std::move(pairs));
}

BoxTable mv_compose(const BoxTable& g, const BoxTable& h) {
  if (g.m() != h.m()) throw Error(ErrorKind::MismatchedAlphabet, "box tables over different m");
  const int m = g.m();
  std::vector<BoxPair> out;
  for (const auto& hp : h.pairs()) {
    for (const auto& gp : g.pairs()) {
      BoxPair r{hp.domain, gp.range};
      bool meets = true;
      for (int c = 0; c < m && meets; ++c) {
        const auto& mid = hp.range[c];
        const auto& gd = gp.domain[c];
        if (is_prefix(gd, mid)) {
          r.range[c] += mid.substr(gd.size());
        } else if (is_prefix(mid, gd)) {
          r.domain[c] += gd.substr(mid.size());
        } else {
          meets = false;
        }
      }
      if (meets) out.push_back(std::move(r));
    }
  }
  return BoxTable::from_valid_pairs(m, std::move(out));
}

BoxTable mv_inverse(const BoxTable& g) {
  std::vector<BoxPair> out;
  for (const auto& p : g.pairs()) out.push_back({p.range, p.domain});
  return BoxTable::from_valid_pairs(g.m(), std::move(out));
}

bool mv_is_identity(const BoxTable& g) noexcept {
  return std::all_of(g.pairs().begin(), g.pairs().end(),
                     [](const BoxPair& p) { return p.domain == p.range; });
}

bool mv_equals(const BoxTable& g, const BoxTable& h) {
  return mv_is_identity(mv_compose(g, mv_inverse(h)));
}

std::vector<Point> mv_act(const BoxTable& g, std::span<const Point> xs) {
  const Alphabet binary(2, 1);
  if (xs.size() != static_cast<std::size_t>(g.m()))
    throw Error(ErrorKind::InvalidArgument, "mv_act needs one point per coordinate");
  for (const auto& x : xs) require_same(x.alphabet(), binary, "mv_act");
  for (const auto& p : g.pairs()) {
    bool inside = true;
    for (std::size_t c = 0; c < xs.size() && inside; ++c)
      for (std::size_t i = 0; i < p.domain[c].size() && inside; ++i)
        inside = xs[c].tail_at(i) == static_cast<Letter>(p.domain[c][i]);
    if (!inside) continue;
    std::vector<Point> out;
    for (std::size_t c = 0; c < xs.size(); ++c)
      out.push_back(xs[c].substitute(Word(1, p.range[c]), p.domain[c].size()));
    return out;
  }
  throw Error(ErrorKind::IncompleteBoxes, "no domain box contains the point");
}

BoxTable mv_embed(const TableElement& g, int m, int coord) {
  require_same(g.alphabet(), Alphabet(2, 1), "mv_embed");
  if (coord < 0 || coord >= m) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  std::vector<BoxPair> out;
  for (const auto& b : g.blocks()) {
    BoxPair p{Box(m), Box(m)};
    p.domain[coord] = Letters(b.domain.tail());
    p.range[coord] = Letters(b.range.tail());
    out.push_back(std::move(p));
  }
  return BoxTable::from_valid_pairs(m, std::move(out));
}

}  // namespace htg
