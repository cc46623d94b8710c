#pragma once

// Brin-Thompson group mV as the topological full group of the product
// groupoid G_2^m: bijections between two partitions of ({1,2}^N)^m into
// boxes (products of cylinders), acting by coordinatewise prefix
// substitution.

#include <span>
#include <vector>

#include "htg/cantor.hpp"
#include "htg/table.hpp"

namespace htg {

// One binary word per coordinate; letters are 1 and 2, the empty word is
// the whole factor.
using Box = std::vector<Letters>;

struct BoxPair {
  Box domain;
  Box range;
  friend bool operator==(const BoxPair&, const BoxPair&) = default;
  friend auto operator<=>(const BoxPair&, const BoxPair&) = default;
};

// Reduced greedily, one coordinate at a time in increasing coordinate
// order, to a fixpoint; pairs sorted by domain box. Equality of elements is
// decided semantically (see mv_equals), not by comparing representatives.
class BoxTable {
 public:
  explicit BoxTable(int m);  // identity

  int m() const noexcept { return m_; }
  std::span<const BoxPair> pairs() const noexcept { return pairs_; }

  // Caller guarantees both sides partition the product space.
  static BoxTable from_valid_pairs(int m, std::vector<BoxPair> pairs);

  friend bool operator==(const BoxTable&, const BoxTable&) = default;

 private:
  int m_;
  std::vector<BoxPair> pairs_;
};

// Throws InvalidArgument on malformed boxes, OverlappingBoxes or
// IncompleteBoxes naming the offending side and boxes.
BoxTable mv_make(int m, std::vector<BoxPair> pairs);

// Greedy single-coordinate merging until no merge applies.
std::vector<BoxPair> mv_reduce(int m, std::vector<BoxPair> pairs);

BoxTable mv_compose(const BoxTable& g, const BoxTable& h);  // g after h
BoxTable mv_inverse(const BoxTable& g);
bool mv_is_identity(const BoxTable& g) noexcept;
bool mv_equals(const BoxTable& g, const BoxTable& h);

// Points are over the alphabet (d = 2, k = 1); one per coordinate.
std::vector<Point> mv_act(const BoxTable& g, std::span<const Point> xs);

// Copies an element of V = V_{2,1} onto coordinate `coord`.
BoxTable mv_embed(const TableElement& g, int m, int coord);

}  // namespace htg
