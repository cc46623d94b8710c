#pragma once

// Tail equivalence with lag on eventually periodic points: x ~ y iff
// x_{p+i} = y_{q+i} for all i >= 1 for some p, q.
//
// Positions p, q count tail letters (the root letter is position 0 and is
// never compared), so x = 1^inf and y = 2 1^inf have witness (0, 1).

#include <cstddef>
#include <optional>
#include <vector>

#include "htg/cantor.hpp"
#include "htg/groupoid.hpp"

namespace htg {

struct TailWitness {
  std::size_t p = 0;
  std::size_t q = 0;
  friend bool operator==(const TailWitness&, const TailWitness&) = default;
  friend auto operator<=>(const TailWitness&, const TailWitness&) = default;
};

// The lexicographically least witness, or nullopt when unrelated.
std::optional<TailWitness> related(const Point& x, const Point& y);

// A germ (nu <- mu) mapping x to y: mu is x's prefix with p + 1 tail
// letters, nu is y's prefix with q + 1 tail letters. Throws NotRelated when
// the witness does not relate x and y.
DoubleCylinder witness_cell(const Point& x, const Point& y, const TailWitness& w);

// Lag-free approximation R_n: x_i = y_i for every tail position i > n.
bool finite_level_related(const Point& x, const Point& y, std::size_t n);

// { nu . sigma^{p}(x) : p <= L, nu with at most L tail letters }, sorted and
// deduplicated.
std::vector<Point> orbit_fragment(const Point& x, std::size_t max_tail);

}  // namespace htg
