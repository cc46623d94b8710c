#pragma once

// The ample groupoid G_{d,k} = {(nu w, |nu| - |mu|, mu w)} through its compact
// open bisections, and the isomorphism of its topological full group with
// V_{d,k}.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htg/cantor.hpp"
#include "htg/table.hpp"

namespace htg {

// The basic compact open set {(nu w, |nu| - |mu|, mu w) : w in X_d}.
struct DoubleCylinder {
  Word range;   // nu
  Word domain;  // mu

  int degree() const noexcept {
    return static_cast<int>(range.length()) - static_cast<int>(domain.length());
  }
  DoubleCylinder inverse() const { return {domain, range}; }

  friend bool operator==(const DoubleCylinder&, const DoubleCylinder&) = default;
};

struct GermMaps {
  Clopen source;
  Clopen range;
  int degree;
};
GermMaps germ_maps(const Alphabet& a, const DoubleCylinder& c);

// A finite disjoint union of double cylinders with pairwise disjoint domain
// cylinders and pairwise disjoint range cylinders. Canonical: sibling cells
// (nu i <- mu i)_{i=1..d} are merged and cells are sorted by domain.
class Bisection {
 public:
  // Throws OverlappingDomain / OverlappingRange / MismatchedAlphabet.
  Bisection(const Alphabet& a, std::vector<DoubleCylinder> cells);

  static Bisection identity_on(const Clopen& c);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const DoubleCylinder> cells() const noexcept { return cells_; }

  Clopen source() const;
  Clopen range() const;

  friend bool operator==(const Bisection& a, const Bisection& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.cells_ == b.cells_;
  }

 private:
  struct Trusted {};
  Bisection(Trusted, const Alphabet& a, std::vector<DoubleCylinder> cells);
  friend Bisection bisection_compose(const Bisection&, const Bisection&);
  friend Bisection bisection_inverse(const Bisection&);
  Alphabet alphabet_;
  std::vector<DoubleCylinder> cells_;
};

// UV = {uv : u in U, v in V, s(u) = r(v)}.
Bisection bisection_compose(const Bisection& u, const Bisection& v);
Bisection bisection_inverse(const Bisection& u);

bool is_full(const Bisection& u);

// Throws NotFull.
TableElement to_table(const Bisection& u);
Bisection from_table(const TableElement& g);

// U.x = r((s|_U)^{-1}(x)). Throws InvalidArgument when x is not in s(U).
Point bisection_act(const Bisection& u, const Point& x);

// `{nu<-mu,...}`.
Bisection parse_bisection(const Alphabet& a, std::string_view text);
std::string format_bisection(const Bisection& u);

}  // namespace htg
