#pragma once

// The Bernoulli measure mu_{d,k} = (uniform on [k]) x (uniform on [d])^N,
// Radon-Nikodym cocycles of the V_{d,k}-action, and the strong-ergodicity
// deficit functional. Everything here is exact.
//
// Cocycle convention: omega(g, x) = d(g^{-1}_* mu)/d mu (x) = d^j with
// j = |mu_i| - |nu_i| for the block mu_i -> nu_i containing x. With
// (g.h)(x) = g(h(x)) this satisfies the chain rule
//   j(g.h, x) = j(g, h x) + j(h, x).

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "htg/cantor.hpp"
#include "htg/quadratic.hpp"
#include "htg/table.hpp"

namespace htg {

// omega = d^exponent.
struct CocycleExponent {
  int exponent = 0;
  friend bool operator==(const CocycleExponent&, const CocycleExponent&) = default;
};

// mu of a single cylinder: 1 / (k d^{|w|-1}).
Rational cylinder_mass(const Alphabet& a, const Word& w);
Rational mu(const Clopen& a);

CocycleExponent rn_exponent(const TableElement& g, const Point& x);

bool cocycle_chain_check(const TableElement& g, const TableElement& h, const Point& x);

struct ProfileEntry {
  Word block;
  CocycleExponent exponent;
};
std::vector<ProfileEntry> rn_profile(const TableElement& g);

// Sum over blocks of mu(block) d^{j}: the total mass of the transported
// measure, always 1.
Rational transported_mass(const TableElement& g);

// Integral of sqrt(omega(g, .)) d mu, exactly, in Q(sqrt d).
QuadraticValue integral_sqrt_rn(const TableElement& g);

// max over s in F of mu(A symmetric-difference sA).
Rational deficit(const Clopen& a, std::span<const TableElement> f);

std::set<int> cocycle_range(const TableElement& g);

}  // namespace htg
