#include "htg/measure.hpp"

#include <algorithm>

#include "htg/error.hpp"

namespace htg {

namespace {

Integer power(int base, std::size_t exp) {
  Integer r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Rational cylinder_mass(const Alphabet& a, const Word& w) {
  return Rational(Integer(1), Integer(a.k) * power(a.d, w.tail_size()));
}

Rational mu(const Clopen& a) {
  Rational total = 0;
  for (const auto& w : a.prefixes()) total += cylinder_mass(a.alphabet(), w);
  return total;
}

CocycleExponent rn_exponent(const TableElement& g, const Point& x) {
  const Block& b = g.blocks()[g.block_of(x)];
  return {static_cast<int>(b.domain.length()) - static_cast<int>(b.range.length())};
}

bool cocycle_chain_check(const TableElement& g, const TableElement& h, const Point& x) {
  const int lhs = rn_exponent(compose(g, h), x).exponent;
  const int rhs = rn_exponent(g, act_point(h, x)).exponent + rn_exponent(h, x).exponent;
  return lhs == rhs;
}

std::vector<ProfileEntry> rn_profile(const TableElement& g) {
  std::vector<ProfileEntry> out;
  out.reserve(g.size());
  for (const auto& b : g.blocks())
    out.push_back({b.domain, {static_cast<int>(b.domain.length()) - static_cast<int>(b.range.length())}});
  return out;
}

Rational transported_mass(const TableElement& g) {
  const Alphabet& a = g.alphabet();
  Rational total = 0;
  for (const auto& e : rn_profile(g)) {
    const int j = e.exponent.exponent;
    const Integer scale = power(a.d, static_cast<std::size_t>(std::abs(j)));
    total += j >= 0 ? cylinder_mass(a, e.block) * scale : cylinder_mass(a, e.block) / scale;
  }
  return total;
}

QuadraticValue integral_sqrt_rn(const TableElement& g) {
  const Alphabet& a = g.alphabet();
  Rational rational_part = 0;
  Rational root_part = 0;  // coefficient of sqrt(d)
  for (const auto& e : rn_profile(g)) {
    const int j = e.exponent.exponent;
    // d^{j/2} = d^{floor(j/2)} * (sqrt d)^{j mod 2}
    const int half = j >= 0 ? j / 2 : -((-j + 1) / 2);
    const bool odd = (j - 2 * half) == 1;
    const Integer scale = power(a.d, static_cast<std::size_t>(std::abs(half)));
    Rational term = half >= 0 ? cylinder_mass(a, e.block) * scale : cylinder_mass(a, e.block) / scale;
    (odd ? root_part : rational_part) += term;
  }
  return QuadraticValue(rational_part, root_part, a.d);
}

Rational deficit(const Clopen& a, std::span<const TableElement> f) {
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "deficit needs a nonempty set of elements");
  Rational worst = 0;
  for (const auto& s : f) worst = std::max(worst, mu(symmetric_difference(a, act_clopen(s, a))));
  return worst;
}

std::set<int> cocycle_range(const TableElement& g) {
  std::set<int> out;
  for (const auto& e : rn_profile(g)) out.insert(e.exponent.exponent);
  return out;
}

}  // namespace htg
