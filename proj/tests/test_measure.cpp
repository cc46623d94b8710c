#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "htg/error.hpp"
#include "htg/fixtures.hpp"
#include "htg/measure.hpp"
#include "htg/random.hpp"
#include "oracles.hpp"

using namespace htg;
using Float = boost::multiprecision::cpp_bin_float_50;

namespace {

const Alphabet v21(2, 1), v22(2, 2), v31(3, 1), v32(3, 2);

TableElement T(const Alphabet& a, const char* s) { return parse_table(a, s); }
QuadraticValue Q(const char* s) { return parse_quadratic(s); }

const char* kS = "{11->1,12->21,2->22}";

Float to_float(const QuadraticValue& q) {
  return Float(q.a()) + Float(q.b()) * sqrt(Float(q.m()));
}

Rational word_mass(const Alphabet& a, std::size_t len) {
  Rational m(1, a.k);
  for (std::size_t i = 1; i < len; ++i) m /= a.d;
  return m;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(parse_rational("-3")) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a"), Error);
}

TEST_CASE("quadratic values") {
  const QuadraticValue r8(0, 1, 8);
  CHECK(r8.m() == 2);
  CHECK(r8.b() == 2);
  CHECK(QuadraticValue(1, 3, 9) == QuadraticValue(Rational(10)));
  CHECK(format_quadratic(Q("1/4 + 1/2*sqrt(2)")) == "1/4 + 1/2*sqrt(2)");
  CHECK(quad_compare(Q("1 + 1*sqrt(2)") * Q("1 + -1*sqrt(2)"), QuadraticValue(Rational(-1))) == Ordering::Equal);
  // equality is structural: the field is kept even when b = 0
  CHECK_FALSE(QuadraticValue(1, 0, 2) == QuadraticValue(Rational(1)));
  CHECK(sign(Q("3 + -2*sqrt(2)")) == 1);
  CHECK(sign(Q("-3 + 2*sqrt(2)")) == -1);
  CHECK(sign(Q("0 + 0*sqrt(5)")) == 0);
  CHECK_THROWS_AS(Q("1 + sqrt"), Error);
}

TEST_CASE("exact comparison examples") {
  CHECK(quad_compare(QuadraticValue(Rational(7, 2)), QuadraticValue(0, 2, 3)) == Ordering::Greater);
  CHECK(quad_compare(QuadraticValue(Rational(2)), QuadraticValue(0, 2, 3)) == Ordering::Less);
  CHECK(quad_compare(Q("1/4 + 1/2*sqrt(2)"), QuadraticValue(Rational(1))) == Ordering::Less);
  CHECK(quad_compare(QuadraticValue(0, 1, 8), QuadraticValue(0, 2, 2)) == Ordering::Equal);
  CHECK(quad_compare(QuadraticValue(0, 1, 12), QuadraticValue(0, 2, 3)) == Ordering::Equal);
  // 1 + sqrt(2) vs 2/3 + sqrt(3): needs a second squaring
  CHECK(quad_compare(Q("1 + 1*sqrt(2)"), Q("2/3 + 1*sqrt(3)")) == Ordering::Greater);
  CHECK(quad_compare(Q("1 + 1*sqrt(2)"), Q("3/4 + 1*sqrt(3)")) == Ordering::Less);
}

TEST_CASE("exact comparison agrees with 50-digit floating point") {
  random::Rng rng(17);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12), rad(1, 30);
  int decided = 0;
  for (int i = 0; i < 2000; ++i) {
    const QuadraticValue u(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), rad(rng));
    const QuadraticValue v(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), rad(rng));
    const Float diff = to_float(u) - to_float(v);
    if (abs(diff) < Float("1e-30")) continue;
    ++decided;
    CHECK(quad_compare(u, v) == (diff > 0 ? Ordering::Greater : Ordering::Less));
    CHECK(quad_compare(v, u) == (diff > 0 ? Ordering::Less : Ordering::Greater));
  }
  CHECK(decided > 1900);
}

TEST_CASE("cylinder masses") {
  CHECK(format_rational(mu(parse_clopen(v22, "{1:11}"))) == "1/8");
  CHECK(format_rational(mu(complement(parse_clopen(v22, "{1:11}")))) == "7/8");
  CHECK(mu(Clopen::whole(v32)) == 1);
  CHECK(mu(Clopen(v31)) == 0);
  CHECK(format_rational(mu(parse_clopen(v31, "{12,3}"))) == "4/9");
}

TEST_CASE("cocycle examples") {
  const auto s = T(v21, kS);
  CHECK(rn_exponent(s, parse_point(v21, "(1)^inf")).exponent == 1);
  CHECK(rn_exponent(s, parse_point(v21, "(2)^inf")).exponent == -1);
  CHECK(rn_exponent(TableElement(v21), parse_point(v21, "(12)^inf")).exponent == 0);
  CHECK(cocycle_chain_check(s, s, parse_point(v21, "2(1)^inf")));

  const auto profile = rn_profile(s);
  REQUIRE(profile.size() == 3);
  CHECK(format_word(v21, profile[0].block) == "11");
  CHECK(profile[0].exponent.exponent == 1);
  CHECK(format_word(v21, profile[1].block) == "12");
  CHECK(profile[1].exponent.exponent == 0);
  CHECK(format_word(v21, profile[2].block) == "2");
  CHECK(profile[2].exponent.exponent == -1);
  CHECK(transported_mass(s) == 1);
  CHECK(cocycle_range(s) == std::set<int>{-1, 0, 1});
  CHECK(cocycle_range(TableElement(v31)) == std::set<int>{0});
}

TEST_CASE("integral of sqrt omega") {
  CHECK(quad_compare(integral_sqrt_rn(TableElement(v21)), QuadraticValue(Rational(1))) == Ordering::Equal);
  CHECK(quad_compare(integral_sqrt_rn(T(v21, kS)), Q("1/4 + 1/2*sqrt(2)")) == Ordering::Equal);
  // the generator a of the frozen free pair: blocks of mass 1/8, 1/16, 1/32,
  // 1/32, 1/4, 1/2 with exponents -1, 1, 3, 4, -3, -4
  const auto fx = fixture_free2();
  CHECK(quad_compare(integral_sqrt_rn(fx.certificate.a), Q("1/4 + 1/4*sqrt(2)")) == Ordering::Equal);
  CHECK(quad_compare(integral_sqrt_rn(fx.certificate.b), Q("1/4 + 1/4*sqrt(2)")) == Ordering::Equal);
  // d = 3: sqrt(3) field
  const auto g = T(v31, "{11->1,12->21,13->22,2->23,3->3}");
  const auto v = integral_sqrt_rn(g);
  CHECK(v.m() == 3);
  CHECK(quad_compare(v, QuadraticValue(Rational(1))) == Ordering::Less);
}

TEST_CASE("cocycle matches the mass-ratio oracle") {
  random::Rng rng(23);
  for (int i = 0; i < 400; ++i) {
    const Alphabet& a = i % 2 ? v22 : v31;
    const auto g = random::table(rng, a);
    const auto x = random::point(rng, a);
    const std::size_t depth = g.max_depth() + 3;
    const auto c = oracle::unroll(x, depth - 1);
    const auto image = oracle::act(g, c);
    REQUIRE(image);
    const Rational ratio = word_mass(a, image->size()) / word_mass(a, c.size());
    const int j = rn_exponent(g, x).exponent;
    Rational expected = 1;
    for (int t = 0; t < std::abs(j); ++t) expected *= a.d;
    if (j < 0) expected = 1 / expected;
    CHECK(ratio == expected);
  }
}

TEST_CASE("integral matches a 50-digit block sum") {
  random::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const Alphabet& a = i % 2 ? v21 : v32;
    const auto g = random::table(rng, a);
    Float sum = 0;
    for (const auto& b : g.blocks()) {
      const int j = static_cast<int>(b.domain.length()) - static_cast<int>(b.range.length());
      sum += Float(word_mass(a, b.domain.length())) * pow(Float(a.d), Float(j) / 2);
    }
    CHECK(abs(to_float(integral_sqrt_rn(g)) - sum) < Float("1e-40"));
  }
}

TEST_CASE("deficit") {
  const auto sigma = T(v21, "{1->2,2->1}");
  const TableElement swap[] = {sigma};
  CHECK(deficit(parse_clopen(v21, "{1}"), swap) == 1);
  CHECK(deficit(Clopen::whole(v21), swap) == 0);
  // elements supported in nu fix {nu} setwise
  const Alphabet v22b(2, 2);
  const Word nu = parse_word(v22, "1:1");
  const TableElement inside[] = {embed_supported(T(v22b, "{1:->2:,2:->1:}"), v22, nu),
                                 embed_supported(fixture_free2().certificate.a, v22, nu)};
  CHECK(deficit(Clopen::cylinder(v22, nu), inside) == 0);
  CHECK(deficit(complement(Clopen::cylinder(v22, nu)), inside) == 0);
  CHECK(deficit(parse_clopen(v22, "{1:11}"), inside) > 0);
  CHECK_THROWS_AS(deficit(Clopen::whole(v21), std::span<const TableElement>{}), Error);
}
