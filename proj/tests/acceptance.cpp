// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "htg/certificate.hpp"
#include "htg/error.hpp"
#include "htg/fixtures.hpp"
#include "htg/groupoid.hpp"
#include "htg/measure.hpp"
#include "htg/random.hpp"
#include "htg/tail.hpp"
#include "oracles.hpp"

using namespace htg;
using Clock = std::chrono::steady_clock;

namespace {

struct Failures {
  std::ostringstream log;
  int count = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (count++ < 3) log << " [" << what << "]";
  }
};

const Alphabet kMix[] = {Alphabet(2, 1), Alphabet(2, 2), Alphabet(3, 1), Alphabet(3, 2), Alphabet(4, 3)};

const Alphabet& pick(random::Rng& rng) {
  return kMix[std::uniform_int_distribution<std::size_t>(0, std::size(kMix) - 1)(rng)];
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. the inequality at n = 3 and the inconclusive path at n = 1
void criterion_inequality(Failures& f) {
  const auto t0 = Clock::now();
  const Alphabet a(2, 2);
  const auto fx = fixture_free2();
  const auto r = check_certificate(a, fx.set, fx.certificate, parse_word(a, "1:11"));
  f.expect(r.n == 3 && r.f_size == 4, "n = 3, |F| = 4");
  f.expect(r.off_support_bound == Rational(7, 2), "off-support bound 7/2");
  f.expect(r.norm.value == QuadraticValue(0, 2, 3) && r.norm.rank == 2, "norm 2 sqrt 3");
  // squaring by hand: (7/2)^2 = 49/4 > 12 = (2 sqrt 3)^2
  f.expect(Rational(7, 2) * Rational(7, 2) == Rational(49, 4) && Rational(49, 4) > 12, "49/4 > 12");
  f.expect(r.bound_vs_norm == Ordering::Greater, "bound > norm");
  f.expect(quad_compare(r.lhs, QuadraticValue(Rational(7, 2))) != Ordering::Less, "lhs >= 7/2");
  f.expect(r.verdict == Verdict::Pass, "PASS at n = 3");
  const auto weak = check_certificate(a, fx.set, fx.certificate, Word(1));
  f.expect(weak.off_support_bound == 2 && weak.bound_vs_norm == Ordering::Less, "2 < 2 sqrt 3 at n = 1");
  f.expect(weak.verdict == Verdict::Inconclusive, "INCONCLUSIVE at n = 1");
  f.expect(seconds_since(t0) < 1.0, "runtime < 1 s");
}

// 2. closed-walk counts against the tree oracle; length 12 timing
void criterion_convolution(Failures& f) {
  const auto elems = fixture_free2().set.elements;
  const Integer expected[] = {4, 28, 232, 2092};
  for (int i = 0; i < 4; ++i) {
    const int len = 2 * (i + 1);
    const Integer c = convolution_count(elems, len);
    f.expect(c == expected[i] && c == oracle::tree_closed_walks(len), "count at length " + std::to_string(len));
  }
  const auto t0 = Clock::now();
  const Integer c12 = convolution_count(elems, 12, 4);
  f.expect(seconds_since(t0) < 60.0, "length 12 under 60 s");
  f.expect(c12 == oracle::tree_closed_walks(12), "count at length 12");
  for (int len = 2; len <= 12; len += 2) {
    const Integer c = convolution_count(elems, len);
    // count <= 12^{len/2} = (2 sqrt 3)^len, in integers and through the library
    Integer bound = 1;
    for (int i = 0; i < len / 2; ++i) bound *= 12;
    f.expect(c <= bound, "count <= 12^(len/2) at " + std::to_string(len));
    f.expect(closed_walk_bound_holds(c, len, free_norm(2).value), "bound check at " + std::to_string(len));
  }
}

// 3. cocycle identities
void criterion_cocycle(Failures& f) {
  random::Rng rng(1003);
  for (int i = 0; i < 1000; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a), h = random::table(rng, a);
    const auto x = random::point(rng, a);
    const int lhs = rn_exponent(compose(g, h), x).exponent;
    const int rhs = rn_exponent(g, act_point(h, x)).exponent + rn_exponent(h, x).exponent;
    f.expect(lhs == rhs && cocycle_chain_check(g, h, x), "chain rule");
  }
  for (int i = 0; i < 500; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a);
    // mass identity summed from the raw blocks
    Rational total = 0;
    for (const auto& b : g.blocks()) {
      Rational w = cylinder_mass(a, b.domain);
      const int j = static_cast<int>(b.domain.length()) - static_cast<int>(b.range.length());
      for (int t = 0; t < std::abs(j); ++t) {
        if (j > 0) w *= a.d;
        else w /= a.d;
      }
      total += w;
    }
    f.expect(total == 1 && transported_mass(g) == 1, "transported mass");
    const auto cmp = quad_compare(integral_sqrt_rn(g), QuadraticValue(Rational(1)));
    const bool flat = cocycle_range(g) == std::set<int>{0};
    f.expect(cmp != Ordering::Greater, "integral <= 1");
    f.expect((cmp == Ordering::Equal) == flat, "equality iff flat cocycle");
  }
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const Alphabet src(d, d), target(d, 1 + static_cast<int>(rng() % 3));
    const auto g = random::table(rng, src);
    const Word nu = random::word(rng, target, 3);
    const auto h = embed_supported(g, target, nu);
    // off the cylinder of nu: sample points outside, exponent must vanish
    const Clopen outside = complement(Clopen::cylinder(target, nu));
    for (const auto& w : outside.prefixes()) {
      const Point x(target, w, random::letters(rng, target, 1, 3));
      f.expect(rn_exponent(h, x).exponent == 0, "off-support exponent");
    }
    for (const auto& e : rn_profile(h))
      if (!nu.is_prefix_of(e.block)) f.expect(e.exponent.exponent == 0, "off-support profile");
  }
}

// 4. full bisections versus tables
void criterion_isomorphism(Failures& f) {
  random::Rng rng(1004);
  for (int i = 0; i < 500; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a), h = random::table(rng, a);
    f.expect(to_table(from_table(g)) == g, "roundtrip");
    f.expect(from_table(to_table(from_table(g))) == from_table(g), "roundtrip on bisections");
    f.expect(to_table(bisection_compose(from_table(g), from_table(h))) == compose(g, h), "homomorphism");
  }
  for (int i = 0; i < 1000; ++i) {
    const auto& a = pick(rng);
    const auto u = from_table(random::table(rng, a));
    const auto x = random::point(rng, a);
    f.expect(bisection_act(u, x) == act_point(to_table(u), x), "action compatibility");
  }
}

// 5. group arithmetic
void criterion_group(Failures& f) {
  random::Rng rng(1005);
  for (int i = 0; i < 500; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a), h = random::table(rng, a), k = random::table(rng, a);
    f.expect(compose(compose(g, h), k) == compose(g, compose(h, k)), "associativity");
    f.expect(is_identity(compose(g, inverse(g))) && is_identity(compose(inverse(g), g)), "inverse");
    f.expect(static_cast<int>(g.size()) % (a.d - 1) == a.k % (a.d - 1), "block count mod d - 1");
    // confluence: random refinements in random order reduce to the same form
    std::vector<Block> blocks(g.blocks().begin(), g.blocks().end());
    for (int r = 0; r < 5; ++r)
      blocks = refine_block(a, blocks, std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng));
    std::shuffle(blocks.begin(), blocks.end(), rng);
    f.expect(make_table(a, blocks) == g, "reduce confluence");
    f.expect(make_table(a, reduce(a, blocks)) == g, "reduce idempotent");
  }
  const Alphabet v21(2, 1);
  for (int i = 0; i < 300; ++i) {
    const auto g = random::table(rng, v21, 3);
    const auto h = i % 2 ? random::table(rng, v21, 3) : compose(g, random::table(rng, v21, 1));
    const std::size_t depth = std::max(g.max_depth(), h.max_depth()) + 1;
    f.expect((g == h) == oracle::agree_to_depth(g, h, depth), "canonical equality vs action");
  }
}

// 6. measure, transporters, deficit fixtures
void criterion_measure(Failures& f) {
  random::Rng rng(1006);
  for (const auto& a : kMix) f.expect(mu(Clopen::whole(a)) == 1, "mu(whole) = 1");
  for (int i = 0; i < 500; ++i) {
    const auto& a = pick(rng);
    const auto p = random::clopen(rng, a), q = random::clopen(rng, a);
    f.expect(mu(unite(p, q)) + mu(intersect(p, q)) == mu(p) + mu(q), "additivity");
    f.expect(mu(difference(p, q)) + mu(intersect(p, q)) == mu(p), "disjoint additivity");
  }
  int done = 0;
  while (done < 200) {
    const auto& a = pick(rng);
    const Word w1 = random::word(rng, a, 3), w2 = random::word(rng, a, 3);
    if (a.k == 1 && (w1.length() == 1) != (w2.length() == 1)) continue;
    const auto t = transporter(a, w1, w2);
    f.expect(act_clopen(t, Clopen::cylinder(a, w1)) == Clopen::cylinder(a, w2), "transporter");
    ++done;
  }
  const Alphabet v21(2, 1), v22(2, 2);
  const TableElement swap[] = {parse_table(v21, "{1->2,2->1}")};
  f.expect(deficit(parse_clopen(v21, "{1}"), swap) == 1, "swap vs half");
  const Word nu = parse_word(v22, "2:1");
  const auto fx = fixture_free2();
  std::vector<TableElement> inside;
  for (const auto& s : fx.set.elements) inside.push_back(embed_supported(s, v22, nu));
  f.expect(deficit(Clopen::cylinder(v22, nu), inside) == 0, "invariant cylinder");
  f.expect(deficit(complement(Clopen::cylinder(v22, nu)), inside) == 0, "invariant complement");
}

// 7. tail equivalence
void criterion_tail(Failures& f) {
  random::Rng rng(1007);
  for (int i = 0; i < 300; ++i) {
    const auto& a = pick(rng);
    const auto x = random::point(rng, a, 4, 3);
    const auto y = i % 2 ? random::point(rng, a, 4, 3) : Point(a, random::word(rng, a, 4), x.period());
    const auto expected = oracle::brute_related(x, y, 4 + 3 + 3, 80);
    const auto got = related(x, y);
    const bool same = got.has_value() == expected.has_value() &&
                      (!got || (got->p == expected->first && got->q == expected->second));
    f.expect(same, "related vs brute force: " + format_point(x) + " " + format_point(y));
  }
  for (int i = 0; i < 200; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a);
    const auto x = random::point(rng, a);
    f.expect(related(act_point(g, x), x).has_value(), "g.x ~ x");
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Failures&)>> criteria[] = {
      {"1 inequality reproduction", criterion_inequality},
      {"2 free-group convolution oracle", criterion_convolution},
      {"3 cocycle suite", criterion_cocycle},
      {"4 isomorphism suite", criterion_isomorphism},
      {"5 group-arithmetic suite", criterion_group},
      {"6 measure and ergodicity mechanics", criterion_measure},
      {"7 tail-equivalence suite", criterion_tail},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Failures f;
    const auto t0 = Clock::now();
    try {
      run(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (f.count ? "FAIL" : "PASS") << "  criterion " << name;
    std::cout << "  (" << static_cast<int>(seconds_since(t0) * 1000) << " ms)";
    if (f.count) std::cout << "  " << f.count << " failure(s):" << f.log.str();
    std::cout << "\n";
    failed += f.count != 0;
  }
  return failed ? 1 : 0;
}
