#include <functional>
#include <sstream>

#include "htg/certificate.hpp"
#include "htg/cli.hpp"
#include "htg/fixtures.hpp"
#include "htg/groupoid.hpp"
#include "htg/measure.hpp"
#include "htg/random.hpp"
#include "htg/table.hpp"
#include "htg/tail.hpp"

namespace htg::cli {

namespace {

using random::Rng;

const Alphabet kAlphabets[] = {Alphabet(2, 1), Alphabet(2, 2), Alphabet(3, 1), Alphabet(3, 2),
                               Alphabet(4, 3)};

const Alphabet& pick(Rng& rng) {
  return kAlphabets[std::uniform_int_distribution<std::size_t>(0, std::size(kAlphabets) - 1)(rng)];
}

// Each check returns an empty string on success, else a counterexample.
using Check = std::function<std::string(Rng&)>;

std::string group_laws(Rng& rng) {
  for (int i = 0; i < 300; ++i) {
    const auto& a = pick(rng);
    const auto f = random::table(rng, a), g = random::table(rng, a), h = random::table(rng, a);
    if (compose(compose(f, g), h) != compose(f, compose(g, h)))
      return "associativity fails for " + format_table(f) + " " + format_table(g) + " " + format_table(h);
    if (!is_identity(compose(f, inverse(f))) || !is_identity(compose(inverse(f), f)))
      return "inverse fails for " + format_table(f);
    if (static_cast<int>(f.size() % (a.d - 1)) != a.k % (a.d - 1))
      return "block count invariant fails for " + format_table(f);
    if (parse_table(a, format_table(f)) != f) return "format/parse roundtrip fails for " + format_table(f);
  }
  return {};
}

std::string reduce_confluence(Rng& rng) {
  for (int i = 0; i < 300; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a);
    std::vector<Block> blocks(g.blocks().begin(), g.blocks().end());
    for (int r = 0; r < 4; ++r) {
      const auto at = std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng);
      blocks = refine_block(a, blocks, at);
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    if (make_table(a, blocks) != g) return "refined table does not reduce back: " + format_table(g);
  }
  return {};
}

std::string cocycle(Rng& rng) {
  for (int i = 0; i < 500; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a), h = random::table(rng, a);
    const auto x = random::point(rng, a);
    if (!cocycle_chain_check(g, h, x)) return "chain rule fails for " + format_table(g) + " " + format_table(h);
    if (transported_mass(g) != 1) return "transported mass differs from 1 for " + format_table(g);
    const auto integral = integral_sqrt_rn(g);
    const auto cmp = quad_compare(integral, QuadraticValue(Rational(1)));
    const bool flat = cocycle_range(g) == std::set<int>{0};
    if (cmp == Ordering::Greater || (cmp == Ordering::Equal) != flat)
      return "integral of sqrt(omega) misbehaves for " + format_table(g);
  }
  return {};
}

std::string groupoid(Rng& rng) {
  for (int i = 0; i < 300; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a), h = random::table(rng, a);
    const auto u = from_table(g), v = from_table(h);
    if (to_table(u) != g) return "roundtrip fails for " + format_table(g);
    if (to_table(bisection_compose(u, v)) != compose(g, h))
      return "homomorphism fails for " + format_table(g) + " " + format_table(h);
    const auto x = random::point(rng, a);
    if (bisection_act(u, x) != act_point(g, x)) return "action mismatch for " + format_table(g);
  }
  return {};
}

std::string measure(Rng& rng) {
  for (int i = 0; i < 300; ++i) {
    const auto& a = pick(rng);
    const auto p = random::clopen(rng, a), q = random::clopen(rng, a);
    if (mu(unite(p, q)) + mu(intersect(p, q)) != mu(p) + mu(q))
      return "additivity fails for " + format_clopen(p) + " " + format_clopen(q);
    if (mu(complement(p)) != 1 - mu(p)) return "complement mass fails for " + format_clopen(p);
    const auto w1 = random::word(rng, a, 3), w2 = random::word(rng, a, 3);
    try {
      const auto t = transporter(a, w1, w2);
      if (act_clopen(t, Clopen::cylinder(a, w1)) != Clopen::cylinder(a, w2))
        return "transporter fails for " + format_word(a, w1) + " " + format_word(a, w2);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotTransportable) throw;
    }
    const auto g = random::table(rng, a);
    const TableElement f[] = {g};
    if (deficit(p, f) != deficit(complement(p), f)) return "deficit not complement invariant";
  }
  if (mu(Clopen::whole(kAlphabets[3])) != 1) return "mu(whole) != 1";
  return {};
}

std::string tail(Rng& rng) {
  for (int i = 0; i < 300; ++i) {
    const auto& a = pick(rng);
    const auto g = random::table(rng, a);
    const auto x = random::point(rng, a);
    const auto y = act_point(g, x);
    const auto w = related(y, x);
    if (!w) return "g.x not related to x for " + format_table(g) + " " + format_point(x);
    const auto cell = witness_cell(y, x, *w);
    if (bisection_act(Bisection(a, {cell}), y) != x) return "witness cell does not map y to x";
  }
  return {};
}

std::string certificate(Rng&) {
  const auto fx = fixture_free2();
  if (!pingpong_verify(fx.certificate)) return "ping-pong certificate rejected";
  const Alphabet a(2, 2);
  if (check_certificate(a, fx.set, fx.certificate, parse_word(a, "1:11")).verdict != Verdict::Pass)
    return "n = 3 does not pass";
  if (check_certificate(a, fx.set, fx.certificate, parse_word(a, "1:")).verdict != Verdict::Inconclusive)
    return "n = 1 is not inconclusive";
  const Integer expected[] = {4, 28, 232, 2092};
  for (int i = 0; i < 4; ++i)
    if (convolution_count(fx.set.elements, 2 * (i + 1)) != expected[i])
      return "convolution count wrong at length " + std::to_string(2 * (i + 1));
  return {};
}

}  // namespace

bool selftest(std::ostream& out, std::uint64_t seed) {
  const std::pair<const char*, Check> checks[] = {
      {"group laws", group_laws},   {"reduce confluence", reduce_confluence},
      {"cocycle", cocycle},         {"groupoid isomorphism", groupoid},
      {"measure", measure},         {"tail equivalence", tail},
      {"certificate", certificate},
  };
  bool all = true;
  Rng rng(seed);
  for (const auto& [name, check] : checks) {
    std::string failure;
    try {
      failure = check(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    all = all && failure.empty();
    out << (failure.empty() ? "ok   " : "FAIL ") << name;
    if (!failure.empty()) out << ": " << failure;
    out << "\n";
  }
  out << (all ? "selftest passed" : "selftest FAILED") << " (seed " << seed << ")\n";
  return all;
}

}  // namespace htg::cli
