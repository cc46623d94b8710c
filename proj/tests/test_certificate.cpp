#include <doctest.h>

#include <set>

#include "htg/certificate.hpp"
#include "htg/error.hpp"
#include "htg/fixtures.hpp"
#include "htg/measure.hpp"
#include "oracles.hpp"

using namespace htg;

namespace {

const Alphabet v22(2, 2);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("frozen ping-pong pair") {
  const auto fx = fixture_free2();
  CHECK(fx.alphabet == v22);
  CHECK(fx.set.elements.size() == 4);
  CHECK(pingpong_verify(fx.certificate));
  CHECK_NOTHROW(require_pingpong(fx.certificate));
  CHECK(find_fixture("free2").has_value());
  CHECK_FALSE(find_fixture("nope").has_value());
}

TEST_CASE("broken certificates") {
  auto cert = fixture_free2().certificate;
  cert.b_plus = cert.a_plus;
  CHECK(kind_of([&] { require_pingpong(cert); }) == ErrorKind::DisjointnessViolation);
  cert = fixture_free2().certificate;
  std::swap(cert.a_plus, cert.a_minus);
  CHECK(kind_of([&] { require_pingpong(cert); }) == ErrorKind::InclusionViolation);
  cert = fixture_free2().certificate;
  cert.b = cert.a;
  CHECK_FALSE(pingpong_verify(cert));
}

TEST_CASE("symmetric sets") {
  const TableElement id[] = {TableElement(v22)};
  CHECK(kind_of([&] { make_symmetric_set(id); }) == ErrorKind::NotSymmetric);
  const auto a = fixture_free2().certificate.a;
  CHECK(kind_of([&] { require_symmetric(SymmetricSet{{a}, true}); }) == ErrorKind::NotSymmetric);
  CHECK(kind_of([&] { require_symmetric(SymmetricSet{{}, true}); }) == ErrorKind::NotSymmetric);
  const TableElement gens[] = {a, inverse(a)};
  CHECK(make_symmetric_set(gens).elements.size() == 2);
}

TEST_CASE("no short relation among reduced words") {
  // all 4 * 3^(n-1) reduced words of length n <= 6 in a, b are non-trivial
  const auto fx = fixture_free2();
  const TableElement letters[] = {fx.certificate.a, inverse(fx.certificate.a), fx.certificate.b,
                                  inverse(fx.certificate.b)};
  struct Node {
    TableElement g;
    int last;
  };
  std::vector<Node> layer{{TableElement(v22), -1}};
  std::size_t checked = 0;
  bool any_identity = false;
  for (int len = 1; len <= 6; ++len) {
    std::vector<Node> next;
    for (const auto& n : layer)
      for (int s = 0; s < 4; ++s) {
        if (n.last >= 0 && (s ^ 1) == n.last) continue;
        next.push_back({compose(n.g, letters[s]), s});
        any_identity = any_identity || is_identity(next.back().g);
        ++checked;
      }
    layer = std::move(next);
  }
  CHECK(checked == 4 + 12 + 36 + 108 + 324 + 972);
  CHECK_FALSE(any_identity);
}

TEST_CASE("tree closed-walk oracle") {
  CHECK(oracle::tree_closed_walks(2) == 4);
  CHECK(oracle::tree_closed_walks(4) == 28);
  CHECK(oracle::tree_closed_walks(6) == 232);
  CHECK(oracle::tree_closed_walks(8) == 2092);
}

TEST_CASE("convolution count on the free pair") {
  const auto f = fixture_free2().set.elements;
  for (int len = 2; len <= 12; len += 2) {
    const Integer c = convolution_count(f, len);
    CHECK(c == oracle::tree_closed_walks(len));
    CHECK(c == convolution_count(f, len, 4));
    CHECK(closed_walk_bound_holds(c, len, free_norm(2).value));
  }
  CHECK(kind_of([&] { convolution_count(f, 3); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { convolution_count(std::span(f).first(1), 2); }) == ErrorKind::NotSymmetric);
}

TEST_CASE("convolution count with relations") {
  // sigma has order 2, so {sigma, sigma} is inverse-closed and every word
  // of even length is the identity
  const Alphabet v21(2, 1);
  const TableElement sigma = parse_table(v21, "{1->2,2->1}");
  const TableElement twice[] = {sigma, sigma};
  CHECK(convolution_count(twice, 6) == 64);
  CHECK_FALSE(closed_walk_bound_holds(64, 6, QuadraticValue(Rational(3, 2))));
  CHECK(closed_walk_bound_holds(64, 6, QuadraticValue(Rational(2))));
}

TEST_CASE("norm bounds") {
  CHECK(free_norm(2).value == QuadraticValue(0, 2, 3));
  CHECK(free_norm(3).value == QuadraticValue(0, 2, 5));
  CHECK(to_string(free_norm(2).kind) == "exact-free-rank-r");
  CHECK(kind_of([] { free_norm(1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { user_norm(QuadraticValue(Rational(-1))); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("the inequality at n = 3 passes") {
  const auto fx = fixture_free2();
  const auto r = check_certificate(v22, fx.set, fx.certificate, parse_word(v22, "1:11"));
  CHECK(r.n == 3);
  CHECK(r.f_size == 4);
  CHECK(r.off_support_bound == Rational(7, 2));
  CHECK(r.norm.value == QuadraticValue(0, 2, 3));
  CHECK(r.bound_vs_norm == Ordering::Greater);
  CHECK(quad_compare(r.lhs, QuadraticValue(Rational(7, 2))) != Ordering::Less);
  CHECK(r.lhs == parse_quadratic("29/8 + 1/8*sqrt(2)"));
  CHECK(r.lhs_vs_norm == Ordering::Greater);
  CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("the inequality at n = 1 is inconclusive") {
  const auto fx = fixture_free2();
  const auto r = check_certificate(v22, fx.set, fx.certificate, Word(1));
  CHECK(r.off_support_bound == 2);
  CHECK(r.bound_vs_norm == Ordering::Less);
  CHECK(r.lhs == parse_quadratic("5/2 + 1/2*sqrt(2)"));
  CHECK(r.lhs_vs_norm == Ordering::Less);
  CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("lhs always dominates the off-support bound") {
  const auto fx = fixture_free2();
  for (const char* nu : {"1:", "2:", "1:1", "2:2", "1:12", "2:21", "1:212", "2:1111"}) {
    const auto r = check_certificate(v22, fx.set, fx.certificate, parse_word(v22, nu));
    CHECK(quad_compare(r.lhs, QuadraticValue(r.off_support_bound)) != Ordering::Less);
  }
  const Alphabet v23(2, 3);
  const auto r = check_inequality(v23, fx.set, parse_word(v23, "3:"), free_norm(2));
  CHECK(r.off_support_bound == Rational(8, 3));
}

TEST_CASE("certificate misuse") {
  const auto fx = fixture_free2();
  auto cert = fx.certificate;
  cert.a_plus = cert.b_plus;
  CHECK(kind_of([&] { check_certificate(v22, fx.set, cert, Word(1)); }) == ErrorKind::CertificateInvalid);
  const Alphabet v32(3, 2);
  CHECK(kind_of([&] { check_certificate(v32, fx.set, fx.certificate, Word(1)); }) == ErrorKind::ArityMismatch);
}
