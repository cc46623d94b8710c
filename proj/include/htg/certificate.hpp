#pragma once

// Exact reproduction of the non-amenability inequality for the canonical
// action of V_{d,k} on (X_{d,k}, mu_{d,k}):
//
//   sum_{s in F} int sqrt(omega(s, x)) dmu(x)
//     >= |F| (1 - 1/(k d^{n-1}))  >  || sum_{s in F} lambda_s ||
//
// where F is a symmetric free generating set of V_{d,d} copied onto a
// cylinder of length n. Freeness is certified by ping-pong, which fixes the
// right-hand side at 2 sqrt(2r - 1) for rank r.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htg/cantor.hpp"
#include "htg/error.hpp"
#include "htg/quadratic.hpp"
#include "htg/table.hpp"

namespace htg {

struct SymmetricSet {
  std::vector<TableElement> elements;
  bool symmetric = false;
};

// {g, g^-1 : g in generators}, deduplicated. Throws NotSymmetric if a
// generator is the identity.
SymmetricSet make_symmetric_set(std::span<const TableElement> generators);

// Throws NotSymmetric unless the set is nonempty, identity-free,
// duplicate-free and closed under inverses.
void require_symmetric(const SymmetricSet& f);

struct PingPongCertificate {
  TableElement a;
  TableElement b;
  Clopen a_plus;   // attractor of a
  Clopen a_minus;  // attractor of a^-1
  Clopen b_plus;
  Clopen b_minus;
};

struct PingPongResult {
  bool ok = true;
  ErrorKind failure = ErrorKind::CertificateInvalid;
  std::string condition;
};

// Checks pairwise disjointness of the four attractors and
//   a(X \ a_minus) in a_plus,  a^-1(X \ a_plus) in a_minus,
// and the same for b, exactly.
PingPongResult pingpong_check(const PingPongCertificate& cert);
bool pingpong_verify(const PingPongCertificate& cert);
// Throws DisjointnessViolation or InclusionViolation naming the condition.
void require_pingpong(const PingPongCertificate& cert);

enum class NormKind { ExactFreeRank, UserSupplied };
std::string_view to_string(NormKind kind) noexcept;

struct NormBound {
  QuadraticValue value;
  NormKind kind = NormKind::UserSupplied;
  std::optional<int> rank;
};

// 2 sqrt(2r - 1), the norm of the sum of a free basis of rank r and its
// inverses in the left regular representation. Requires r >= 2.
NormBound free_norm(int rank);
// Throws InvalidArgument unless value > 0.
NormBound user_norm(const QuadraticValue& value);

// Number of words of length `len` over the multiset `f` whose product is the
// identity, i.e. <delta_e, (sum lambda_s)^len delta_e>. Enumerates the ball
// of radius len/2 sphere by sphere with canonical-form deduplication and
// pairs each element with its inverse. The result does not depend on
// `workers`. Throws NotSymmetric if `f` is not closed under inverses as a
// multiset, InvalidArgument if `len` is odd or < 2.
Integer convolution_count(std::span<const TableElement> f, int len, unsigned workers = 1);

// count <= norm^len, exactly. count^(1/len) is a lower bound for the norm of
// sum lambda_s, so this must hold whenever `norm` is a true upper bound.
bool closed_walk_bound_holds(const Integer& count, int len, const QuadraticValue& norm);

enum class Verdict { Pass, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct CertificateReport {
  Alphabet alphabet;
  Word nu;
  std::size_t n = 0;
  std::size_t f_size = 0;
  QuadraticValue lhs;
  Rational off_support_bound;  // |F| (1 - 1/(k d^{n-1}))
  NormBound norm;
  Ordering lhs_vs_norm = Ordering::Equal;
  Ordering bound_vs_norm = Ordering::Equal;
  Verdict verdict = Verdict::Inconclusive;
};

// Copies every element of `f` (in V_{d,d}) onto the cylinder of `nu` in
// X_{d,k} and compares sum int sqrt(omega) with `norm`. Verdict Pass iff
// lhs > norm exactly; otherwise Inconclusive (the parameters are too weak,
// not an error).
CertificateReport check_inequality(const Alphabet& target, const SymmetricSet& f, const Word& nu,
                                   const NormBound& norm);

// As above with norm = free_norm(2), after verifying that `f` is exactly
// {a, a^-1, b, b^-1} for a ping-pong certified pair. Throws
// CertificateInvalid otherwise.
CertificateReport check_certificate(const Alphabet& target, const SymmetricSet& f,
                                    const PingPongCertificate& cert, const Word& nu);

}  // namespace htg
