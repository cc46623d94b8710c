#include "htg/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <unordered_map>

#include "htg/measure.hpp"

namespace htg {

namespace {

using Layer = std::unordered_map<TableElement, std::uint64_t, TableHash>;

bool contains(std::span<const TableElement> set, const TableElement& g) {
  return std::find(set.begin(), set.end(), g) != set.end();
}

}  // namespace

SymmetricSet make_symmetric_set(std::span<const TableElement> generators) {
  SymmetricSet f;
  for (const auto& g : generators) {
    if (is_identity(g)) throw Error(ErrorKind::NotSymmetric, "generator is the identity");
    for (auto&& h : {g, inverse(g)})
      if (!contains(f.elements, h)) f.elements.push_back(h);
  }
  f.symmetric = true;
  require_symmetric(f);
  return f;
}

void require_symmetric(const SymmetricSet& f) {
  if (f.elements.empty()) throw Error(ErrorKind::NotSymmetric, "empty set");
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    const auto& g = f.elements[i];
    if (is_identity(g)) throw Error(ErrorKind::NotSymmetric, "set contains the identity");
    for (std::size_t j = i + 1; j < f.elements.size(); ++j)
      if (f.elements[j] == g) throw Error(ErrorKind::NotSymmetric, "duplicate element " + format_table(g));
    if (!contains(f.elements, inverse(g)))
      throw Error(ErrorKind::NotSymmetric, "inverse of " + format_table(g) + " is missing");
  }
}

// ---------------------------------------------------------------------------
// Ping-pong

PingPongResult pingpong_check(const PingPongCertificate& c) {
  const Alphabet& al = c.a.alphabet();
  for (const Clopen* s : {&c.a_plus, &c.a_minus, &c.b_plus, &c.b_minus})
    require_same(al, s->alphabet(), "ping-pong attractor");
  require_same(al, c.b.alphabet(), "ping-pong generators");

  const std::pair<const char*, const Clopen*> sets[] = {
      {"a+", &c.a_plus}, {"a-", &c.a_minus}, {"b+", &c.b_plus}, {"b-", &c.b_minus}};
  for (const auto& [name, s] : sets)
    if (s->empty()) return {false, ErrorKind::DisjointnessViolation, std::string(name) + " is empty"};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!intersect(*sets[i].second, *sets[j].second).empty())
        return {false, ErrorKind::DisjointnessViolation,
                std::string(sets[i].first) + " meets " + sets[j].first};

  struct Inclusion {
    const char* name;
    const TableElement* g;
    bool invert;
    const Clopen* from_complement_of;
    const Clopen* into;
  };
  const Inclusion checks[] = {
      {"a(X \\ a-) in a+", &c.a, false, &c.a_minus, &c.a_plus},
      {"a^-1(X \\ a+) in a-", &c.a, true, &c.a_plus, &c.a_minus},
      {"b(X \\ b-) in b+", &c.b, false, &c.b_minus, &c.b_plus},
      {"b^-1(X \\ b+) in b-", &c.b, true, &c.b_plus, &c.b_minus},
  };
  for (const auto& chk : checks) {
    const TableElement g = chk.invert ? inverse(*chk.g) : *chk.g;
    if (!subset(act_clopen(g, complement(*chk.from_complement_of)), *chk.into))
      return {false, ErrorKind::InclusionViolation, chk.name};
  }
  return {};
}

bool pingpong_verify(const PingPongCertificate& cert) { return pingpong_check(cert).ok; }

void require_pingpong(const PingPongCertificate& cert) {
  const auto r = pingpong_check(cert);
  if (!r.ok) throw Error(r.failure, r.condition);
}

// ---------------------------------------------------------------------------
// Norms and closed-walk counts

std::string_view to_string(NormKind kind) noexcept {
  return kind == NormKind::ExactFreeRank ? "exact-free-rank-r" : "user-supplied";
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Pass ? "PASS" : "INCONCLUSIVE"; }

NormBound free_norm(int rank) {
  if (rank < 2) throw Error(ErrorKind::InvalidArgument, "free rank must be >= 2");
  return {QuadraticValue(0, 2, 2 * rank - 1), NormKind::ExactFreeRank, rank};
}

NormBound user_norm(const QuadraticValue& value) {
  if (sign(value) <= 0) throw Error(ErrorKind::InvalidArgument, "norm bound must be positive");
  return {value, NormKind::UserSupplied, std::nullopt};
}

namespace {

Layer expand(const Layer& layer, std::span<const TableElement> f, unsigned workers) {
  std::vector<std::pair<const TableElement*, std::uint64_t>> items;
  items.reserve(layer.size());
  for (const auto& [g, n] : layer) items.emplace_back(&g, n);

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
  std::vector<Layer> partial(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < items.size(); i += workers)
      for (const auto& s : f) partial[w][compose(*items[i].first, s)] += items[i].second;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Layer next = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w)
    for (auto& [g, n] : partial[w]) next[g] += n;
  return next;
}

}  // namespace

Integer convolution_count(std::span<const TableElement> f, int len, unsigned workers) {
  if (len < 2 || len % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "word length must be even and >= 2, got " + std::to_string(len));
  if (f.empty()) throw Error(ErrorKind::NotSymmetric, "empty set");
  for (const auto& s : f) {
    require_same(f.front().alphabet(), s.alphabet(), "convolution_count");
    const auto inv = inverse(s);
    if (std::count(f.begin(), f.end(), s) != std::count(f.begin(), f.end(), inv))
      throw Error(ErrorKind::NotSymmetric, "multiset is not closed under inverses");
  }
  const int half = len / 2;
  // Per-element word counts are bounded by |F|^half.
  long double bound = 1;
  for (int i = 0; i < half; ++i) bound *= static_cast<long double>(f.size());
  if (bound >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    throw Error(ErrorKind::InvalidArgument, "word length too large for exact counting");

  Layer layer;
  layer.emplace(TableElement(f.front().alphabet()), 1);
  for (int t = 0; t < half; ++t) layer = expand(layer, f, workers);

  // Words of length 2t with product e split as u v with u = v^-1.
  Integer total = 0;
  for (const auto& [g, n] : layer) {
    const auto it = layer.find(inverse(g));
    if (it != layer.end()) total += Integer(n) * it->second;
  }
  return total;
}

bool closed_walk_bound_holds(const Integer& count, int len, const QuadraticValue& norm) {
  QuadraticValue power(Rational(1));
  for (int i = 0; i < len; ++i) power = power * norm;
  return quad_compare(QuadraticValue(Rational(count)), power) != Ordering::Greater;
}

// ---------------------------------------------------------------------------
// The inequality

CertificateReport check_inequality(const Alphabet& target, const SymmetricSet& f, const Word& nu,
                                   const NormBound& norm) {
  require_symmetric(f);
  if (!nu.valid_for(target))
    throw Error(ErrorKind::MismatchedAlphabet, "embedding word outside alphabet " + to_string(target));
  CertificateReport r;
  r.alphabet = target;
  r.nu = nu;
  r.n = nu.length();
  r.f_size = f.elements.size();
  r.lhs = QuadraticValue(0, 0, target.d);
  for (const auto& s : f.elements) r.lhs += integral_sqrt_rn(embed_supported(s, target, nu));
  r.off_support_bound = Rational(static_cast<long long>(r.f_size)) * (1 - cylinder_mass(target, nu));
  r.norm = norm;
  r.lhs_vs_norm = quad_compare(r.lhs, norm.value);
  r.bound_vs_norm = quad_compare(QuadraticValue(r.off_support_bound), norm.value);
  r.verdict = r.lhs_vs_norm == Ordering::Greater ? Verdict::Pass : Verdict::Inconclusive;
  return r;
}

CertificateReport check_certificate(const Alphabet& target, const SymmetricSet& f,
                                    const PingPongCertificate& cert, const Word& nu) {
  if (const auto pp = pingpong_check(cert); !pp.ok)
    throw Error(ErrorKind::CertificateInvalid, "ping-pong failed: " + pp.condition);
  require_symmetric(f);
  const TableElement expected[] = {cert.a, inverse(cert.a), cert.b, inverse(cert.b)};
  bool matches = f.elements.size() == 4;
  for (const auto& g : expected) matches = matches && contains(f.elements, g);
  if (!matches)
    throw Error(ErrorKind::CertificateInvalid, "set is not {a, a^-1, b, b^-1} for the certified pair");
  return check_inequality(target, f, nu, free_norm(2));
}

}  // namespace htg
