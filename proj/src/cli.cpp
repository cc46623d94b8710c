#include "htg/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "htg/brin.hpp"
#include "htg/certificate.hpp"
#include "htg/error.hpp"
#include "htg/fixtures.hpp"
#include "htg/groupoid.hpp"
#include "htg/measure.hpp"
#include "htg/table.hpp"
#include "htg/tail.hpp"

namespace htg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int d = 2;
  int k = 1;
  int m = 1;
  bool json = false;
  std::vector<std::string> args;
  std::string nu;
  std::string fixture = "free2";
  std::string norm;
  int len = 12;
  unsigned workers = 1;
  std::size_t max_tail = 2;
  std::size_t level = 0;
  std::uint64_t seed = 20240601;
};

struct Outcome {
  Json result;
  std::string text;
  int code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void need_args(const Options& o, std::size_t n, const char* what) {
  if (o.args.size() != n)
    throw UsageError("expected " + std::to_string(n) + " argument(s): " + what + ", got " +
                     std::to_string(o.args.size()));
}

Json table_json(const TableElement& g) {
  Json arr = Json::array();
  for (const auto& b : g.blocks())
    arr.push_back({format_word(g.alphabet(), b.domain), format_word(g.alphabet(), b.range)});
  return arr;
}

Json clopen_json(const Clopen& c) {
  Json arr = Json::array();
  for (const auto& w : c.prefixes()) arr.push_back(format_word(c.alphabet(), w));
  return arr;
}

Json quadratic_json(const QuadraticValue& q) {
  return {{"a", format_rational(q.a())}, {"b", format_rational(q.b())}, {"m", q.m()}};
}

Json bisection_json(const Bisection& u) {
  Json arr = Json::array();
  for (const auto& c : u.cells())
    arr.push_back({{"range", format_word(u.alphabet(), c.range)},
                   {"domain", format_word(u.alphabet(), c.domain)},
                   {"degree", c.degree()}});
  return arr;
}

Outcome table_outcome(const TableElement& g) { return {table_json(g), format_table(g)}; }

Rational omega_value(int d, int j) {
  Rational r = 1;
  for (int i = 0; i < std::abs(j); ++i) r *= d;
  return j >= 0 ? r : 1 / r;
}

FreePairFixture load_fixture(const Options& o) {
  auto f = find_fixture(o.fixture);
  if (!f) throw UsageError("unknown --fixture '" + o.fixture + "'");
  return *f;
}

// ---------------------------------------------------------------------------

Outcome cmd_compose(const Alphabet& a, const Options& o) {
  need_args(o, 2, "TABLE TABLE");
  return table_outcome(compose(parse_table(a, o.args[0]), parse_table(a, o.args[1])));
}

Outcome cmd_inverse(const Alphabet& a, const Options& o) {
  need_args(o, 1, "TABLE");
  return table_outcome(inverse(parse_table(a, o.args[0])));
}

Outcome cmd_reduce(const Alphabet& a, const Options& o) {
  need_args(o, 1, "TABLE");
  return table_outcome(parse_table(a, o.args[0]));
}

Outcome cmd_act(const Alphabet& a, const Options& o) {
  need_args(o, 2, "TABLE (POINT | CLOPEN)");
  const auto g = parse_table(a, o.args[0]);
  if (o.args[1].find("^inf") != std::string::npos) {
    const auto y = act_point(g, parse_point(a, o.args[1]));
    return {format_point(y), format_point(y)};
  }
  const auto c = act_clopen(g, parse_clopen(a, o.args[1]));
  return {clopen_json(c), format_clopen(c)};
}

Outcome cmd_measure(const Alphabet& a, const Options& o) {
  need_args(o, 1, "CLOPEN");
  const auto v = format_rational(mu(parse_clopen(a, o.args[0])));
  return {v, v};
}

Outcome cmd_profile(const Alphabet& a, const Options& o) {
  need_args(o, 1, "TABLE");
  const auto g = parse_table(a, o.args[0]);
  Json rows = Json::array();
  std::string text;
  for (const auto& e : rn_profile(g)) {
    const auto block = format_word(a, e.block);
    rows.push_back({{"block", block},
                    {"exponent", e.exponent.exponent},
                    {"omega", format_rational(omega_value(a.d, e.exponent.exponent))},
                    {"mass", format_rational(cylinder_mass(a, e.block))}});
    text += block + " " + std::to_string(e.exponent.exponent) + "\n";
  }
  Json result = {{"blocks", rows}, {"transported_mass", format_rational(transported_mass(g))}};
  if (!text.empty()) text.pop_back();
  return {result, text};
}

Outcome cmd_at_point(const Alphabet& a, const Options& o) {
  need_args(o, 2, "TABLE POINT");
  const int j = rn_exponent(parse_table(a, o.args[0]), parse_point(a, o.args[1])).exponent;
  return {{{"exponent", j}, {"omega", format_rational(omega_value(a.d, j))}}, std::to_string(j)};
}

Outcome cmd_integral(const Alphabet& a, const Options& o) {
  need_args(o, 1, "TABLE");
  const auto q = integral_sqrt_rn(parse_table(a, o.args[0]));
  return {quadratic_json(q), format_quadratic(q)};
}

Outcome cmd_deficit(const Alphabet& a, const Options& o) {
  if (o.args.size() < 2) throw UsageError("expected CLOPEN TABLE [TABLE...]");
  const auto set = parse_clopen(a, o.args[0]);
  std::vector<TableElement> f;
  for (std::size_t i = 1; i < o.args.size(); ++i) f.push_back(parse_table(a, o.args[i]));
  const auto v = format_rational(deficit(set, f));
  return {{{"deficit", v}}, v};
}

Outcome cmd_to_table(const Alphabet& a, const Options& o) {
  need_args(o, 1, "BISECTION");
  return table_outcome(to_table(parse_bisection(a, o.args[0])));
}

Outcome cmd_from_table(const Alphabet& a, const Options& o) {
  need_args(o, 1, "TABLE");
  const auto u = from_table(parse_table(a, o.args[0]));
  return {bisection_json(u), format_bisection(u)};
}

Outcome cmd_bisection_compose(const Alphabet& a, const Options& o) {
  need_args(o, 2, "BISECTION BISECTION");
  const auto u = bisection_compose(parse_bisection(a, o.args[0]), parse_bisection(a, o.args[1]));
  return {bisection_json(u), format_bisection(u)};
}

Outcome cmd_is_full(const Alphabet& a, const Options& o) {
  need_args(o, 1, "BISECTION");
  const bool full = is_full(parse_bisection(a, o.args[0]));
  return {full, full ? "true" : "false"};
}

Outcome cmd_related(const Alphabet& a, const Options& o) {
  need_args(o, 2, "POINT POINT");
  const auto x = parse_point(a, o.args[0]);
  const auto y = parse_point(a, o.args[1]);
  const auto w = related(x, y);
  if (!w) return {{{"related", false}}, "unrelated"};
  const auto cell = witness_cell(x, y, *w);
  Json result = {{"related", true},
                 {"witness", {{"p", w->p}, {"q", w->q}}},
                 {"cell", {{"range", format_word(a, cell.range)},
                           {"domain", format_word(a, cell.domain)},
                           {"degree", cell.degree()}}}};
  return {result, "related p=" + std::to_string(w->p) + " q=" + std::to_string(w->q) + " cell " +
                      format_word(a, cell.range) + "<-" + format_word(a, cell.domain)};
}

Outcome cmd_orbit(const Alphabet& a, const Options& o) {
  need_args(o, 1, "POINT");
  if (o.max_tail < 1) throw UsageError("--L must be >= 1");
  Json arr = Json::array();
  std::string text;
  for (const auto& y : orbit_fragment(parse_point(a, o.args[0]), o.max_tail)) {
    arr.push_back(format_point(y));
    text += format_point(y) + "\n";
  }
  if (!text.empty()) text.pop_back();
  return {arr, text};
}

Outcome cmd_finite(const Alphabet& a, const Options& o) {
  need_args(o, 2, "POINT POINT");
  const bool r = finite_level_related(parse_point(a, o.args[0]), parse_point(a, o.args[1]), o.level);
  return {r, r ? "true" : "false"};
}

Outcome cmd_transporter(const Alphabet& a, const Options& o) {
  need_args(o, 2, "WORD WORD");
  return table_outcome(transporter(a, parse_word(a, o.args[0]), parse_word(a, o.args[1])));
}

Outcome cmd_embed(const Alphabet& a, const Options& o) {
  need_args(o, 1, "TABLE over (d, d)");
  if (o.nu.empty()) throw UsageError("--nu is required");
  const Alphabet base(a.d, a.d);
  return table_outcome(embed_supported(parse_table(base, o.args[0]), a, parse_word(a, o.nu)));
}

Outcome cmd_certificate_check(const Alphabet& a, const Options& o) {
  need_args(o, 0, "none");
  if (o.nu.empty()) throw UsageError("--nu is required");
  const auto fx = load_fixture(o);
  require_same(fx.alphabet, Alphabet(a.d, a.d), "fixture " + fx.name);
  const Word nu = parse_word(a, o.nu);
  const CertificateReport r =
      o.norm.empty() ? check_certificate(a, fx.set, fx.certificate, nu)
                     : check_inequality(a, fx.set, nu, user_norm(parse_quadratic(o.norm)));
  Json norm = quadratic_json(r.norm.value);
  norm["kind"] = std::string(to_string(r.norm.kind));
  norm["r"] = r.norm.rank ? Json(*r.norm.rank) : Json(nullptr);
  const bool bound_greater = r.bound_vs_norm == Ordering::Greater;
  Json result = {
      {"d", a.d},
      {"k", a.k},
      {"n", r.n},
      {"nu", format_word(a, r.nu)},
      {"F_size", r.f_size},
      {"lhs", quadratic_json(r.lhs)},
      {"paper_lower_bound", format_rational(r.off_support_bound)},
      {"norm_bound", norm},
      {"comparisons",
       Json::array({{{"lhs_vs_norm", std::string(to_string(r.lhs_vs_norm))}},
                    {{"paper_bound_vs_norm", bound_greater ? "greater" : "not"}}})},
      {"verdict", std::string(to_string(r.verdict))},
      {"display", {{"lhs", r.lhs.approx()}, {"norm_bound", r.norm.value.approx()}}},
  };
  std::ostringstream text;
  text << "d=" << a.d << " k=" << a.k << " n=" << r.n << " nu=" << format_word(a, r.nu)
       << " |F|=" << r.f_size << "\n"
       << "lhs            = " << format_quadratic(r.lhs) << "  (~" << r.lhs.approx() << ")\n"
       << "off-support    = " << format_rational(r.off_support_bound) << "\n"
       << "norm bound     = " << format_quadratic(r.norm.value) << "  (" << to_string(r.norm.kind)
       << ")\n"
       << "lhs vs norm    : " << to_string(r.lhs_vs_norm) << "\n"
       << "bound vs norm  : " << (bound_greater ? "greater" : "not") << "\n"
       << "verdict        : " << to_string(r.verdict);
  return {result, text.str(), r.verdict == Verdict::Pass ? kOk : kInconclusive};
}

Outcome cmd_pingpong(const Alphabet&, const Options& o) {
  need_args(o, 0, "none");
  const auto fx = load_fixture(o);
  require_pingpong(fx.certificate);
  return {{{"fixture", fx.name}, {"verified", true}}, "verified"};
}

Outcome cmd_convolution(const Alphabet& a, const Options& o) {
  std::vector<TableElement> f;
  if (o.args.empty()) {
    f = load_fixture(o).set.elements;
  } else {
    for (const auto& s : o.args) f.push_back(parse_table(a, s));
  }
  const Integer count = convolution_count(f, o.len, o.workers);
  Json result = {{"len", o.len}, {"count", count.str()}, {"set_size", f.size()}};
  return {result, count.str()};
}

Outcome cmd_selftest(const Alphabet&, const Options& o) {
  std::ostringstream log;
  const bool ok = selftest(log, o.seed);
  auto text = log.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return {{{"passed", ok}}, text, ok ? kOk : kDomainError};
}

using Handler = std::function<Outcome(const Alphabet&, const Options&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higman-Thompson groups, their Cantor actions and Radon-Nikodym cocycles"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::pair<std::string, Handler>> leaves;

  auto common = [&](CLI::App* sub, const char* args_help) {
    sub->add_option("--d", o.d, "branching degree d")->capture_default_str();
    sub->add_option("--k", o.k, "root arity k")->capture_default_str();
    sub->add_option("--m", o.m, "number of product factors")->capture_default_str();
    sub->add_flag("--json", o.json, "emit {command, params, result} JSON");
    if (args_help) sub->add_option("args", o.args, args_help);
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full,
                  const char* help, const char* args_help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    common(sub, args_help);
    leaves[sub] = {full, std::move(h)};
    return sub;
  };

  leaf(&app, "compose", "compose", "g.h as a table (g after h)", "TABLE TABLE", cmd_compose);
  leaf(&app, "inverse", "inverse", "inverse element", "TABLE", cmd_inverse);
  leaf(&app, "reduce", "reduce", "canonical reduced form", "TABLE", cmd_reduce);
  leaf(&app, "act", "act", "image of a point or clopen", "TABLE TARGET", cmd_act);
  leaf(&app, "measure", "measure", "Bernoulli measure of a clopen", "CLOPEN", cmd_measure);
  leaf(&app, "transporter", "transporter", "element mapping one cylinder onto another", "WORD WORD",
       cmd_transporter);
  auto* embed = leaf(&app, "embed", "embed", "copy of a V_{d,d} element on a cylinder",
                     "TABLE", cmd_embed);
  embed->add_option("--nu", o.nu, "target cylinder word")->required();
  leaf(&app, "deficit", "deficit", "max over s of mu(A sym-diff sA)", "CLOPEN TABLE...", cmd_deficit);

  auto* cocycle = app.add_subcommand("cocycle", "Radon-Nikodym cocycle");
  cocycle->require_subcommand(1);
  leaf(cocycle, "profile", "cocycle profile", "exponent per block", "TABLE", cmd_profile);
  leaf(cocycle, "at-point", "cocycle at-point", "exponent at a point", "TABLE POINT", cmd_at_point);
  leaf(cocycle, "integral-sqrt", "cocycle integral-sqrt", "exact integral of sqrt(omega)", "TABLE",
       cmd_integral);

  auto* bis = app.add_subcommand("bisection", "bisections of the groupoid");
  bis->require_subcommand(1);
  leaf(bis, "to-table", "bisection to-table", "full bisection to table", "BISECTION", cmd_to_table);
  leaf(bis, "from-table", "bisection from-table", "table to full bisection", "TABLE", cmd_from_table);
  leaf(bis, "compose", "bisection compose", "product UV", "BISECTION BISECTION", cmd_bisection_compose);
  leaf(bis, "is-full", "bisection is-full", "fullness test", "BISECTION", cmd_is_full);

  auto* tail = app.add_subcommand("tail", "tail equivalence");
  tail->require_subcommand(1);
  leaf(tail, "related", "tail related", "decide tail equivalence with minimal witness", "POINT POINT",
       cmd_related);
  auto* orbit = leaf(tail, "orbit", "tail orbit", "orbit fragment", "POINT", cmd_orbit);
  orbit->add_option("--L", o.max_tail, "maximum tail letters of substituted prefixes")->capture_default_str();
  auto* finite = leaf(tail, "finite", "tail finite", "lag-free level-n relation", "POINT POINT", cmd_finite);
  finite->add_option("--n", o.level, "level")->capture_default_str();

  auto* cert = app.add_subcommand("certificate", "non-amenability certificate");
  cert->require_subcommand(1);
  auto* check = leaf(cert, "check", "certificate check", "check the inequality", nullptr,
                     cmd_certificate_check);
  check->add_option("--nu", o.nu, "embedding cylinder word")->required();
  check->add_option("--fixture", o.fixture, "frozen free pair")->capture_default_str();
  check->add_option("--norm", o.norm, "user-supplied norm bound 'a + b*sqrt(m)'");
  auto* pp = leaf(cert, "pingpong-verify", "certificate pingpong-verify", "verify a ping-pong certificate",
                  nullptr, cmd_pingpong);
  pp->add_option("--fixture", o.fixture, "frozen free pair")->capture_default_str();
  auto* conv = leaf(cert, "convolution-count", "certificate convolution-count",
                    "closed words of a given length", "TABLE...", cmd_convolution);
  conv->add_option("--fixture", o.fixture, "frozen free pair (when no tables are given)")->capture_default_str();
  conv->add_option("--len", o.len, "even word length")->capture_default_str();
  conv->add_option("--workers", o.workers, "worker threads")->capture_default_str();

  auto* st = leaf(&app, "selftest", "selftest", "run the invariant suite", nullptr, cmd_selftest);
  st->add_option("--seed", o.seed, "random seed")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = nullptr;
  for (auto& [sub, entry] : leaves)
    if (sub->parsed()) chosen = sub;
  if (!chosen) {
    err << "no command given\n";
    return kUsage;
  }
  const auto& [name, handler] = leaves[chosen];

  try {
    const Alphabet a(o.d, o.k, o.m);
    Outcome res = handler(a, o);
    if (o.json) {
      Json params = {{"d", o.d}, {"k", o.k}, {"m", o.m}, {"args", o.args}};
      if (!o.nu.empty()) params["nu"] = o.nu;
      Json doc = {{"command", name}, {"params", params}, {"result", res.result}};
      out << doc.dump(2) << "\n";
    } else {
      out << res.text << "\n";
    }
    return res.code;
  } catch (const UsageError& e) {
    err << name << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << name << ": " << e.what() << "\n";
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument) return kUsage;
    if (e.kind() == ErrorKind::InconclusiveParameters) return kInconclusive;
    return kDomainError;
  }
}

}  // namespace htg::cli
