#include "htg/groupoid.hpp"

#include <algorithm>

#include "htg/error.hpp"
#include "text.hpp"

namespace htg {

namespace {

bool by_domain(const DoubleCylinder& a, const DoubleCylinder& b) { return a.domain < b.domain; }

std::vector<DoubleCylinder> canonical_cells(const Alphabet& a, std::vector<DoubleCylinder> cells) {
  std::sort(cells.begin(), cells.end(), by_domain);
  const std::size_t d = static_cast<std::size_t>(a.d);
  std::vector<DoubleCylinder> acc;
  acc.reserve(cells.size());
  for (auto& c : cells) {
    acc.push_back(std::move(c));
    while (acc.size() >= d) {
      const auto& top = acc.back();
      if (top.domain.tail_size() == 0 || top.range.tail_size() == 0) break;
      if (top.domain.last() != a.d || top.range.last() != a.d) break;
      const Word mu = top.domain.parent();
      const Word nu = top.range.parent();
      bool family = true;
      for (std::size_t i = 0; i < d && family; ++i) {
        const auto& s = acc[acc.size() - d + i];
        const auto l = static_cast<Letter>(i + 1);
        family = s.domain == mu.child(l) && s.range == nu.child(l);
      }
      if (!family) break;
      acc.resize(acc.size() - d);
      acc.push_back(DoubleCylinder{nu, mu});
    }
  }
  return acc;
}

void check_antichain(const Alphabet& a, std::vector<Word> words, ErrorKind kind) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i)
    if (words[i].is_prefix_of(words[i + 1]))
      throw Error(kind, format_word(a, words[i]) + " overlaps " + format_word(a, words[i + 1]));
}

}  // namespace

GermMaps germ_maps(const Alphabet& a, const DoubleCylinder& c) {
  return {Clopen::cylinder(a, c.domain), Clopen::cylinder(a, c.range), c.degree()};
}

Bisection::Bisection(const Alphabet& a, std::vector<DoubleCylinder> cells) : alphabet_(a) {
  std::vector<Word> dom, ran;
  for (const auto& c : cells) {
    if (!c.domain.valid_for(a) || !c.range.valid_for(a))
      throw Error(ErrorKind::MismatchedAlphabet, "cell word outside alphabet " + to_string(a));
    dom.push_back(c.domain);
    ran.push_back(c.range);
  }
  check_antichain(a, std::move(dom), ErrorKind::OverlappingDomain);
  check_antichain(a, std::move(ran), ErrorKind::OverlappingRange);
  cells_ = canonical_cells(a, std::move(cells));
}

Bisection::Bisection(Trusted, const Alphabet& a, std::vector<DoubleCylinder> cells)
    : alphabet_(a), cells_(canonical_cells(a, std::move(cells))) {}

Bisection Bisection::identity_on(const Clopen& c) {
  std::vector<DoubleCylinder> cells;
  for (const auto& w : c.prefixes()) cells.push_back({w, w});
  return Bisection(c.alphabet(), std::move(cells));
}

Clopen Bisection::source() const {
  std::vector<Word> ws;
  for (const auto& c : cells_) ws.push_back(c.domain);
  return clopen_normalize(alphabet_, std::move(ws));
}

Clopen Bisection::range() const {
  std::vector<Word> ws;
  for (const auto& c : cells_) ws.push_back(c.range);
  return clopen_normalize(alphabet_, std::move(ws));
}

Bisection bisection_compose(const Bisection& u, const Bisection& v) {
  require_same(u.alphabet(), v.alphabet(), "bisection_compose");
  const auto uc = u.cells();
  std::vector<DoubleCylinder> out;
  for (const auto& vc : v.cells()) {
    // Germs compose when the range of the v-germ is the source of the u-germ.
    const DoubleCylinder key{Word{}, vc.range};
    auto it = std::lower_bound(uc.begin(), uc.end(), key, by_domain);
    if (it != uc.end() && vc.range.is_prefix_of(it->domain)) {
      for (; it != uc.end() && vc.range.is_prefix_of(it->domain); ++it) {
        const auto extra = it->domain.tail().substr(vc.range.tail_size());
        out.push_back({it->range, vc.domain.extended(extra)});
      }
    } else if (it != uc.begin() && std::prev(it)->domain.is_prefix_of(vc.range)) {
      --it;
      const auto extra = vc.range.tail().substr(it->domain.tail_size());
      out.push_back({it->range.extended(extra), vc.domain});
    }
  }
  return Bisection(Bisection::Trusted{}, u.alphabet(), std::move(out));
}

Bisection bisection_inverse(const Bisection& u) {
  std::vector<DoubleCylinder> out;
  for (const auto& c : u.cells()) out.push_back(c.inverse());
  return Bisection(Bisection::Trusted{}, u.alphabet(), std::move(out));
}

bool is_full(const Bisection& u) { return u.source().is_whole() && u.range().is_whole(); }

TableElement to_table(const Bisection& u) {
  if (!is_full(u)) throw Error(ErrorKind::NotFull, format_bisection(u) + " is not a full bisection");
  std::vector<Block> blocks;
  for (const auto& c : u.cells()) blocks.push_back(Block{c.domain, c.range});
  return TableElement::from_valid_blocks(u.alphabet(), std::move(blocks));
}

Bisection from_table(const TableElement& g) {
  std::vector<DoubleCylinder> cells;
  for (const auto& b : g.blocks()) cells.push_back({b.range, b.domain});
  return Bisection(g.alphabet(), std::move(cells));
}

Point bisection_act(const Bisection& u, const Point& x) {
  require_same(u.alphabet(), x.alphabet(), "bisection_act");
  for (const auto& c : u.cells()) {
    if (c.domain.is_prefix_of(x.prefix(c.domain.length())))
      return x.substitute(c.range, c.domain.tail_size());
  }
  throw Error(ErrorKind::InvalidArgument, format_point(x) + " is outside the source of the bisection");
}

Bisection parse_bisection(const Alphabet& a, std::string_view text) {
  std::vector<DoubleCylinder> cells;
  for (auto item : detail::split_braced(text, "bisection")) {
    const auto arrow = item.find("<-");
    if (arrow == std::string_view::npos)
      throw Error(ErrorKind::Parse, "bisection cell needs '<-': '" + std::string(item) + "'");
    cells.push_back({parse_word(a, item.substr(0, arrow)), parse_word(a, item.substr(arrow + 2))});
  }
  return Bisection(a, std::move(cells));
}

std::string format_bisection(const Bisection& u) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : u.cells()) {
    if (!first) out += ",";
    first = false;
    out += format_word(u.alphabet(), c.range) + "<-" + format_word(u.alphabet(), c.domain);
  }
  return out + "}";
}

}  // namespace htg
