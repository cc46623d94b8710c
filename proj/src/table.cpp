#include "htg/table.hpp"

#include <algorithm>

#include "htg/error.hpp"
#include "text.hpp"

namespace htg {

namespace {

bool by_domain(const Block& a, const Block& b) { return a.domain < b.domain; }

std::string word_list(const Alphabet& a, std::span<const Word> ws) {
  std::string s;
  for (const auto& w : ws) {
    if (!s.empty()) s += ", ";
    s += format_word(a, w);
  }
  return s;
}

void check_prefix_code(const Alphabet& a, std::vector<Word> words, bool domain_side) {
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (words[i].is_prefix_of(words[i + 1]))
      throw Error(domain_side ? ErrorKind::OverlappingDomain : ErrorKind::OverlappingRange,
                  format_word(a, words[i]) + " overlaps " + format_word(a, words[i + 1]));
  }
  const Clopen covered = clopen_normalize(a, std::move(words));
  if (!covered.is_whole()) {
    const Clopen missing = complement(covered);
    throw Error(domain_side ? ErrorKind::IncompleteDomain : ErrorKind::IncompleteRange,
                "uncovered: " + word_list(a, missing.prefixes()));
  }
}

}  // namespace

std::vector<Block> reduce(const Alphabet& a, std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), by_domain);
  const std::size_t d = static_cast<std::size_t>(a.d);
  std::vector<Block> acc;
  acc.reserve(blocks.size());
  for (auto& b : blocks) {
    acc.push_back(std::move(b));
    while (acc.size() >= d) {
      const Block& top = acc.back();
      if (top.domain.tail_size() == 0 || top.range.tail_size() == 0) break;
      if (top.domain.last() != a.d || top.range.last() != a.d) break;
      const Word dom_parent = top.domain.parent();
      const Word ran_parent = top.range.parent();
      bool family = true;
      for (std::size_t i = 0; i < d && family; ++i) {
        const Block& s = acc[acc.size() - d + i];
        const auto c = static_cast<Letter>(i + 1);
        family = s.domain == dom_parent.child(c) && s.range == ran_parent.child(c);
      }
      if (!family) break;
      acc.resize(acc.size() - d);
      acc.push_back(Block{dom_parent, ran_parent});
    }
  }
  if (a.k == 1 && acc.size() == 1) {
    // Only the identity reduces to the root block; keep it split one level.
    const Word root(1);
    acc.clear();
    for (const auto& w : split(a, root)) acc.push_back(Block{w, w});
  }
  return acc;
}

std::vector<Block> refine_block(const Alphabet& a, std::span<const Block> blocks, std::size_t i) {
  std::vector<Block> out;
  out.reserve(blocks.size() + a.d - 1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j != i) {
      out.push_back(blocks[j]);
      continue;
    }
    for (int c = 1; c <= a.d; ++c)
      out.push_back(Block{blocks[j].domain.child(static_cast<Letter>(c)),
                          blocks[j].range.child(static_cast<Letter>(c))});
  }
  return out;
}

TableElement::TableElement(const Alphabet& a) : alphabet_(a) {
  for (int r = 1; r <= a.k; ++r) blocks_.push_back(Block{Word(r), Word(r)});
  blocks_ = reduce(a, std::move(blocks_));
}

TableElement::TableElement(const Alphabet& a, std::vector<Block> canonical)
    : alphabet_(a), blocks_(std::move(canonical)) {}

TableElement TableElement::from_valid_blocks(const Alphabet& a, std::vector<Block> blocks) {
  return TableElement(a, reduce(a, std::move(blocks)));
}

std::size_t TableElement::max_depth() const noexcept {
  std::size_t best = 0;
  for (const auto& b : blocks_) best = std::max(best, b.domain.length());
  return best;
}

std::size_t TableElement::block_of(const Point& x) const {
  require_same(alphabet_, x.alphabet(), "act");
  const Word probe = x.prefix(max_depth());
  for (std::size_t len = 1; len <= probe.length(); ++len) {
    const Block key{probe.prefix(len), Word{}};
    const auto it = std::lower_bound(blocks_.begin(), blocks_.end(), key, by_domain);
    if (it != blocks_.end() && it->domain == key.domain)
      return static_cast<std::size_t>(it - blocks_.begin());
  }
  // Unreachable for a complete prefix code.
  throw Error(ErrorKind::IncompleteDomain, "no block contains " + format_point(x));
}

std::size_t TableHash::operator()(const TableElement& g) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  const std::hash<std::string> hs;
  for (const auto& b : g.blocks()) {
    h ^= hs(b.domain.raw()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= hs(b.range.raw()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

TableElement make_table(const Alphabet& a, std::vector<Block> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::IncompleteDomain, "empty table");
  std::vector<Word> dom, ran;
  for (const auto& b : blocks) {
    if (!b.domain.valid_for(a) || !b.range.valid_for(a))
      throw Error(ErrorKind::MismatchedAlphabet, "word outside alphabet " + to_string(a));
    dom.push_back(b.domain);
    ran.push_back(b.range);
  }
  check_prefix_code(a, std::move(dom), true);
  check_prefix_code(a, std::move(ran), false);
  return TableElement::from_valid_blocks(a, std::move(blocks));
}

TableElement compose(const TableElement& g, const TableElement& h) {
  require_same(g.alphabet(), h.alphabet(), "compose");
  const auto gb = g.blocks();
  std::vector<Block> out;
  out.reserve(g.size() + h.size());
  for (const auto& hb : h.blocks()) {
    const Block key{hb.range, Word{}};
    auto it = std::lower_bound(gb.begin(), gb.end(), key, by_domain);
    if (it != gb.end() && hb.range.is_prefix_of(it->domain)) {
      // h's image block is refined by several g blocks.
      for (; it != gb.end() && hb.range.is_prefix_of(it->domain); ++it) {
        const auto extra = it->domain.tail().substr(hb.range.tail_size());
        out.push_back(Block{hb.domain.extended(extra), it->range});
      }
    } else {
      // A single g block contains h's image block.
      --it;
      const auto extra = hb.range.tail().substr(it->domain.tail_size());
      out.push_back(Block{hb.domain, it->range.extended(extra)});
    }
  }
  return TableElement::from_valid_blocks(g.alphabet(), std::move(out));
}

TableElement inverse(const TableElement& g) {
  std::vector<Block> out;
  out.reserve(g.size());
  for (const auto& b : g.blocks()) out.push_back(Block{b.range, b.domain});
  return TableElement::from_valid_blocks(g.alphabet(), std::move(out));
}

bool is_identity(const TableElement& g) noexcept {
  return std::all_of(g.blocks().begin(), g.blocks().end(),
                     [](const Block& b) { return b.domain == b.range; });
}

Point act_point(const TableElement& g, const Point& x) {
  const Block& b = g.blocks()[g.block_of(x)];
  return x.substitute(b.range, b.domain.tail_size());
}

Clopen act_clopen(const TableElement& g, const Clopen& a) {
  require_same(g.alphabet(), a.alphabet(), "act_clopen");
  const auto gb = g.blocks();
  std::vector<Word> out;
  for (const auto& w : a.prefixes()) {
    const Block key{w, Word{}};
    auto it = std::lower_bound(gb.begin(), gb.end(), key, by_domain);
    if (it != gb.end() && w.is_prefix_of(it->domain)) {
      for (; it != gb.end() && w.is_prefix_of(it->domain); ++it) out.push_back(it->range);
    } else {
      --it;
      out.push_back(it->range.extended(w.tail().substr(it->domain.tail_size())));
    }
  }
  return clopen_normalize(g.alphabet(), std::move(out));
}

Clopen support(const TableElement& g) {
  std::vector<Word> moved;
  for (const auto& b : g.blocks())
    if (b.domain != b.range) moved.push_back(b.domain);
  return clopen_normalize(g.alphabet(), std::move(moved));
}

TableElement transporter(const Alphabet& a, const Word& nu1, const Word& nu2) {
  if (!nu1.valid_for(a) || !nu2.valid_for(a))
    throw Error(ErrorKind::MismatchedAlphabet, "transporter words outside alphabet " + to_string(a));
  const Clopen c1 = complement(Clopen::cylinder(a, nu1));
  const Clopen c2 = complement(Clopen::cylinder(a, nu2));
  std::vector<Word> rest1(c1.prefixes().begin(), c1.prefixes().end());
  std::vector<Word> rest2(c2.prefixes().begin(), c2.prefixes().end());
  if (rest1.empty() != rest2.empty())
    throw Error(ErrorKind::NotTransportable,
                "the whole space cannot be mapped onto a proper cylinder (k = 1)");
  // Both counts are congruent mod d-1, so splitting the last cylinder of the
  // shorter list equalizes them.
  while (rest1.size() != rest2.size()) {
    auto& shorter = rest1.size() < rest2.size() ? rest1 : rest2;
    const Word last = shorter.back();
    shorter.pop_back();
    for (auto& w : split(a, last)) shorter.push_back(std::move(w));
  }
  std::vector<Block> blocks{Block{nu1, nu2}};
  for (std::size_t i = 0; i < rest1.size(); ++i) blocks.push_back(Block{rest1[i], rest2[i]});
  return TableElement::from_valid_blocks(a, std::move(blocks));
}

TableElement embed_supported(const TableElement& g, const Alphabet& target, const Word& nu) {
  const Alphabet& src = g.alphabet();
  if (src.k != src.d || src.d != target.d)
    throw Error(ErrorKind::ArityMismatch, "embedded element must lie in V_{d,d} with d = " +
                                              std::to_string(target.d) + ", got " + to_string(src));
  if (!nu.valid_for(target))
    throw Error(ErrorKind::MismatchedAlphabet, "embedding word outside alphabet " + to_string(target));
  auto lift = [&](const Word& w) {
    std::string t(1, static_cast<char>(w.root()));
    t.append(w.tail());
    return nu.extended(t);
  };
  std::vector<Block> blocks;
  for (const auto& b : g.blocks()) blocks.push_back(Block{lift(b.domain), lift(b.range)});
  const Clopen rest = complement(Clopen::cylinder(target, nu));
  for (const auto& w : rest.prefixes()) blocks.push_back(Block{w, w});
  return TableElement::from_valid_blocks(target, std::move(blocks));
}

TableElement parse_table(const Alphabet& a, std::string_view text) {
  std::vector<Block> blocks;
  for (auto item : detail::split_braced(text, "table")) {
    const auto arrow = item.find("->");
    if (arrow == std::string_view::npos)
      throw Error(ErrorKind::Parse, "table block needs '->': '" + std::string(item) + "'");
    blocks.push_back(Block{parse_word(a, item.substr(0, arrow)), parse_word(a, item.substr(arrow + 2))});
  }
  return make_table(a, std::move(blocks));
}

std::string format_table(const TableElement& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& b : g.blocks()) {
    if (!first) out += ",";
    first = false;
    out += format_word(g.alphabet(), b.domain) + "->" + format_word(g.alphabet(), b.range);
  }
  return out + "}";
}

}  // namespace htg
