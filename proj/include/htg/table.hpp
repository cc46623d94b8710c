#pragma once

// Elements of the Higman-Thompson group V_{d,k} as bijections between two
// complete prefix codes, acting on X_{d,k} by prefix substitution
// mu_i w -> nu_i w.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htg/cantor.hpp"

namespace htg {

struct Block {
  Word domain;
  Word range;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

// Always held in canonical form: fully reduced, blocks sorted by domain.
//
// For k = 1 the identity is the only element whose reduced table would be
// the single root block; it is stored split one level instead, so every
// canonical table has at least d blocks when k = 1 and word lengths >= 2.
class TableElement {
 public:
  explicit TableElement(const Alphabet& a);  // identity

  // Skips prefix-code validation. The caller guarantees both sides are
  // complete prefix codes; the blocks are sorted and reduced here.
  static TableElement from_valid_blocks(const Alphabet& a, std::vector<Block> blocks);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Block> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t max_depth() const noexcept;

  // Index of the block whose domain word is a prefix of x.
  std::size_t block_of(const Point& x) const;

  friend bool operator==(const TableElement& a, const TableElement& b) noexcept {
    return a.alphabet_ == b.alphabet_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const TableElement& a, const TableElement& b) noexcept {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  TableElement(const Alphabet& a, std::vector<Block> canonical);
  Alphabet alphabet_;
  std::vector<Block> blocks_;
};

struct TableHash {
  std::size_t operator()(const TableElement& g) const noexcept;
};

// Validates both prefix-code conditions and returns the canonical element.
// Throws OverlappingDomain, IncompleteDomain, OverlappingRange,
// IncompleteRange or MismatchedAlphabet.
TableElement make_table(const Alphabet& a, std::vector<Block> blocks);

// Canonical tree-pair reduction of a valid block list (any order): merges
// every domain family w1..wd mapped onto v1..vd in matching order into w -> v.
std::vector<Block> reduce(const Alphabet& a, std::vector<Block> blocks);

// Refines block i into its d children; the result denotes the same element.
std::vector<Block> refine_block(const Alphabet& a, std::span<const Block> blocks, std::size_t i);

// (g . h)(x) = g(h(x)).
TableElement compose(const TableElement& g, const TableElement& h);
TableElement inverse(const TableElement& g);
bool is_identity(const TableElement& g) noexcept;
inline bool equals(const TableElement& g, const TableElement& h) { return g == h; }

Point act_point(const TableElement& g, const Point& x);
Clopen act_clopen(const TableElement& g, const Clopen& a);

// Union of the domain cylinders whose block is not the identity on words.
Clopen support(const TableElement& g);

// An element mapping the cylinder of nu1 onto the cylinder of nu2. Throws
// NotTransportable only for k = 1 when exactly one word is the root word.
TableElement transporter(const Alphabet& a, const Word& nu1, const Word& nu2);

// Copies g in V_{d,d} onto the cylinder of nu in X_{d,k}, acting trivially
// elsewhere; the root letter r of X_{d,d} becomes the tail letter after nu.
// Throws ArityMismatch unless g's alphabet is (d, d).
TableElement embed_supported(const TableElement& g, const Alphabet& target, const Word& nu);

// `{mu1->nu1,mu2->nu2,...}`; the parser accepts any block order and
// unreduced tables.
TableElement parse_table(const Alphabet& a, std::string_view text);
std::string format_table(const TableElement& g);

}  // namespace htg
