#include "htg/random.hpp"

#include <algorithm>

namespace htg::random {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Letters letters(Rng& rng, const Alphabet& a, std::size_t min_len, std::size_t max_len) {
  Letters out(uniform(rng, min_len, max_len), '\0');
  for (auto& c : out) c = static_cast<char>(uniform(rng, 1, a.d));
  return out;
}

Word word(Rng& rng, const Alphabet& a, std::size_t max_tail) {
  return Word(static_cast<int>(uniform(rng, 1, a.k)), letters(rng, a, 0, max_tail));
}

Point point(Rng& rng, const Alphabet& a, std::size_t max_pre, std::size_t max_period) {
  return Point(a, word(rng, a, max_pre), letters(rng, a, 1, max_period));
}

Clopen clopen(Rng& rng, const Alphabet& a, std::size_t max_words, std::size_t max_tail) {
  std::vector<Word> ws(uniform(rng, 0, max_words));
  for (auto& w : ws) w = word(rng, a, max_tail);
  return clopen_normalize(a, std::move(ws));
}

std::vector<Word> prefix_code(Rng& rng, const Alphabet& a, std::size_t splits) {
  std::vector<Word> code;
  for (int r = 1; r <= a.k; ++r) code.emplace_back(r);
  for (std::size_t i = 0; i < splits; ++i) {
    const std::size_t at = uniform(rng, 0, code.size() - 1);
    const Word leaf = code[at];
    code.erase(code.begin() + static_cast<std::ptrdiff_t>(at));
    for (auto& c : split(a, leaf)) code.push_back(std::move(c));
  }
  return code;
}

TableElement table(Rng& rng, const Alphabet& a, std::size_t max_splits) {
  const std::size_t splits = uniform(rng, 0, max_splits);
  auto dom = prefix_code(rng, a, splits);
  auto ran = prefix_code(rng, a, splits);
  std::shuffle(ran.begin(), ran.end(), rng);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < dom.size(); ++i) blocks.push_back(Block{dom[i], ran[i]});
  return TableElement::from_valid_blocks(a, std::move(blocks));
}

}  // namespace htg::random
