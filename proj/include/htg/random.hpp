#pragma once

// Random generators for property checks.

#include <cstddef>
#include <random>
#include <vector>

#include "htg/cantor.hpp"
#include "htg/table.hpp"

namespace htg::random {

using Rng = std::mt19937_64;

Word word(Rng& rng, const Alphabet& a, std::size_t max_tail);
Letters letters(Rng& rng, const Alphabet& a, std::size_t min_len, std::size_t max_len);
Point point(Rng& rng, const Alphabet& a, std::size_t max_pre = 4, std::size_t max_period = 3);
Clopen clopen(Rng& rng, const Alphabet& a, std::size_t max_words = 5, std::size_t max_tail = 4);

// A complete prefix code obtained from the root family by `splits` random
// leaf splits; it has k + splits (d - 1) words.
std::vector<Word> prefix_code(Rng& rng, const Alphabet& a, std::size_t splits);

// A table element built from two random codes with `splits` splits each and
// a random bijection between them.
TableElement table(Rng& rng, const Alphabet& a, std::size_t max_splits = 5);

}  // namespace htg::random
