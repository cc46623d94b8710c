#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "htg/certificate.hpp"

namespace htg {

struct FreePairFixture {
  std::string name;
  Alphabet alphabet;  // (d, d): the pair lives in V_{d,d}
  SymmetricSet set;   // {a, a^-1, b, b^-1}
  PingPongCertificate certificate;
};

// A ping-pong pair in V_{2,2}. Each generator pushes the complement of one
// depth-3 cylinder into another:
//   a: X \ 1:12 -> 1:11,   a^-1: X \ 1:11 -> 1:12
//   b: X \ 2:12 -> 2:11,   b^-1: X \ 2:11 -> 2:12
FreePairFixture fixture_free2();

std::optional<FreePairFixture> find_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace htg
