#pragma once

// Small parsing helpers shared by the text formats.

#include <string>
#include <string_view>
#include <vector>

#include "htg/error.hpp"

namespace htg::detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Strips the surrounding braces of `{a, b, ...}` and splits on top-level
// commas. Commas nested inside parentheses are kept.
inline std::vector<std::string_view> split_braced(std::string_view text,
                                                  std::string_view what) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error(ErrorKind::Parse, std::string(what) + " must be enclosed in braces: '" +
                                      std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<std::string_view> items;
  if (text.empty()) return items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto item = trim(text.substr(start, i - start));
      if (item.empty())
        throw Error(ErrorKind::Parse, "empty item in " + std::string(what));
      items.push_back(item);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return items;
}

}  // namespace htg::detail
