#include "htg/fixtures.hpp"

namespace htg {

FreePairFixture fixture_free2() {
  const Alphabet v22(2, 2);
  const TableElement a = parse_table(
      v22, "{1:11->1:111, 1:121->1:12, 1:1221->1:2, 1:1222->2:, 1:2->1:1121, 2:->1:1122}");
  const TableElement b = parse_table(
      v22, "{2:11->2:111, 2:121->2:12, 2:1221->2:2, 2:1222->1:, 2:2->2:1121, 1:->2:1122}");
  const TableElement gens[] = {a, b};
  return FreePairFixture{
      "free2",
      v22,
      make_symmetric_set(gens),
      PingPongCertificate{a, b, parse_clopen(v22, "{1:11}"), parse_clopen(v22, "{1:12}"),
                          parse_clopen(v22, "{2:11}"), parse_clopen(v22, "{2:12}")},
  };
}

std::optional<FreePairFixture> find_fixture(std::string_view name) {
  if (name == "free2") return fixture_free2();
  return std::nullopt;
}

std::vector<std::string> fixture_names() { return {"free2"}; }

}  // namespace htg
