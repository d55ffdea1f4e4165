#include "diffca/fixtures.hpp"

#include <algorithm>
#include <array>

#include "diffca/error.hpp"
#include "diffca/expression.hpp"

namespace diffca {

namespace {

// Transcribed verbatim, including the trailing '-' of the appendix rows.
constexpr std::array<FixtureInfo, 5> kFixtures{{
    {"default-p", "2-0-1-7-0-4-7-8-9-0-9-8-7-4-0-7-1-0-2"},
    {"a1",
      "0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-"
      "0-0-0-0-0-0-0-0-0-0-0-0-0-0-1-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-"
      "0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-0-"},
    {"a2",
      "9-9-1-0-5-0-9-8-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-7-8-"
      "9-7-8-9-7-8-9-7-8-9-7-8-9-4-5-1-7-8-9-7-8-9-7-8-9-7-8-9-7-8-9-"},
    {"p1", "2-0-1-7-2-0-1-8"},
    {"p1-new", "2-0-1-7-2-0-1-8-8-1-0-2-7-1-0-2"},
}};

constexpr std::array<std::string_view, 19> kFigure2{{
    "2-0-1-7-0-4-7-8-9-0-9-8-7-4-0-7-1-0-2",
    "2-1-6-7-4-3-1-1-9-9-1-1-3-4-7-6-1-2",
    "1-5-1-3-1-2-0-8-0-8-0-2-1-3-1-5-1",
    "4-4-2-2-1-2-8-8-8-8-2-1-2-2-4-4",
    "0-2-0-1-1-6-0-0-0-6-1-1-0-2-0",
    "2-2-1-0-5-6-0-0-6-5-0-1-2-2",
    "0-1-1-5-1-6-0-6-1-5-1-1-0",
    "1-0-4-4-5-6-6-5-4-4-0-1",
    "1-4-0-1-1-0-1-1-0-4-1",
    "3-4-1-0-1-1-0-1-4-3",
    "1-3-1-1-0-1-1-3-1",
    "2-2-0-1-1-0-2-2",
    "0-2-1-0-1-2-0",
    "2-1-1-1-1-2",
    "1-0-0-0-1",
    "1-0-0-1",
    "1-0-1",
    "1-1",
    "0",
}};

}  // namespace

std::span<const FixtureInfo> fixtures() noexcept { return kFixtures; }

InputExpression load_fixture(std::string_view id) {
  const auto it = std::find_if(kFixtures.begin(), kFixtures.end(),
                               [&](const FixtureInfo& f) { return f.id == id; });
  if (it == kFixtures.end()) {
    throw Error(Errc::unknown_fixture,
                "unknown fixture '" + std::string(id) + "'");
  }
  return parse_expression(it->expression);
}

std::vector<Row> figure2_rows() {
  std::vector<Row> rows;
  rows.reserve(kFigure2.size());
  for (std::string_view line : kFigure2) {
    rows.push_back(parse_expression(line).terms);
  }
  return rows;
}

}  // namespace diffca
