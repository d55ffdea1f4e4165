#include "diffca/pattern.hpp"

#include <algorithm>
#include <functional>

#include "diffca/error.hpp"

namespace diffca {

Pattern::Pattern(Row values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(Errc::empty_expression, "pattern must not be empty");
  }
}

bool HighlightMask::congruent_to(const Pyramid& p) const noexcept {
  if (rows_.size() != p.height()) return false;
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    if (rows_[t].size() != p[t].size()) return false;
  }
  return true;
}

std::vector<bool> match_row(std::span<const Cell> row, const Pattern& s) {
  const auto needle = s.values();
  std::vector<bool> out(row.size(), false);
  if (needle.size() > row.size()) return out;

  const std::boyer_moore_horspool_searcher searcher(needle.begin(),
                                                    needle.end());
  // Cells [covered_to, hit + len) still need marking; restart the search
  // one past each hit so overlapping occurrences are found.
  std::size_t covered_to = 0;
  auto from = row.begin();
  while (true) {
    const auto [first, last] = searcher(from, row.end());
    if (first == row.end()) break;
    const auto lo = static_cast<std::size_t>(first - row.begin());
    const auto hi = static_cast<std::size_t>(last - row.begin());
    for (std::size_t i = std::max(lo, covered_to); i < hi; ++i) out[i] = true;
    covered_to = hi;
    from = first + 1;
  }
  return out;
}

HighlightMask highlight_pyramid(const Pyramid& p, const Pattern& s) {
  std::vector<std::vector<bool>> rows;
  rows.reserve(p.height());
  for (const Row& r : p) rows.push_back(match_row(r, s));
  return HighlightMask(std::move(rows));
}

}  // namespace diffca
