#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diffca/engine.hpp"
#include "diffca/types.hpp"

namespace diffca {

/// A nonempty run of cell values to highlight.
class Pattern {
 public:
  /// Throws Error(empty_expression) for an empty sequence.
  explicit Pattern(Row values);

  std::span<const Cell> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  Row values_;
};

/// Boolean lattice with the same shape as some pyramid.
class HighlightMask {
 public:
  HighlightMask() = default;
  explicit HighlightMask(std::vector<std::vector<bool>> rows)
      : rows_(std::move(rows)) {}

  std::size_t height() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept {
    return rows_.empty() ? 0 : rows_.front().size();
  }
  const std::vector<bool>& operator[](std::size_t t) const { return rows_[t]; }
  const std::vector<std::vector<bool>>& rows() const noexcept { return rows_; }

  bool congruent_to(const Pyramid& p) const noexcept;

  friend bool operator==(const HighlightMask&, const HighlightMask&) = default;

 private:
  std::vector<std::vector<bool>> rows_;
};

/// out[i] is true iff cell i lies inside some contiguous occurrence of the
/// pattern. Overlapping occurrences all count.
std::vector<bool> match_row(std::span<const Cell> row, const Pattern& s);

HighlightMask highlight_pyramid(const Pyramid& p, const Pattern& s);

}  // namespace diffca
