#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "diffca/types.hpp"

namespace diffca {

/// Space-time evolution of a row under the absolute-difference rule.
///
/// Row t has length width() - t. A full pyramid ends with a single cell;
/// a pyramid built with a generation cap may stop earlier.
class Pyramid {
 public:
  /// Checks the shape and the transition invariant between every pair of
  /// consecutive rows; throws Error(invalid_argument) otherwise.
  explicit Pyramid(std::vector<Row> rows);

  std::size_t width() const noexcept { return rows_.front().size(); }
  std::size_t height() const noexcept { return rows_.size(); }
  bool complete() const noexcept { return rows_.back().size() == 1; }

  const Row& operator[](std::size_t t) const { return rows_[t]; }
  const Row& row(std::size_t t) const { return rows_.at(t); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  auto begin() const noexcept { return rows_.begin(); }
  auto end() const noexcept { return rows_.end(); }

  friend bool operator==(const Pyramid&, const Pyramid&) = default;

 private:
  struct Unchecked {};
  Pyramid(std::vector<Row> rows, Unchecked) : rows_(std::move(rows)) {}

  std::vector<Row> rows_;

  friend Pyramid evolve(std::span<const Cell>, std::optional<std::size_t>);
};

/// One generation: out[i] = |row[i] - row[i+1]|. Throws row_too_short for
/// rows with fewer than two cells.
Row step(std::span<const Cell> row);

/// Runs the rule down to the single-cell row, or stops after
/// `max_generations` steps when a cap is given. The input is generation 0.
Pyramid evolve(std::span<const Cell> input,
               std::optional<std::size_t> max_generations = std::nullopt);

/// P followed by its reversal.
InputExpression make_symmetric(const InputExpression& p);

InputExpression reverse_input(const InputExpression& p);

Cell max_state(std::span<const Cell> row);

/// binomial(t, i) mod 2, via (i & (t - i)) == 0. Throws index_out_of_range
/// when i > t.
int pascal_mod2(std::size_t t, std::size_t i);

bool is_palindrome(std::span<const Cell> row) noexcept;

}  // namespace diffca
