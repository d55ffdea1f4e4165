#include "diffca/engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "diffca/error.hpp"

namespace diffca {

namespace {

inline Cell abs_diff(Cell a, Cell b) noexcept { return a > b ? a - b : b - a; }

}  // namespace

Pyramid::Pyramid(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw Error(Errc::invalid_argument, "pyramid needs a nonempty first row");
  }
  const std::size_t n = rows_.front().size();
  if (rows_.size() > n) {
    throw Error(Errc::invalid_argument, "pyramid has more rows than cells");
  }
  for (std::size_t t = 1; t < rows_.size(); ++t) {
    if (rows_[t].size() != n - t) {
      throw Error(Errc::invalid_argument,
                  "pyramid row " + std::to_string(t) + " has wrong length");
    }
    if (rows_[t] != step(rows_[t - 1])) {
      throw Error(Errc::invalid_argument,
                  "pyramid row " + std::to_string(t) +
                      " does not follow from the row above");
    }
  }
}

Row step(std::span<const Cell> row) {
  if (row.size() < 2) {
    throw Error(Errc::row_too_short,
                "step needs at least 2 cells, got " + std::to_string(row.size()));
  }
  Row out(row.size() - 1);
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    out[i] = abs_diff(row[i], row[i + 1]);
  }
  return out;
}

Pyramid evolve(std::span<const Cell> input,
               std::optional<std::size_t> max_generations) {
  if (input.empty()) {
    throw Error(Errc::invalid_argument, "cannot evolve an empty row");
  }
  std::size_t steps = input.size() - 1;
  if (max_generations) steps = std::min(steps, *max_generations);

  std::vector<Row> rows;
  rows.reserve(steps + 1);
  rows.emplace_back(input.begin(), input.end());
  for (std::size_t t = 0; t < steps; ++t) {
    rows.push_back(step(rows.back()));
  }
  return Pyramid(std::move(rows), Pyramid::Unchecked{});
}

InputExpression make_symmetric(const InputExpression& p) {
  InputExpression out{p.terms, p.source_text};
  out.terms.insert(out.terms.end(), p.terms.rbegin(), p.terms.rend());
  return out;
}

InputExpression reverse_input(const InputExpression& p) {
  return {Row(p.terms.rbegin(), p.terms.rend()), p.source_text};
}

Cell max_state(std::span<const Cell> row) {
  if (row.empty()) {
    throw Error(Errc::invalid_argument, "max_state of an empty row");
  }
  return *std::max_element(row.begin(), row.end());
}

int pascal_mod2(std::size_t t, std::size_t i) {
  if (i > t) {
    throw Error(Errc::index_out_of_range,
                "cell " + std::to_string(i) + " outside generation " +
                    std::to_string(t));
  }
  // Lucas: C(t, i) is odd iff adding i and t - i produces no carries.
  return (i & (t - i)) == 0 ? 1 : 0;
}

bool is_palindrome(std::span<const Cell> row) noexcept {
  return std::equal(row.begin(), row.begin() + row.size() / 2, row.rbegin());
}

}  // namespace diffca
