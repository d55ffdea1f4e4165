#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diffca/types.hpp"

namespace diffca {

enum class Boundary { zero_padded, periodic };

/// Wolfram-numbered elementary rule. Bit k of the number is the successor
/// of the neighborhood (left, center, right) whose bits spell k.
class EcaRule {
 public:
  /// Throws Error(rule_out_of_range) outside 0..255.
  explicit EcaRule(int number);

  int number() const noexcept { return number_; }
  const std::array<std::uint8_t, 8>& table() const noexcept { return table_; }

  std::uint8_t apply(std::uint8_t left, std::uint8_t center,
                     std::uint8_t right) const noexcept {
    return table_[(left << 2) | (center << 1) | right];
  }

 private:
  int number_;
  std::array<std::uint8_t, 8> table_{};
};

inline EcaRule rule_table(int number) { return EcaRule(number); }

struct EcaDiagram {
  std::vector<Row> rows;
  Boundary boundary = Boundary::zero_padded;

  std::size_t width() const noexcept {
    return rows.empty() ? 0 : rows.front().size();
  }
  std::size_t generations() const noexcept {
    return rows.empty() ? 0 : rows.size() - 1;
  }

  friend bool operator==(const EcaDiagram&, const EcaDiagram&) = default;
};

/// Same-width successor row. Throws non_binary_cell if any cell is not 0/1
/// and invalid_argument for an empty row.
Row eca_step(std::span<const Cell> row, const EcaRule& rule,
             Boundary boundary = Boundary::zero_padded);

/// generations + 1 rows; rows[0] is the initial row.
EcaDiagram eca_evolve(std::span<const Cell> initial, const EcaRule& rule,
                      std::size_t generations,
                      Boundary boundary = Boundary::zero_padded);

/// Zeros of the given width with a single 1 in the middle cell.
Row impulse_row(std::size_t width);

}  // namespace diffca
