#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "diffca/eca.hpp"
#include "diffca/pattern.hpp"
#include "diffca/types.hpp"

namespace diffca {

/// Index of the only nonzero cell when the row is zeros with a single 1.
std::optional<std::size_t> impulse_index(std::span<const Cell> row);

/// Places pyramid cell (t, i) over ECA cell (t, center + t - 2 * (impulse - i)).
///
/// A pyramid row is drawn t half-cells to the right, so at twice the
/// horizontal resolution its cells land on every other ECA column, centered
/// on the impulse. Only cells with impulse - t <= i <= impulse (the light
/// cone) are mapped.
struct ConeAlignment {
  std::size_t impulse = 0;
  std::size_t eca_center = 0;

  std::optional<std::size_t> eca_column(std::size_t t, std::size_t i) const;
};

struct ConeAgreement {
  std::size_t matching = 0;
  std::size_t total = 0;

  double ratio() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(matching) / total;
  }
};

/// Counts in-cone mask cells equal to their aligned ECA cell. Mask cells
/// whose ECA partner falls outside the diagram are left out.
ConeAgreement cone_agreement(const HighlightMask& mask, const EcaDiagram& d,
                             const ConeAlignment& align);

/// ECA geometry used for comparisons: the impulse seed sits in the middle
/// of a row wide enough that nothing reaches the boundary within
/// `generations` steps.
struct ComparisonSetup {
  Row initial;
  std::size_t generations = 0;
  ConeAlignment alignment;
};

/// For a pyramid input of n cells: n - 1 generations, width 2(n - 1) + 1.
/// The alignment's impulse is taken from the input when it is an impulse.
ComparisonSetup comparison_setup(std::span<const Cell> pyramid_input);

}  // namespace diffca
