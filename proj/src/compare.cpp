#include "diffca/compare.hpp"

#include <algorithm>

#include "diffca/error.hpp"

namespace diffca {

std::optional<std::size_t> impulse_index(std::span<const Cell> row) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (row[i] != 1 || found) return std::nullopt;
    found = i;
  }
  return found;
}

std::optional<std::size_t> ConeAlignment::eca_column(std::size_t t,
                                                     std::size_t i) const {
  if (i > impulse || impulse - i > t) return std::nullopt;
  const std::size_t back = 2 * (impulse - i);
  if (eca_center + t < back) return std::nullopt;
  return eca_center + t - back;
}

ConeAgreement cone_agreement(const HighlightMask& mask, const EcaDiagram& d,
                             const ConeAlignment& align) {
  ConeAgreement out;
  const std::size_t rows = std::min(mask.height(), d.rows.size());
  for (std::size_t t = 0; t < rows; ++t) {
    const std::size_t lo = align.impulse >= t ? align.impulse - t : 0;
    const std::size_t hi = std::min(align.impulse + 1, mask[t].size());
    for (std::size_t i = lo; i < hi; ++i) {
      const auto col = align.eca_column(t, i);
      if (!col || *col >= d.rows[t].size()) continue;
      ++out.total;
      if (mask[t][i] == (d.rows[t][*col] != 0)) ++out.matching;
    }
  }
  return out;
}

ComparisonSetup comparison_setup(std::span<const Cell> pyramid_input) {
  if (pyramid_input.empty()) {
    throw Error(Errc::invalid_argument, "comparison needs a nonempty input");
  }
  const std::size_t n = pyramid_input.size();
  ComparisonSetup s;
  s.generations = n - 1;
  s.initial = impulse_row(2 * (n - 1) + 1);
  s.alignment.eca_center = n - 1;
  s.alignment.impulse = impulse_index(pyramid_input).value_or(n / 2);
  return s;
}

}  // namespace diffca
