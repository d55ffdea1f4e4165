#include "diffca/eca.hpp"

#include <algorithm>
#include <string>

#include "diffca/error.hpp"

namespace diffca {

EcaRule::EcaRule(int number) : number_(number) {
  if (number < 0 || number > 255) {
    throw Error(Errc::rule_out_of_range,
                "rule " + std::to_string(number) + " outside 0..255");
  }
  for (int k = 0; k < 8; ++k) {
    table_[k] = static_cast<std::uint8_t>((number >> k) & 1);
  }
}

namespace {

void check_binary(std::span<const Cell> row) {
  if (row.empty()) {
    throw Error(Errc::invalid_argument, "ECA row must not be empty");
  }
  const auto bad = std::find_if(row.begin(), row.end(),
                                [](Cell c) { return c > 1; });
  if (bad != row.end()) {
    throw Error(Errc::non_binary_cell,
                "cell " + std::to_string(bad - row.begin()) + " holds " +
                    std::to_string(*bad));
  }
}

}  // namespace

Row eca_step(std::span<const Cell> row, const EcaRule& rule,
             Boundary boundary) {
  check_binary(row);

  const std::size_t w = row.size();
  const bool wrap = boundary == Boundary::periodic;
  auto at = [&](std::size_t i, int offset) -> std::uint8_t {
    if (offset < 0 && i == 0) return wrap ? static_cast<std::uint8_t>(row[w - 1]) : 0;
    if (offset > 0 && i == w - 1) return wrap ? static_cast<std::uint8_t>(row[0]) : 0;
    return static_cast<std::uint8_t>(row[i + offset]);
  };

  Row out(w);
  for (std::size_t i = 0; i < w; ++i) {
    out[i] = rule.apply(at(i, -1), at(i, 0), at(i, 1));
  }
  return out;
}

EcaDiagram eca_evolve(std::span<const Cell> initial, const EcaRule& rule,
                      std::size_t generations, Boundary boundary) {
  check_binary(initial);
  EcaDiagram d;
  d.boundary = boundary;
  d.rows.reserve(generations + 1);
  d.rows.emplace_back(initial.begin(), initial.end());
  for (std::size_t t = 0; t < generations; ++t) {
    d.rows.push_back(eca_step(d.rows.back(), rule, boundary));
  }
  return d;
}

Row impulse_row(std::size_t width) {
  if (width == 0) {
    throw Error(Errc::invalid_argument, "impulse row needs width >= 1");
  }
  Row r(width, 0);
  r[width / 2] = 1;
  return r;
}

}  // namespace diffca
