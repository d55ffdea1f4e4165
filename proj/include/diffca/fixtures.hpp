#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "diffca/types.hpp"

namespace diffca {

struct FixtureInfo {
  std::string_view id;
  std::string_view expression;
};

// Compiled-in inputs: default-p, a1, a2, p1, p1-new.
std::span<const FixtureInfo> fixtures() noexcept;

// Throws Error(unknown_fixture) for ids not listed by fixtures().
InputExpression load_fixture(std::string_view id);

// The published iteration table for default-p, one row per generation.
std::vector<Row> figure2_rows();

}  // namespace diffca
