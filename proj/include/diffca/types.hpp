#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace diffca {

// A cell holds a natural number. Evolution never raises the row maximum,
// so anything that parses fits for the lifetime of the pyramid.
using Cell = std::uint64_t;

// One time slice. Functions taking a Row validate that it is nonempty.
using Row = std::vector<Cell>;

struct InputExpression {
  Row terms;
  std::string source_text;

  friend bool operator==(const InputExpression& a, const InputExpression& b) {
    return a.terms == b.terms;
  }
};

}  // namespace diffca
