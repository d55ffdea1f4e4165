#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diffca {

enum class Errc {
  row_too_short,
  index_out_of_range,
  empty_expression,
  invalid_character,
  empty_term,
  value_overflow,
  unknown_fixture,
  rule_out_of_range,
  non_binary_cell,
  shape_mismatch,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace diffca
