#include "diffca/error.hpp"

namespace diffca {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::row_too_short: return "RowTooShort";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::empty_expression: return "EmptyExpression";
    case Errc::invalid_character: return "InvalidCharacter";
    case Errc::empty_term: return "EmptyTerm";
    case Errc::value_overflow: return "ValueOverflow";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::rule_out_of_range: return "OutOfRange";
    case Errc::non_binary_cell: return "NonBinaryCell";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace diffca
