#include "diffca/expression.hpp"

#include <limits>

#include "diffca/error.hpp"

namespace diffca {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view strip_brackets(std::string_view s) {
  if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') ||
                        (s.front() == '(' && s.back() == ')'))) {
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(Errc code, std::string_view what, std::size_t pos) {
  throw Error(code, std::string(what) + " at offset " + std::to_string(pos));
}

}  // namespace

InputExpression parse_expression(std::string_view text) {
  const std::string_view body = strip_brackets(trim(text));
  if (body.empty()) {
    throw Error(Errc::empty_expression, "expression has no terms");
  }

  InputExpression out;
  out.source_text = std::string(text);

  constexpr Cell kMax = std::numeric_limits<Cell>::max();
  Cell value = 0;
  bool in_term = false;
  for (std::size_t pos = 0; pos < body.size(); ++pos) {
    const char c = body[pos];
    if (is_digit(c)) {
      const Cell d = static_cast<Cell>(c - '0');
      if (value > (kMax - d) / 10) {
        fail(Errc::value_overflow, "term does not fit in 64 bits", pos);
      }
      value = value * 10 + d;
      in_term = true;
    } else if (c == '-') {
      if (!in_term) fail(Errc::empty_term, "missing term before '-'", pos);
      out.terms.push_back(value);
      value = 0;
      in_term = false;
    } else {
      fail(Errc::invalid_character, "unexpected character", pos);
    }
  }
  if (in_term) out.terms.push_back(value);
  return out;
}

std::string serialize_expression(std::span<const Cell> terms) {
  if (terms.empty()) {
    throw Error(Errc::empty_expression, "cannot serialize an empty expression");
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(terms[i]);
  }
  return out;
}

}  // namespace diffca
