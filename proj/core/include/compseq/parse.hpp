#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "compseq/poly.hpp"

namespace compseq {

enum class ParseErrorKind {
  UnexpectedToken,
  UnbalancedParen,
  NonConstantBinomialIndex,
  NonIntegerExponent,
  DivisionByZero,
  NonConstantDivisor,
  VariableNotJ,
  // Degree or coefficient size beyond what the parser will expand.
  SizeLimit,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  /// Byte offset into the input, in [0, input length].
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
  std::string message_;
};

/// Parses a polynomial expression in the variable j.
///
///   expr   := term { ("+"|"-") term }
///   term   := factor { ("*"|"/") factor }
///   factor := atom [ "^" uint ]
///   atom   := uint | "j" | "binomial" "(" expr "," expr ")" | "(" expr ")" | "-" atom
///
/// Whitespace is insignificant. Throws ParseError; never crashes on any input.
Polynomial parse_poly(std::string_view text);

/// Canonical text: descending powers, exact rationals "a/b", explicit "*"
/// and "^", e.g. "1/2*j^2 + 3/2*j + 1". With the default variable the
/// result parses back to the same polynomial.
std::string render_poly(const Polynomial& p, std::string_view var = "j");

}  // namespace compseq
