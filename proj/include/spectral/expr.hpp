#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spectral/int_poly.hpp"
#include "spectral/scalar.hpp"

namespace spectral {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | primary
//   primary := number | 'sqrt' '(' expr ')' | '(' expr ')'
//            | 'root' '(' poly ',' '[' signed ',' signed ']' ')'
//   number  := digits ('.' digits)?
// Decimals are read exactly. Values must stay within one quadratic field.
Scalar parse_scalar(std::string_view text);

// Polynomial in x, e.g. "x^3+2x^2-4x-6" or "23*x^2 + 45*x - 185".
IntPoly parse_poly(std::string_view text);

}  // namespace spectral
