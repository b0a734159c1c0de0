#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triadic {

/// Malformed chord name, triple literal, word or progression text.
///
/// `line` and `column` are 1-based; both are 0 when the error is not tied
/// to a position in a multi-line input.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &message, std::string token,
             std::size_t line = 0, std::size_t column = 0);

  std::string const &token() const noexcept { return token_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::string token_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace triadic
