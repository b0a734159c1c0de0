#include "triadic/error.hpp"

#include <utility>

namespace triadic {

ParseError::ParseError(std::string const &message, std::string token,
                       std::size_t line, std::size_t column)
  : std::runtime_error(message),
    token_(std::move(token)),
    line_(line),
    column_(column)
{}

} // namespace triadic
