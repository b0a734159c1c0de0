#include "triadic/pitch_space.hpp"

namespace triadic {

std::string TIElement::to_string() const
{
  return (is_inversion() ? "I_" : "T_") + std::to_string(index());
}

} // namespace triadic
