#include "dswan/context.hpp"

#include "dswan/error.hpp"

namespace dswan {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string Context::axis_name(unsigned axis) const {
  if (axis == n) return "t";
  return "u" + std::to_string(axis + 1);
}

void Context::validate() const {
  if (!is_prime(p))
    throw PreconditionError("p = " + std::to_string(p) + " is not prime");
}

}  // namespace dswan
