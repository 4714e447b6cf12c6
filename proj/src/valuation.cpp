#include "dswan/valuation.hpp"

#include <stdexcept>

namespace dswan {

const Rational& Valuation::value() const {
  if (!value_) throw std::logic_error("value() of infinite valuation");
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? value_->get_str() : std::string("inf");
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite())
    return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite())
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

}  // namespace dswan
