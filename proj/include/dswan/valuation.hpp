#pragma once

#include <compare>
#include <optional>
#include <string>

#include "dswan/rational.hpp"

namespace dswan {

/// A rational number or +infinity, measured in log base p of the reciprocal
/// norm: |x| = p^(-v).
class Valuation {
 public:
  /// +infinity, the valuation of zero.
  Valuation() = default;
  Valuation(const Rational& v) : value_(v) {}  // NOLINT: implicit on purpose
  Valuation(long v) : value_(Rational(v)) {}    // NOLINT

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error on +infinity.
  const Rational& value() const;

  std::string to_string() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  std::optional<Rational> value_;
};

inline Valuation min(const Valuation& a, const Valuation& b) {
  return b < a ? b : a;
}

}  // namespace dswan
