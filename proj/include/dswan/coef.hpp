#pragma once

#include <string>
#include <vector>

#include "dswan/rational.hpp"
#include "dswan/valuation.hpp"

namespace dswan {

/// Element of Q or of Q(pi) with pi^(p-1) = -p, stored as the unique normal
/// form c_0 + c_1 pi + ... + c_{p-2} pi^{p-2}. Trailing zero coordinates are
/// trimmed, so a plain rational has exactly one coordinate. For p = 2,
/// pi = -2 is rational.
class Coef {
 public:
  explicit Coef(unsigned p = 2) : p_(p), c_(1) {}
  Coef(unsigned p, const Rational& q) : p_(p), c_{q} {}
  Coef(unsigned p, long q) : p_(p), c_{Rational(q)} {}

  /// pi itself.
  static Coef pi(unsigned p);
  /// From coordinates c_0..c_k (k may exceed p-2; reduced on construction).
  static Coef from_coords(unsigned p, std::vector<Rational> coords);

  unsigned p() const { return p_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return c_.size() == 1; }
  const std::vector<Rational>& coords() const { return c_; }
  /// Rational part; only meaningful when is_rational().
  const Rational& rational() const { return c_[0]; }

  Coef operator-() const;
  Coef& operator+=(const Coef& o);
  Coef& operator-=(const Coef& o);
  Coef& operator*=(const Coef& o);
  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(Coef a, const Coef& b) { return a *= b; }
  friend bool operator==(const Coef& a, const Coef& b);

  /// Multiplicative inverse in Q(pi); throws PreconditionError on zero.
  Coef inverse() const;

  /// Serialization accepted back by the expression parser: "3", "-5/2",
  /// "pi", "(1+2*pi)".
  std::string to_string() const;

 private:
  void normalize();

  unsigned p_;
  std::vector<Rational> c_;
};

/// min_j (v_p(c_j) + j/(p-1)); +infinity iff c = 0.
Valuation val_coef(const Coef& c);

}  // namespace dswan
