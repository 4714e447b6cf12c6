#pragma once

#include <string>
#include <vector>

#include "dswan/laurent.hpp"

namespace dswan {

/// Formal quotient num/den of Laurent polynomials. Kept in a light normal
/// form (monomial denominators folded in, exact quotients taken, denominator
/// leading coefficient 1) without full gcd reduction; equality is
/// cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Context& ctx);
  RatFunc(const LaurentPoly& num);  // NOLINT: polynomials embed implicitly
  RatFunc(LaurentPoly num, LaurentPoly den);
  RatFunc(const Context& ctx, long c);

  const Context& context() const { return num_.context(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  RatFunc pow(int k) const;

  /// Quotient rule.
  RatFunc partial(unsigned axis) const;

  /// gauss_val(num) - gauss_val(den).
  Valuation gauss_val(const Rational& r) const;

  /// Substitutes images[k] for the k-th coordinate (u_1..u_n, t); images live
  /// in a common target context. Throws PreconditionError when the
  /// substituted denominator vanishes.
  RatFunc substitute(const std::vector<RatFunc>& images) const;

  /// "num" or "(num)/(den)"; parseable by parse_expr.
  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Substitution into a Laurent polynomial (negative powers invert images).
RatFunc substitute(const LaurentPoly& f, const std::vector<RatFunc>& images);

}  // namespace dswan
