#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dswan/coef.hpp"
#include "dswan/context.hpp"
#include "dswan/valuation.hpp"

namespace dswan {

/// Exponent vector (i_1, ..., i_n, j): u-exponents followed by the t-exponent.
using Exponent = std::vector<int>;

/// Finite Laurent polynomial in u_1..u_n, t with Coef coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Coef>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Context& ctx) : ctx_(ctx) {}
  LaurentPoly(const Context& ctx, const Coef& c);
  LaurentPoly(const Context& ctx, long c);

  static LaurentPoly monomial(const Context& ctx, const Coef& c,
                              Exponent exponent);
  /// The coordinate function of `axis` (u_i or t).
  static LaurentPoly variable(const Context& ctx, unsigned axis);

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of x^e, zero when absent.
  Coef coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Coef& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Coef& c) const;
  /// Multiplication by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  LaurentPoly pow(unsigned k) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Formal partial derivative along `axis`.
  LaurentPoly partial(unsigned axis) const;

  /// Gauss valuation with weight 0 on every u_i and weight r on t.
  Valuation gauss_val(const Rational& r) const;

  /// Lex-largest term; requires nonzero.
  const Terms::value_type& leading_term() const;
  /// Componentwise minimum / maximum exponents; requires nonzero.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  /// Exact quotient a/b when b divides a in the Laurent ring, else nullopt.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a,
                                                 const LaurentPoly& b);

  /// Terms in lex order joined by +/-, or "0".
  std::string to_string() const;

 private:
  Context ctx_;
  Terms terms_;
};

}  // namespace dswan
