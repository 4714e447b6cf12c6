#pragma once

#include <map>

#include "dswan/ratfunc.hpp"

namespace dswan::ore {

/// Windowed Laurent series sum_j c_j t^j standing in for elements of the
/// completed field F_rho. Coefficients c_j are rational functions in the
/// u-variables only; terms are dropped once their valuation c_j + j*r passes
/// a caller-supplied cutoff.
class Series {
 public:
  using Terms = std::map<int, RatFunc>;

  Series() = default;
  Series(const Context& ctx, const Rational& r) : ctx_(ctx), r_(r) {}

  /// Expands a rational function on the circle |t| = p^-r, keeping terms of
  /// valuation at most val(f) + window. Throws PreconditionError when the
  /// denominator has no unique dominant t-degree.
  static Series expand(const RatFunc& f, const Rational& r, const Rational& window);

  const Context& context() const { return ctx_; }
  const Rational& radius() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Valuation val() const;
  /// Valuation of the single term c_j t^j.
  Valuation term_val(int j, const RatFunc& c) const;

  void add_term(int j, const RatFunc& c);
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const;

  /// Product keeping only terms of valuation <= cutoff.
  static Series mul(const Series& a, const Series& b, const Valuation& cutoff);
  /// Inverse keeping terms of valuation <= -val(this) + window.
  Series inverse(const Rational& window) const;
  Series truncated(const Valuation& cutoff) const;
  Series scaled(long k) const;
  /// sign * partial along axis.
  Series derive(unsigned axis, int sign) const;

  RatFunc to_ratfunc() const;

 private:
  Context ctx_;
  Rational r_;
  Terms terms_;
};

}  // namespace dswan::ore
