#pragma once

#include <vector>

#include "dswan/ratfunc.hpp"

namespace dswan::ore {

/// The differential field (F, d) a twisted polynomial ring is built over:
/// d = sign * (partial along `axis`), F completed at radius parameter r.
struct DiffContext {
  Context ctx;
  unsigned axis = 0;
  Rational r = 1;
  int sign = 1;

  /// Throws PreconditionError on an invalid axis or r <= 0.
  void validate() const;
  RatFunc derive(const RatFunc& f) const;

  friend bool operator==(const DiffContext&, const DiffContext&) = default;
};

/// sum_i a_i T^i with T a = a T + d(a).
class TwistedPoly {
 public:
  TwistedPoly() = default;
  TwistedPoly(DiffContext dctx, std::vector<RatFunc> coeffs);

  static TwistedPoly zero(const DiffContext& dctx) { return {dctx, {}}; }
  static TwistedPoly constant(const DiffContext& dctx, const RatFunc& a);
  /// The generator T.
  static TwistedPoly gen(const DiffContext& dctx);
  /// T - a.
  static TwistedPoly linear(const DiffContext& dctx, const RatFunc& a);

  const DiffContext& diff_context() const { return dctx_; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  /// Coefficient of T^i (zero past the degree).
  RatFunc coeff(std::size_t i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;

  TwistedPoly operator-() const;
  friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b);
  friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b);
  friend bool operator==(const TwistedPoly& a, const TwistedPoly& b);

 private:
  void trim();

  DiffContext dctx_;
  std::vector<RatFunc> coeffs_;
};

/// Noncommutative product; throws PreconditionError on context mismatch.
TwistedPoly tw_mul(const TwistedPoly& a, const TwistedPoly& b);
inline TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
  return tw_mul(a, b);
}

/// Image in the opposite ring, realized as the twisted ring for -d:
/// sum a_i T^i  ->  sum T^i a_i, rewritten with left coefficients.
TwistedPoly opposite(const TwistedPoly& a);

}  // namespace dswan::ore
