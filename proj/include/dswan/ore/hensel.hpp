#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dswan/error.hpp"
#include "dswan/ore/newton.hpp"

namespace dswan::ore {

/// A Newton polygon slope coincides with the threshold, so slope
/// separation is undefined there; no factorization is attempted.
class ThresholdCollision : public PreconditionError {
 public:
  explicit ThresholdCollision(const Rational& slope)
      : PreconditionError("Newton polygon slope " + slope.get_str() +
                          " equals the readability threshold"),
        slope_(slope) {}
  const Rational& slope() const { return slope_; }

 private:
  Rational slope_;
};

struct HenselOptions {
  Rational prec = 20;
  unsigned budget = 64;  ///< Newton rounds per split
  Rational guard = 8;    ///< extra working precision beyond prec
};

struct SlopeFactor {
  TwistedPoly poly;
  /// The common slope of a readable factor; empty for the P_+ block.
  std::optional<Rational> slope;
  friend bool operator==(const SlopeFactor&, const SlopeFactor&) = default;
};

struct HenselResult {
  /// Ordered left to right: P_+ (when nontrivial), P_m, ..., P_1.
  std::vector<SlopeFactor> factors;
  /// min_i (v(residual_i) - hull(-i)); infinite for an exact factorization.
  Valuation achieved;
  bool reached = false;  ///< achieved >= prec
  unsigned iterations = 0;
  friend bool operator==(const HenselResult&, const HenselResult&) = default;
};

/// Slope factorization P = P_+ P_m ... P_1 to working precision. Throws
/// PreconditionError for non-monic input (or a vanishing constant term with
/// readable slopes) and ThresholdCollision. An exhausted budget is reported
/// through `reached = false`.
HenselResult hensel_slope_factor(const TwistedPoly& p, const HenselOptions& opts = {});

/// The residual P - (product of factors) measured against P's hull.
Valuation residual_margin(const TwistedPoly& p, const std::vector<SlopeFactor>& factors);

}  // namespace dswan::ore
