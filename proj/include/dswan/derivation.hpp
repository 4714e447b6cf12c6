#pragma once

#include "dswan/context.hpp"
#include "dswan/rational.hpp"

namespace dswan {

/// Operator-norm and spectral-norm valuations of a coordinate derivation on
/// the completed field at radius parameter r (rho = p^-r).
struct DerivationProfile {
  Rational op_val;  ///< -log_p |d|_F
  Rational sp_val;  ///< -log_p |d|_{F,spect}
};

/// u-axes: (0, 1/(p-1)); t-axis: (-r, -r + 1/(p-1)).
DerivationProfile derivation_profile(const Context& ctx, unsigned axis,
                                     const Rational& r);

/// 1/(p-1), the gap between operator and spectral norm valuations.
Rational spectral_gap(unsigned p);

}  // namespace dswan
