#include "dswan/derivation.hpp"

#include "dswan/error.hpp"

namespace dswan {

Rational spectral_gap(unsigned p) { return make_rational(1, static_cast<long>(p) - 1); }

DerivationProfile derivation_profile(const Context& ctx, unsigned axis,
                                     const Rational& r) {
  if (axis > ctx.n) throw PreconditionError("axis out of range");
  if (r <= 0) throw PreconditionError("radius parameter must be positive");
  if (ctx.is_t_axis(axis)) return {-r, -r + spectral_gap(ctx.p)};
  return {Rational(0), spectral_gap(ctx.p)};
}

}  // namespace dswan
