#pragma once

#include <vector>

#include "dswan/diffmod/module.hpp"
#include "dswan/ore/newton.hpp"

namespace dswan::diffmod {

struct ScaleEntry {
  Rational scale_logp;
  unsigned multiplicity;
  friend bool operator==(const ScaleEntry&, const ScaleEntry&) = default;
};

/// Per-axis scale multiset at one radius, read off the Newton polygon of a
/// characteristic twisted polynomial.
struct ScaleReport {
  unsigned axis = 0;
  Rational r;
  std::size_t rank = 0;
  ore::NewtonPolygon polygon;
  /// -log_p |d|_{V,spect} when readable, else the threshold (a bound).
  Rational sp_val;
  bool readable = false;
  /// Readable part, scale_logp descending.
  std::vector<ScaleEntry> entries;
  /// Mass the polygon cannot resolve: each such scale_logp lies in
  /// [0, unreadable_bound].
  unsigned unreadable = 0;
  Rational unreadable_bound;

  /// Largest readable scale_logp, or the bound when nothing is readable.
  Rational scale_logp() const;
  /// scale_logp values with multiplicity, descending; unreadable mass is
  /// listed last at the bound.
  std::vector<Rational> flattened() const;
  friend bool operator==(const ScaleReport&, const ScaleReport&) = default;
};

ScaleReport scale_report(const DiffModule& m, unsigned axis, const Rational& r,
                         unsigned long seed = 0);
/// Same, from an already computed characteristic polynomial (which does not
/// depend on r) of a module of the given rank.
ScaleReport scale_report(const ore::TwistedPoly& p, std::size_t rank, const Rational& r);

struct SpectralEstimate {
  /// running[s-1] = min_{s' <= s} v(D_s') / s'; +infinity while D_s = 0.
  std::vector<Valuation> running;
  std::vector<Valuation> raw;
  bool trivial = false;  ///< every D_s vanished

  const Valuation& last() const { return running.back(); }
};

/// Matrix-power estimate of -log_p |d|_{V,spect}: D_1 = N,
/// D_{s+1} = N D_s + d D_s.
SpectralEstimate spectral_estimate(const DiffModule& m, unsigned axis, const Rational& r,
                                   unsigned s_max);

}  // namespace dswan::diffmod
