#include "dswan/diffmod/scale.hpp"

#include <algorithm>

#include "dswan/derivation.hpp"
#include "dswan/error.hpp"

namespace dswan::diffmod {

Rational ScaleReport::scale_logp() const {
  return entries.empty() ? unreadable_bound : entries.front().scale_logp;
}

std::vector<Rational> ScaleReport::flattened() const {
  std::vector<Rational> out;
  for (const auto& e : entries)
    for (unsigned k = 0; k < e.multiplicity; ++k) out.push_back(e.scale_logp);
  for (unsigned k = 0; k < unreadable; ++k) out.push_back(unreadable_bound);
  return out;
}

ScaleReport scale_report(const DiffModule& m, unsigned axis, const Rational& r, unsigned long seed) {
  return scale_report(char_twisted_poly(m, axis, r, seed), m.rank(), r);
}

ScaleReport scale_report(const ore::TwistedPoly& poly, std::size_t rank, const Rational& r) {
  ore::DiffContext dc = poly.diff_context();
  dc.r = r;
  const ore::TwistedPoly p(dc, poly.coeffs());
  const Context& ctx = dc.ctx;
  ScaleReport rep;
  rep.axis = dc.axis;
  rep.r = r;
  rep.rank = rank;
  const DerivationProfile prof = derivation_profile(ctx, dc.axis, r);
  rep.unreadable_bound = spectral_gap(ctx.p);
  rep.polygon = ore::newton_polygon(p);
  unsigned readable = 0;
  for (const auto& s : rep.polygon.slopes) {
    if (!s.readable) continue;
    Rational v = prof.sp_val - s.slope;
    if (v < 0) v = 0;
    rep.entries.push_back({v, s.multiplicity});
    readable += s.multiplicity;
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const ScaleEntry& a, const ScaleEntry& b) { return a.scale_logp > b.scale_logp; });
  rep.unreadable = static_cast<unsigned>(rank) - readable;
  rep.readable = !rep.entries.empty();
  rep.sp_val = rep.readable ? rep.polygon.slopes.front().slope : rep.polygon.threshold;
  return rep;
}

SpectralEstimate spectral_estimate(const DiffModule& m, unsigned axis, const Rational& r, unsigned s_max) {
  if (s_max < 1) throw PreconditionError("spectral estimate needs s_max >= 1");
  SpectralEstimate est;
  const RatMatrix& n = m.matrix(axis);
  RatMatrix d = n;
  Valuation best;
  est.trivial = true;
  for (unsigned s = 1; s <= s_max; ++s) {
    if (s > 1) d = n * d + d.partial(axis);
    Valuation v = d.gauss_val(r);
    Valuation per = v.is_infinite() ? v : Valuation(v.value() / s);
    if (v.is_finite()) est.trivial = false;
    est.raw.push_back(per);
    best = min(best, per);
    est.running.push_back(best);
  }
  return est;
}

}  // namespace dswan::diffmod
