#include "dswan/ore/newton.hpp"

#include <algorithm>

#include "dswan/derivation.hpp"
#include "dswan/error.hpp"

namespace dswan::ore {

std::vector<HullPoint> lower_convex_hull(std::vector<HullPoint> points) {
  std::sort(points.begin(), points.end(),
            [](const HullPoint& a, const HullPoint& b) { return a.x < b.x; });
  std::vector<HullPoint> hull;
  for (const auto& pt : points) {
    // Pop while the last turn is not strictly convex (counter-clockwise).
    while (hull.size() >= 2) {
      const HullPoint& a = hull[hull.size() - 2];
      const HullPoint& b = hull.back();
      Rational cross = (b.y - a.y) * (pt.x - a.x) - (pt.y - a.y) * (b.x - a.x);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  return hull;
}

Rational NewtonPolygon::height_at(int x) const {
  if (vertices.empty() || x < vertices.front().x || x > vertices.back().x)
    throw PreconditionError("abscissa outside the Newton polygon");
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const auto& a = vertices[k];
    const auto& b = vertices[k + 1];
    if (x >= a.x && x <= b.x)
      return a.y + (b.y - a.y) * Rational(x - a.x) / Rational(b.x - a.x);
  }
  return vertices.back().y;
}

std::vector<SlopeSegment> NewtonPolygon::readable() const {
  std::vector<SlopeSegment> out;
  for (const auto& s : slopes)
    if (s.readable) out.push_back(s);
  return out;
}

unsigned NewtonPolygon::readable_multiplicity() const {
  unsigned m = 0;
  for (const auto& s : slopes)
    if (s.readable) m += s.multiplicity;
  return m;
}

bool NewtonPolygon::has_threshold_collision() const {
  return std::any_of(slopes.begin(), slopes.end(),
                     [&](const SlopeSegment& s) { return s.slope == threshold; });
}

NewtonPolygon newton_polygon(const TwistedPoly& p) {
  if (p.is_zero()) throw PreconditionError("Newton polygon of the zero twisted polynomial");
  const DiffContext& dc = p.diff_context();
  dc.validate();
  std::vector<HullPoint> pts;
  for (int i = 0; i <= p.degree(); ++i) {
    const RatFunc& a = p.coeffs()[i];
    if (a.is_zero()) continue;
    pts.push_back({-i, a.gauss_val(dc.r).value()});
  }
  NewtonPolygon np;
  np.threshold = derivation_profile(dc.ctx, dc.axis, dc.r).op_val;
  np.vertices = lower_convex_hull(std::move(pts));
  for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
    const auto& a = np.vertices[k];
    const auto& b = np.vertices[k + 1];
    Rational slope = (b.y - a.y) / Rational(b.x - a.x);
    np.slopes.push_back({slope, static_cast<unsigned>(b.x - a.x), slope < np.threshold});
  }
  return np;
}

SpectralBound spectral_from_polygon(const TwistedPoly& p) {
  NewtonPolygon np = newton_polygon(p);
  if (!np.slopes.empty() && np.slopes.front().readable)
    return {np.slopes.front().slope, true};
  return {np.threshold, false};
}

}  // namespace dswan::ore
