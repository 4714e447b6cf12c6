#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dswan/ore/twisted.hpp"

namespace dswan::ore {

struct HullPoint {
  int x;
  Rational y;
  friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

/// Lower convex hull of points with distinct x, returned left to right with
/// collinear interior points removed.
std::vector<HullPoint> lower_convex_hull(std::vector<HullPoint> points);

struct SlopeSegment {
  Rational slope;
  unsigned multiplicity;
  bool readable;
  friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/// Lower convex hull of {(-i, v(a_i))}; points with a_i = 0 are omitted.
struct NewtonPolygon {
  std::vector<HullPoint> vertices;
  std::vector<SlopeSegment> slopes;  ///< strictly increasing
  Rational threshold;                ///< -log_p |d|_F

  /// Hull height over integer x in [vertices.front().x, vertices.back().x].
  Rational height_at(int x) const;
  /// Slopes strictly below the threshold, with multiplicity.
  std::vector<SlopeSegment> readable() const;
  unsigned readable_multiplicity() const;
  bool has_threshold_collision() const;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Throws PreconditionError for the zero polynomial.
NewtonPolygon newton_polygon(const TwistedPoly& p);

struct SpectralBound {
  Rational sp_val;  ///< least slope when readable, else the threshold
  bool readable;
};

/// Reads -log_p of the spectral norm of d on F{T}/F{T}P off the least slope.
SpectralBound spectral_from_polygon(const TwistedPoly& p);

}  // namespace dswan::ore
