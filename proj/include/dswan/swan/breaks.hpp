#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dswan/diffmod/scale.hpp"

namespace dswan::swan {

/// One position of a descending scale multiset: an exact value, or an
/// unreadable entry known only to lie in [0, value].
struct ScaleValue {
  Rational value;
  bool readable = false;
  friend bool operator==(const ScaleValue&, const ScaleValue&) = default;
};

/// Scale data of every requested axis at one radius.
struct BreakSample {
  Rational r;
  std::vector<diffmod::ScaleReport> axes;
  /// Descending, rank entries: per position the largest value over the axes,
  /// readable values beating unreadable bounds.
  std::vector<ScaleValue> combined;
};

std::vector<ScaleValue> combine(const std::vector<diffmod::ScaleReport>& axes);

struct ConcavityViolation {
  unsigned axis;
  Rational r1, r2, r3;
};

struct Profile {
  std::vector<BreakSample> samples;
  /// Readable top values that lie strictly above the chord of their
  /// neighbours (scale_logp must be convex in r).
  std::vector<ConcavityViolation> violations;
  /// Nothing readable on any axis at any radius.
  bool break0_candidate = false;
};

/// Scale reports on the given axes (all axes when empty) at each radius.
Profile sample_profile(const diffmod::DiffModule& m, std::vector<unsigned> axes,
                       std::vector<Rational> rs);

enum class FitMode { ThroughOrigin, Affine, NonLinear };
std::string to_string(FitMode mode);

struct BreakFit {
  FitMode mode = FitMode::NonLinear;
  Rational b;          ///< slope
  Rational intercept;  ///< zero in through-origin mode
  /// b's denominator divides rank! (through-origin mode only).
  bool lattice_ok = false;
  std::vector<Rational> window;
  /// value - (b r + intercept) at each sample.
  std::vector<Rational> residuals;
  friend bool operator==(const BreakFit&, const BreakFit&) = default;
};

/// Fits samples (r, scale_logp): through the origin with a slope whose
/// denominator divides rank!, else an exact affine line, else non-linear.
/// Throws PreconditionError with fewer than 3 samples.
BreakFit fit_highest_break(const std::vector<std::pair<Rational, Rational>>& samples, std::size_t rank);

enum class Verdict { ConsistentWithSolvable, NotBoundaryReadable, Indeterminate };
std::string to_string(Verdict v);

/// Never claims non-solvability from a finite window.
Verdict solvability_probe(const BreakFit& fit);

struct AxisDominance {
  unsigned axis;
  bool dominant;
  friend bool operator==(const AxisDominance&, const AxisDominance&) = default;
};

/// Axes whose top value equals the combined top at every sample.
std::vector<AxisDominance> dominance_table(const Profile& profile);

struct BreakOptions {
  std::vector<Rational> rs{Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
  Rational cap = 64;
  /// Keep the grid as given instead of extending it.
  bool fixed_grid = false;
  unsigned long seed = 0;
};

struct SwanReport {
  std::size_t rank = 0;
  /// Descending; complete only when `ok`.
  std::vector<Rational> breaks;
  std::optional<Rational> swan;
  bool hasse_arf = false;
  bool ok = false;
  std::vector<BreakFit> fits;  ///< one per non-zero position
  std::vector<AxisDominance> dominance;
  std::vector<Rational> window;
  /// Radius at which unreadable positions were converted to break 0.
  std::optional<Rational> break0_at;
  /// Radius the break-0 conversion would need when the window fell short.
  std::optional<Rational> break0_needed;
  std::size_t blocks = 1;
  /// Cross-axis pointwise maximum applied to a block of rank > 1 with more
  /// than one derivation; not certified exact.
  bool heuristic = false;
  std::vector<std::string> diagnostics;
  friend bool operator==(const SwanReport&, const SwanReport&) = default;
};

/// Break multiset and Swan conductor read off the readable window. The
/// module is split along its block-diagonal structure first.
SwanReport break_multiset(const diffmod::DiffModule& m, const BreakOptions& opts = {});

/// Highest break seen by one derivation alone (its top scale value).
BreakFit axis_break(const diffmod::DiffModule& m, unsigned axis, const std::vector<Rational>& rs);

/// Splits a module along the connected components of the nonzero pattern of
/// its connection matrices.
std::vector<diffmod::DiffModule> block_decomposition(const diffmod::DiffModule& m);

}  // namespace dswan::swan
