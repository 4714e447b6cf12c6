#include "dswan/swan/breaks.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dswan/error.hpp"

namespace dswan::swan {

using diffmod::DiffModule;
using diffmod::ScaleReport;

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> rs) {
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (const auto& r : rs)
    if (r <= 0) throw PreconditionError("radius parameters must be positive");
  return rs;
}

ScaleValue top(const ScaleReport& rep) { return {rep.scale_logp(), rep.readable}; }

// Larger of two positions: readable values beat unreadable bounds.
ScaleValue larger(const ScaleValue& a, const ScaleValue& b) {
  if (a.readable != b.readable) return a.readable ? a : b;
  return a.value >= b.value ? a : b;
}

// Characteristic polynomials per axis, computed once (they do not depend on r).
struct Sampler {
  const DiffModule& m;
  std::vector<unsigned> axes;
  std::vector<ore::TwistedPoly> polys;

  Sampler(const DiffModule& mod, std::vector<unsigned> ax, unsigned long seed) : m(mod), axes(std::move(ax)) {
    for (unsigned a : axes) polys.push_back(diffmod::char_twisted_poly(m, a, 1, seed));
  }

  BreakSample sample(const Rational& r) const {
    BreakSample s;
    s.r = r;
    for (const auto& p : polys) s.axes.push_back(diffmod::scale_report(p, m.rank(), r));
    s.combined = combine(s.axes);
    return s;
  }
};

std::vector<unsigned> all_axes(const Context& ctx) {
  std::vector<unsigned> out(ctx.num_axes());
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

std::string rat(const Rational& q) { return q.get_str(); }

}  // namespace

std::vector<ScaleValue> combine(const std::vector<ScaleReport>& axes) {
  std::vector<ScaleValue> out;
  for (const auto& rep : axes) {
    std::vector<ScaleValue> vals;
    for (const auto& e : rep.entries)
      for (unsigned k = 0; k < e.multiplicity; ++k) vals.push_back({e.scale_logp, true});
    for (unsigned k = 0; k < rep.unreadable; ++k) vals.push_back({rep.unreadable_bound, false});
    if (out.empty()) {
      out = vals;
      continue;
    }
    for (std::size_t k = 0; k < out.size() && k < vals.size(); ++k) out[k] = larger(out[k], vals[k]);
  }
  return out;
}

Profile sample_profile(const DiffModule& m, std::vector<unsigned> axes, std::vector<Rational> rs) {
  if (axes.empty()) axes = all_axes(m.context());
  rs = sorted_unique(std::move(rs));
  Sampler sampler(m, axes, 0);
  Profile prof;
  for (const auto& r : rs) prof.samples.push_back(sampler.sample(r));
  prof.break0_candidate = true;
  for (const auto& s : prof.samples)
    for (const auto& rep : s.axes)
      if (rep.readable) prof.break0_candidate = false;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& s : prof.samples)
      if (s.axes[a].readable) pts.emplace_back(s.r, s.axes[a].scale_logp());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          const auto& [r1, v1] = pts[i];
          const auto& [r2, v2] = pts[j];
          const auto& [r3, v3] = pts[k];
          const Rational chord = v1 + (v3 - v1) * (r2 - r1) / (r3 - r1);
          if (v2 > chord) prof.violations.push_back({axes[a], r1, r2, r3});
        }
  }
  return prof;
}

std::string to_string(FitMode mode) {
  switch (mode) {
    case FitMode::ThroughOrigin: return "through-origin";
    case FitMode::Affine: return "affine";
    case FitMode::NonLinear: return "non-linear";
  }
  return "?";
}

BreakFit fit_highest_break(const std::vector<std::pair<Rational, Rational>>& samples, std::size_t rank) {
  if (samples.size() < 3) throw PreconditionError("a break fit needs at least 3 readable samples");
  auto pts = samples;
  std::sort(pts.begin(), pts.end());
  BreakFit fit;
  for (const auto& [r, v] : pts) fit.window.push_back(r);
  auto fill_residuals = [&] {
    fit.residuals.clear();
    for (const auto& [r, v] : pts) fit.residuals.push_back(v - (fit.b * r + fit.intercept));
  };
  auto exact = [&] {
    return std::all_of(fit.residuals.begin(), fit.residuals.end(), [](const Rational& x) { return x == 0; });
  };

  fit.b = pts.front().second / pts.front().first;
  fit.intercept = 0;
  fill_residuals();
  if (exact()) {
    fit.mode = FitMode::ThroughOrigin;
    fit.lattice_ok = factorial(static_cast<unsigned>(rank)) % fit.b.get_den() == 0;
    return fit;
  }
  fit.b = (pts[1].second - pts[0].second) / (pts[1].first - pts[0].first);
  fit.intercept = pts[0].second - fit.b * pts[0].first;
  fill_residuals();
  if (exact()) {
    fit.mode = FitMode::Affine;
    return fit;
  }
  const auto& p = pts[pts.size() - 2];
  const auto& q = pts.back();
  fit.b = (q.second - p.second) / (q.first - p.first);
  fit.intercept = q.second - fit.b * q.first;
  fill_residuals();
  fit.mode = FitMode::NonLinear;
  return fit;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithSolvable: return "consistent-with-solvable";
    case Verdict::NotBoundaryReadable: return "not-boundary-readable";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

Verdict solvability_probe(const BreakFit& fit) {
  switch (fit.mode) {
    case FitMode::ThroughOrigin: return fit.b >= 0 ? Verdict::ConsistentWithSolvable : Verdict::Indeterminate;
    case FitMode::Affine: return Verdict::NotBoundaryReadable;
    case FitMode::NonLinear: return Verdict::Indeterminate;
  }
  return Verdict::Indeterminate;
}

std::vector<AxisDominance> dominance_table(const Profile& profile) {
  std::vector<AxisDominance> out;
  if (profile.samples.empty()) return out;
  const std::size_t naxes = profile.samples.front().axes.size();
  for (std::size_t a = 0; a < naxes; ++a) {
    bool dom = true;
    for (const auto& s : profile.samples) {
      ScaleValue best = top(s.axes.front());
      for (const auto& rep : s.axes) best = larger(best, top(rep));
      if (!(top(s.axes[a]) == best)) dom = false;
    }
    out.push_back({profile.samples.front().axes[a].axis, dom});
  }
  return out;
}

std::vector<DiffModule> block_decomposition(const DiffModule& m) {
  const std::size_t d = m.rank();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& n : m.matrices())
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j && !n(i, j).is_zero()) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < d; ++i) groups[find(i)].push_back(i);
  if (groups.size() <= 1) return {m};
  std::vector<DiffModule> out;
  const Context& ctx = m.context();
  for (const auto& [root, idx] : groups) {
    std::vector<diffmod::RatMatrix> ms;
    for (const auto& n : m.matrices()) {
      diffmod::RatMatrix b(ctx, idx.size(), idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = n(idx[i], idx[j]);
      ms.push_back(std::move(b));
    }
    out.emplace_back(ctx, std::move(ms));
  }
  return out;
}

BreakFit axis_break(const DiffModule& m, unsigned axis, const std::vector<Rational>& rs) {
  Sampler sampler(m, {axis}, 0);
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& r : sorted_unique(rs)) {
    ScaleReport rep = sampler.sample(r).axes.front();
    if (rep.readable) pts.emplace_back(r, rep.scale_logp());
  }
  return fit_highest_break(pts, m.rank());
}

SwanReport break_multiset(const DiffModule& m, const BreakOptions& opts) {
  const Context& ctx = m.context();
  SwanReport rep;
  rep.rank = m.rank();
  std::vector<DiffModule> blocks = block_decomposition(m);
  rep.blocks = blocks.size();
  const auto axes = all_axes(ctx);
  std::vector<Sampler> samplers;
  for (const auto& b : blocks) {
    samplers.emplace_back(b, axes, opts.seed);
    if (b.rank() > 1 && axes.size() > 1) rep.heuristic = true;
  }

  // samples[block][k] at grid[k]
  std::vector<Rational> grid = sorted_unique(opts.rs);
  if (grid.empty()) throw PreconditionError("empty radius grid");
  std::vector<std::vector<BreakSample>> samples(blocks.size());

  struct Position {
    std::vector<std::pair<Rational, Rational>> readable;
    std::optional<Rational> zero_at;  // unreadable at an r past the lattice bound
  };
  auto positions = [&](std::size_t bi) {
    const std::size_t d = blocks[bi].rank();
    const Rational bound = Rational(factorial(static_cast<unsigned>(d))) / Rational(ctx.p - 1);
    std::vector<Position> out(d);
    for (const auto& s : samples[bi])
      for (std::size_t k = 0; k < d; ++k) {
        const ScaleValue& v = s.combined[k];
        if (v.readable)
          out[k].readable.emplace_back(s.r, v.value);
        else if (s.r > bound && !out[k].zero_at)
          out[k].zero_at = s.r;
      }
    return out;
  };
  auto resolved = [&] {
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (const auto& p : positions(bi))
        if (p.readable.size() < 3 && !p.zero_at) return false;
    return true;
  };

  std::size_t done = 0;
  while (true) {
    for (; done < grid.size(); ++done)
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) samples[bi].push_back(samplers[bi].sample(grid[done]));
    if (opts.fixed_grid || resolved()) break;
    const Rational next = grid.back() * 2;
    if (next > opts.cap) break;
    grid.push_back(next);
  }
  rep.window = grid;

  bool complete = true, certified = true;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const std::size_t d = blocks[bi].rank();
    const Rational bound = Rational(factorial(static_cast<unsigned>(d))) / Rational(ctx.p - 1);
    for (const auto& pos : positions(bi)) {
      if (pos.readable.size() >= 3) {
        BreakFit fit = fit_highest_break(pos.readable, d);
        if (fit.mode != FitMode::ThroughOrigin) {
          certified = false;
          if (fit.mode == FitMode::Affine)
            rep.diagnostics.push_back("affine fit: scale_logp = " + rat(fit.b) + "*r " +
                                      (fit.intercept < 0 ? "- " + rat(-fit.intercept) : "+ " + rat(fit.intercept)) +
                                      "; window is not boundary-faithful");
          else
            rep.diagnostics.push_back("non-linear profile; window is not boundary-faithful");
        } else if (!fit.lattice_ok) {
          certified = false;
          rep.diagnostics.push_back("slope " + rat(fit.b) + " violates the denominator bound " + std::to_string(d) + "!");
        } else {
          rep.breaks.push_back(fit.b);
        }
        rep.fits.push_back(std::move(fit));
      } else if (pos.zero_at) {
        rep.breaks.push_back(0);
        if (!rep.break0_at || *pos.zero_at > *rep.break0_at) rep.break0_at = pos.zero_at;
      } else {
        complete = false;
        if (!pos.readable.empty()) {
          rep.diagnostics.push_back("fewer than 3 readable samples for a scale position");
        } else {
          rep.diagnostics.push_back("break-0 conversion needs r > " + rat(bound));
          if (!rep.break0_needed || bound > *rep.break0_needed) rep.break0_needed = bound;
        }
      }
    }
  }
  std::sort(rep.breaks.rbegin(), rep.breaks.rend());
  rep.ok = complete && certified;
  if (rep.ok) {
    Rational total = 0;
    for (const auto& b : rep.breaks) total += b;
    rep.swan = total;
    rep.hasse_arf = is_integer(total) && total >= 0;
  }

  // Dominance on the whole module: per axis the direct-sum union of the
  // block reports, compared by their top values.
  Profile prof;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    BreakSample s;
    s.r = grid[k];
    for (std::size_t a = 0; a < axes.size(); ++a) {
      ScaleReport merged = samples[0][k].axes[a];
      merged.rank = m.rank();
      for (std::size_t bi = 1; bi < blocks.size(); ++bi) {
        const ScaleReport& other = samples[bi][k].axes[a];
        merged.entries.insert(merged.entries.end(), other.entries.begin(), other.entries.end());
        merged.unreadable += other.unreadable;
      }
      std::sort(merged.entries.begin(), merged.entries.end(),
                [](const auto& x, const auto& y) { return x.scale_logp > y.scale_logp; });
      merged.readable = !merged.entries.empty();
      s.axes.push_back(std::move(merged));
    }
    prof.samples.push_back(std::move(s));
  }
  rep.dominance = dominance_table(prof);
  return rep;
}

}  // namespace dswan::swan
