#include "dswan/ore/hensel.hpp"

#include <algorithm>
#include <functional>

#include "dswan/ore/series.hpp"

namespace dswan::ore {

namespace {

using SPoly = std::vector<Series>;
using Cutoff = std::function<Valuation(int)>;

long binomial(int i, int k) {
  long c = 1;
  for (int j = 1; j <= k; ++j) c = c * (i - k + j) / j;
  return c;
}

// Twisted product of series polynomials, coefficient m kept up to cut(m).
SPoly tw_mul_series(const DiffContext& dc, const SPoly& a, const SPoly& b, const Cutoff& cut) {
  SPoly out(a.size() + b.size() - 1, Series(dc.ctx, dc.r));
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::vector<Series> derivs{b[j]};
    for (std::size_t k = 1; k < a.size(); ++k) derivs.push_back(derivs.back().derive(dc.axis, dc.sign));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        if (derivs[k].is_zero()) continue;
        const int m = static_cast<int>(i - k + j);
        out[m] += Series::mul(a[i], derivs[k], cut(m)).scaled(binomial(static_cast<int>(i), static_cast<int>(k)));
      }
    }
  }
  return out;
}

Series one(const DiffContext& dc) {
  Series s(dc.ctx, dc.r);
  s.add_term(0, RatFunc(dc.ctx, 1));
  return s;
}

bool meets(const Series& e, const Rational& bound) {
  return e.is_zero() || e.val() > Valuation(bound);
}

struct SplitResult {
  SPoly q, r;
  unsigned rounds = 0;
};

// Splits cur (monic, degree d) as Q R with R monic of degree d - j, where
// x = -j is a vertex of the hull H (H[i] = hull height at x = -i).
SplitResult split(const DiffContext& dc, const SPoly& cur, const std::vector<Rational>& h, int j,
                  const HenselOptions& opts) {
  const int d = static_cast<int>(cur.size()) - 1;
  const int k = d - j;
  const Rational w = opts.prec + opts.guard;
  const Rational margin = 4;
  auto cut_r = [&](int l) { return Valuation(h[j + l] + w + margin); };
  auto cut_q = [&](int i) { return Valuation(h[i] - h[j] + w + margin); };
  auto cut_e = [&](int m) { return Valuation(h[m] + w + margin); };

  SplitResult out;
  for (int l = 0; l <= k; ++l) out.r.push_back(cur[j + l].truncated(cut_r(l)));
  const Series aj_inv = cur[j].inverse(w + margin);
  for (int i = 0; i < j; ++i) out.q.push_back(Series::mul(cur[i], aj_inv, cut_q(i)));
  out.q.push_back(one(dc));

  // Unknown weights: x_l (l < k) for delta R, then y_i (i < j) for delta Q.
  std::vector<Rational> wcol;
  for (int l = 0; l < k; ++l) wcol.push_back(h[j + l]);
  for (int i = 0; i < j; ++i) wcol.push_back(h[i] - h[j]);
  const Rational slack = w + 2 * margin;

  while (out.rounds < opts.budget) {
    SPoly qr = tw_mul_series(dc, out.q, out.r, cut_e);
    std::vector<Series> e;
    bool done = true;
    for (int m = 0; m < d; ++m) {
      e.push_back((cur[m] - qr[m]).truncated(cut_e(m)));
      if (!meets(e.back(), h[m] + w)) done = false;
    }
    if (done) break;
    ++out.rounds;

    // Commutative Sylvester system: sum_l Q_{m-l} x_l + sum_i R_{m-i} y_i = E_m.
    std::vector<std::vector<Series>> mat(d, std::vector<Series>(d, Series(dc.ctx, dc.r)));
    for (int m = 0; m < d; ++m) {
      for (int l = 0; l < k; ++l)
        if (m - l >= 0 && m - l <= j) mat[m][l] = out.q[m - l];
      for (int i = 0; i < j; ++i)
        if (m - i >= 0 && m - i <= k) mat[m][k + i] = out.r[m - i];
    }
    std::vector<int> pivot_row(d, -1);
    std::vector<Series> pivot_inv(d);
    std::vector<bool> used(d, false);
    for (int c = 0; c < d; ++c) {
      int best = -1;
      Valuation best_v;
      for (int m = 0; m < d; ++m) {
        if (used[m] || mat[m][c].is_zero()) continue;
        Valuation v = mat[m][c].val();
        Valuation scaled = Valuation(v.value() - h[m] + wcol[c]);
        if (best < 0 || scaled < best_v) {
          best = m;
          best_v = scaled;
        }
      }
      if (best < 0) throw PreconditionError("singular Sylvester system in slope factorization");
      used[best] = true;
      pivot_row[c] = best;
      pivot_inv[c] = mat[best][c].inverse(slack + (h.front() - h.back()) + margin);
      const Series& piv_inv = pivot_inv[c];
      for (int m = 0; m < d; ++m) {
        if (used[m] || mat[m][c].is_zero()) continue;
        const Series f = Series::mul(mat[m][c], piv_inv, Valuation(h[m] - h[best] + slack));
        for (int c2 = c + 1; c2 < d; ++c2) {
          if (mat[best][c2].is_zero()) continue;
          mat[m][c2] -= Series::mul(f, mat[best][c2], Valuation(h[m] - wcol[c2] + slack));
        }
        e[m] -= Series::mul(f, e[best], Valuation(h[m] + slack));
        mat[m][c] = Series(dc.ctx, dc.r);
      }
    }
    std::vector<Series> x(d, Series(dc.ctx, dc.r));
    for (int c = d - 1; c >= 0; --c) {
      const int m = pivot_row[c];
      Series rhs = e[m];
      for (int c2 = c + 1; c2 < d; ++c2)
        if (!mat[m][c2].is_zero()) rhs -= Series::mul(mat[m][c2], x[c2], Valuation(h[m] + slack));
      x[c] = Series::mul(rhs, pivot_inv[c], Valuation(wcol[c] + slack));
    }
    for (int l = 0; l < k; ++l) out.r[l] = (out.r[l] + x[l]).truncated(cut_r(l));
    for (int i = 0; i < j; ++i) out.q[i] = (out.q[i] + x[k + i]).truncated(cut_q(i));
  }
  return out;
}

TwistedPoly to_twisted(const DiffContext& dc, const SPoly& s) {
  std::vector<RatFunc> c;
  for (const auto& x : s) c.push_back(x.to_ratfunc());
  return {dc, std::move(c)};
}

}  // namespace

Valuation residual_margin(const TwistedPoly& p, const std::vector<SlopeFactor>& factors) {
  const DiffContext& dc = p.diff_context();
  TwistedPoly prod = TwistedPoly::constant(dc, RatFunc(dc.ctx, 1));
  for (const auto& f : factors) prod = tw_mul(prod, f.poly);
  const TwistedPoly res = p - prod;
  if (res.is_zero()) return Valuation::infinity();
  const NewtonPolygon np = newton_polygon(p);
  const int lo = -np.vertices.back().x;  // lowest index with a_i != 0
  Valuation worst;
  for (int i = 0; i <= res.degree(); ++i) {
    const RatFunc& c = res.coeffs()[i];
    if (c.is_zero()) continue;
    // Below the hull's right end the hull is continued flat.
    const Rational hi = np.height_at(-std::max(i, lo));
    worst = min(worst, Valuation(c.gauss_val(dc.r).value() - hi));
  }
  return worst;
}

HenselResult hensel_slope_factor(const TwistedPoly& p, const HenselOptions& opts) {
  if (!p.is_monic()) throw PreconditionError("slope factorization needs a monic twisted polynomial");
  if (opts.prec <= 0) throw PreconditionError("working precision must be positive");
  const DiffContext& dc = p.diff_context();
  const NewtonPolygon np = newton_polygon(p);
  for (const auto& s : np.slopes)
    if (s.slope == np.threshold) throw ThresholdCollision(s.slope);

  HenselResult result;
  const auto readable = np.readable();
  if (readable.empty()) {
    result.factors.push_back({p, std::nullopt});
    result.achieved = Valuation::infinity();
    result.reached = true;
    return result;
  }
  if (p.coeffs().front().is_zero())
    throw PreconditionError("slope factorization with a vanishing constant term is not supported");

  const int d = p.degree();
  const Rational w = opts.prec + opts.guard + 8;
  SPoly cur;
  std::vector<Rational> h;
  for (int i = 0; i <= d; ++i) {
    h.push_back(np.height_at(-i));
    const RatFunc& a = p.coeffs()[i];
    Series s = a.is_zero() ? Series(dc.ctx, dc.r)
                           : Series::expand(a, dc.r, h[i] + w - a.gauss_val(dc.r).value());
    cur.push_back(s.truncated(Valuation(h[i] + w)));
  }

  std::vector<SlopeFactor> right;  // P_1, P_2, ...
  for (const auto& seg : readable) {
    const int dc_deg = static_cast<int>(cur.size()) - 1;
    const int j = dc_deg - static_cast<int>(seg.multiplicity);
    if (j == 0) {
      right.push_back({to_twisted(dc, cur), seg.slope});
      cur = {one(dc)};
      break;
    }
    // Hull of the current left factor: P's hull on [-deg, 0] shifted so
    // the monic leading point sits at height 0.
    std::vector<Rational> hc(h.begin(), h.begin() + dc_deg + 1);
    const Rational top = hc.back();
    for (auto& y : hc) y -= top;
    SplitResult sr = split(dc, cur, hc, j, opts);
    result.iterations += sr.rounds;
    right.push_back({to_twisted(dc, sr.r), seg.slope});
    cur = std::move(sr.q);
  }
  if (cur.size() > 1) result.factors.push_back({to_twisted(dc, cur), std::nullopt});
  for (auto it = right.rbegin(); it != right.rend(); ++it) result.factors.push_back(*it);
  result.achieved = residual_margin(p, result.factors);
  result.reached = result.achieved >= Valuation(opts.prec);
  return result;
}

}  // namespace dswan::ore
