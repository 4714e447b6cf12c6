#include "dswan/diffmod/module.hpp"

#include <random>

#include "dswan/error.hpp"

namespace dswan::diffmod {

namespace {

RatFunc monomial(const Context& ctx, long c, unsigned axis, int power) {
  Exponent e(ctx.n + 1, 0);
  e[axis] = power;
  return RatFunc(LaurentPoly::monomial(ctx, Coef(ctx.p, c), e));
}

}  // namespace

DiffModule::DiffModule(const Context& ctx, std::vector<RatMatrix> matrices)
    : ctx_(ctx), n_(std::move(matrices)) {
  if (n_.size() != ctx.num_axes())
    throw PreconditionError("a differential module needs one matrix per axis");
  rank_ = n_.front().rows();
  for (const auto& m : n_) {
    if (m.rows() != rank_ || m.cols() != rank_)
      throw PreconditionError("connection matrices must be square of equal size");
    if (!(m.context() == ctx)) throw PreconditionError("connection matrix in the wrong context");
  }
}

DiffModule DiffModule::trivial(const Context& ctx, std::size_t d) {
  return {ctx, std::vector<RatMatrix>(ctx.num_axes(), RatMatrix(ctx, d, d))};
}

DiffModule DiffModule::rank_one(const Context& ctx, const std::vector<RatFunc>& g) {
  if (g.size() != ctx.num_axes()) throw PreconditionError("rank-one module needs one entry per axis");
  std::vector<RatMatrix> ms;
  for (const auto& x : g) ms.emplace_back(ctx, std::vector<std::vector<RatFunc>>{{x}});
  return {ctx, std::move(ms)};
}

DiffModule DiffModule::dwork(const Context& ctx, const LaurentPoly& x) {
  if (!ctx.uses_pi) throw PreconditionError("the Dwork construction needs the pi-extended context");
  const RatFunc pi(LaurentPoly(ctx, Coef::pi(ctx.p)));
  std::vector<RatFunc> g;
  for (unsigned a = 0; a < ctx.num_axes(); ++a) g.push_back(pi * RatFunc(x.partial(a)));
  return rank_one(ctx, g);
}

Vec DiffModule::apply(unsigned axis, const Vec& c) const {
  return matrix(axis) * c + partial(c, axis);
}

IntegrabilityReport check_integrability(const DiffModule& m) {
  IntegrabilityReport rep;
  const unsigned axes = m.context().num_axes();
  for (unsigned i = 0; i < axes; ++i)
    for (unsigned j = i + 1; j < axes; ++j) {
      const RatMatrix& ni = m.matrix(i);
      const RatMatrix& nj = m.matrix(j);
      RatMatrix defect = (ni * nj + nj.partial(i)) - (nj * ni + ni.partial(j));
      for (std::size_t r = 0; r < defect.rows(); ++r)
        for (std::size_t c = 0; c < defect.cols(); ++c)
          if (!defect(r, c).is_zero()) {
            rep.ok = false;
            rep.i = i;
            rep.j = j;
            rep.row = r;
            rep.col = c;
            rep.witness = defect(r, c);
            return rep;
          }
    }
  return rep;
}

DiffModule direct_sum(const DiffModule& a, const DiffModule& b) {
  if (!(a.context() == b.context())) throw PreconditionError("direct sum of modules over different contexts");
  const Context& ctx = a.context();
  const std::size_t da = a.rank(), d = a.rank() + b.rank();
  std::vector<RatMatrix> ms;
  for (unsigned ax = 0; ax < ctx.num_axes(); ++ax) {
    RatMatrix m(ctx, d, d);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m(i, j) = a.matrix(ax)(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) m(da + i, da + j) = b.matrix(ax)(i, j);
    ms.push_back(std::move(m));
  }
  return {ctx, std::move(ms)};
}

DiffModule change_basis(const DiffModule& m, const RatMatrix& b) {
  const RatMatrix inv = b.inverse();
  std::vector<RatMatrix> ms;
  for (unsigned ax = 0; ax < m.context().num_axes(); ++ax)
    ms.push_back(inv * (m.matrix(ax) * b + b.partial(ax)));
  return {m.context(), std::move(ms)};
}

RatMatrix wronskian(const DiffModule& m, unsigned axis, const Vec& v) {
  const std::size_t d = m.rank();
  RatMatrix w(m.context(), d, d);
  Vec cur = v;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) w(i, k) = cur[i];
    if (k + 1 < d) cur = m.apply(axis, cur);
  }
  return w;
}

Vec cyclic_vector(const DiffModule& m, unsigned axis, unsigned long seed) {
  const Context& ctx = m.context();
  const std::size_t d = m.rank();
  if (axis >= ctx.num_axes()) throw PreconditionError("axis out of range");
  std::vector<Vec> candidates;
  Vec e1(d, RatFunc(ctx));
  if (d > 0) e1[0] = RatFunc(ctx, 1);
  candidates.push_back(e1);
  for (int a = 0; a <= 2; ++a) {
    Vec v(d, RatFunc(ctx));
    for (std::size_t k = 0; k < d; ++k) v[k] = monomial(ctx, 1, ctx.t_axis(), a * static_cast<int>(k));
    candidates.push_back(v);
  }
  for (unsigned u = 0; u < ctx.n; ++u) {
    Vec v(d, RatFunc(ctx));
    for (std::size_t k = 0; k < d; ++k) v[k] = monomial(ctx, 1, u, static_cast<int>(k));
    candidates.push_back(v);
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  while (candidates.size() < 64) {
    Vec v(d, RatFunc(ctx));
    for (std::size_t k = 0; k < d; ++k) {
      if (pick(0, 2) == 0) continue;
      Exponent e(ctx.n + 1, 0);
      for (auto& x : e) x = static_cast<int>(pick(0, 2));
      long c = 0;
      while (c == 0) c = pick(-3, 3);
      v[k] = RatFunc(LaurentPoly::monomial(ctx, Coef(ctx.p, c), e));
    }
    candidates.push_back(v);
  }
  for (const auto& v : candidates) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) continue;
    if (!wronskian(m, axis, v).determinant().is_zero()) return v;
  }
  throw PreconditionError("no cyclic vector among 64 candidates");
}

ore::TwistedPoly char_twisted_poly(const DiffModule& m, unsigned axis, const Rational& r,
                                   unsigned long seed) {
  const Context& ctx = m.context();
  const std::size_t d = m.rank();
  ore::DiffContext dc{ctx, axis, r, 1};
  dc.validate();
  if (d == 0) return ore::TwistedPoly::constant(dc, RatFunc(ctx, 1));
  if (d == 1) return ore::TwistedPoly::linear(dc, m.matrix(axis)(0, 0));
  const Vec v = cyclic_vector(m, axis, seed);
  const RatMatrix w = wronskian(m, axis, v);
  Vec last = m.apply(axis, w.column(d - 1));
  for (auto& x : last) x = -x;
  Vec a = solve(w, last);
  a.push_back(RatFunc(ctx, 1));
  return {dc, std::move(a)};
}

Vec apply_poly(const DiffModule& m, const ore::TwistedPoly& p, const Vec& v) {
  const unsigned axis = p.diff_context().axis;
  Vec out(m.rank(), RatFunc(m.context()));
  Vec cur = v;
  for (int k = 0; k <= p.degree(); ++k) {
    const RatFunc& a = p.coeffs()[k];
    if (!a.is_zero())
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * cur[i];
    if (k < p.degree()) cur = m.apply(axis, cur);
  }
  return out;
}

}  // namespace dswan::diffmod
