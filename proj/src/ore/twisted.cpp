#include "dswan/ore/twisted.hpp"

#include "dswan/error.hpp"

namespace dswan::ore {

namespace {

// C(i, k) for small i.
long binomial(int i, int k) {
  long c = 1;
  for (int j = 1; j <= k; ++j) c = c * (i - k + j) / j;
  return c;
}

void check_same(const TwistedPoly& a, const TwistedPoly& b) {
  if (!(a.diff_context() == b.diff_context()))
    throw PreconditionError("twisted polynomials over different differential contexts");
}

}  // namespace

void DiffContext::validate() const {
  ctx.validate();
  if (axis > ctx.n) throw PreconditionError("axis out of range");
  if (r <= 0) throw PreconditionError("radius parameter must be positive");
  if (sign != 1 && sign != -1) throw PreconditionError("derivation sign must be +-1");
}

RatFunc DiffContext::derive(const RatFunc& f) const {
  RatFunc d = f.partial(axis);
  return sign > 0 ? d : -d;
}

TwistedPoly::TwistedPoly(DiffContext dctx, std::vector<RatFunc> coeffs)
    : dctx_(std::move(dctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.context() == dctx_.ctx))
      throw PreconditionError("twisted polynomial coefficient in the wrong context");
  trim();
}

TwistedPoly TwistedPoly::constant(const DiffContext& dctx, const RatFunc& a) {
  return {dctx, {a}};
}

TwistedPoly TwistedPoly::gen(const DiffContext& dctx) {
  return {dctx, {RatFunc(dctx.ctx), RatFunc(dctx.ctx, 1)}};
}

TwistedPoly TwistedPoly::linear(const DiffContext& dctx, const RatFunc& a) {
  return {dctx, {-a, RatFunc(dctx.ctx, 1)}};
}

void TwistedPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc TwistedPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RatFunc(dctx_.ctx);
}

bool TwistedPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == RatFunc(dctx_.ctx, 1);
}

TwistedPoly TwistedPoly::operator-() const {
  TwistedPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
  check_same(a, b);
  std::vector<RatFunc> c(std::max(a.coeffs_.size(), b.coeffs_.size()), RatFunc(a.dctx_.ctx));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return {a.dctx_, std::move(c)};
}

TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) { return a + (-b); }

bool operator==(const TwistedPoly& a, const TwistedPoly& b) {
  return a.dctx_ == b.dctx_ && a.coeffs_ == b.coeffs_;
}

TwistedPoly tw_mul(const TwistedPoly& a, const TwistedPoly& b) {
  check_same(a, b);
  const DiffContext& dc = a.diff_context();
  if (a.is_zero() || b.is_zero()) return TwistedPoly::zero(dc);
  const int da = a.degree(), db = b.degree();
  std::vector<RatFunc> out(static_cast<std::size_t>(da + db + 1), RatFunc(dc.ctx));
  for (int j = 0; j <= db; ++j) {
    // derivs[k] = d^k(b_j)
    std::vector<RatFunc> derivs{b.coeffs()[j]};
    for (int k = 1; k <= da; ++k) derivs.push_back(dc.derive(derivs.back()));
    for (int i = 0; i <= da; ++i) {
      const RatFunc& ai = a.coeffs()[i];
      if (ai.is_zero()) continue;
      for (int k = 0; k <= i; ++k) {
        if (derivs[k].is_zero()) continue;
        out[i - k + j] += ai * derivs[k] * RatFunc(dc.ctx, binomial(i, k));
      }
    }
  }
  return {dc, std::move(out)};
}

TwistedPoly opposite(const TwistedPoly& a) {
  DiffContext flipped = a.diff_context();
  flipped.sign = -flipped.sign;
  if (a.is_zero()) return TwistedPoly::zero(flipped);
  TwistedPoly result = TwistedPoly::zero(flipped);
  TwistedPoly tpow = TwistedPoly::constant(flipped, RatFunc(flipped.ctx, 1));
  const TwistedPoly gen = TwistedPoly::gen(flipped);
  for (int i = 0; i <= a.degree(); ++i) {
    if (!a.coeffs()[i].is_zero())
      result = result + tw_mul(tpow, TwistedPoly::constant(flipped, a.coeffs()[i]));
    tpow = tw_mul(tpow, gen);
  }
  return result;
}

}  // namespace dswan::ore
