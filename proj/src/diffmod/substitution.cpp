#include "dswan/diffmod/substitution.hpp"

#include "dswan/error.hpp"

namespace dswan::diffmod {

namespace {

RatFunc var(const Context& ctx, unsigned axis, int power = 1) {
  Exponent e(ctx.n + 1, 0);
  e[axis] = power;
  return RatFunc(LaurentPoly::monomial(ctx, Coef(ctx.p, 1), e));
}

std::vector<RatFunc> coordinates(const Context& ctx) {
  std::vector<RatFunc> out;
  for (unsigned a = 0; a < ctx.num_axes(); ++a) out.push_back(var(ctx, a));
  return out;
}

}  // namespace

Substitution::Substitution(const Context& source, const Context& target, std::vector<RatFunc> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (images_.size() != source.num_axes())
    throw PreconditionError("substitution needs one image per source coordinate");
  if (source.p != target.p) throw PreconditionError("substitution changes the residue characteristic");
  for (const auto& f : images_)
    if (!(f.context() == target)) throw PreconditionError("substitution image in the wrong context");
  jac_ = RatMatrix(target, target.num_axes(), source.num_axes());
  for (unsigned k = 0; k < target.num_axes(); ++k)
    for (unsigned j = 0; j < source.num_axes(); ++j) jac_(k, j) = images_[j].partial(k);
}

Substitution Substitution::identity(const Context& ctx) { return {ctx, ctx, coordinates(ctx)}; }

Substitution Substitution::tame(const Context& ctx, unsigned n) {
  if (n == 0) throw PreconditionError("tame substitution needs a positive exponent");
  auto im = coordinates(ctx);
  im.back() = var(ctx, ctx.t_axis(), static_cast<int>(n));
  return {ctx, ctx, im};
}

Substitution Substitution::frobenius(const Context& ctx, unsigned n) {
  unsigned q = 1;
  for (unsigned k = 0; k < n; ++k) q *= ctx.p;
  auto im = coordinates(ctx);
  im.back() = var(ctx, ctx.t_axis(), static_cast<int>(q));
  return {ctx, ctx, im};
}

Substitution Substitution::rotation(const Context& ctx, unsigned axis) {
  if (axis >= ctx.n) throw PreconditionError("rotation needs a u-axis");
  auto im = coordinates(ctx);
  im[axis] += var(ctx, ctx.t_axis());
  return {ctx, ctx, im};
}

Substitution Substitution::generic_rotation(const Context& ctx) {
  const Context target{ctx.p, 2 * ctx.n, ctx.uses_pi};
  const int p = static_cast<int>(ctx.p);
  std::vector<RatFunc> im;
  const RatFunc tp1 = var(target, target.t_axis(), p - 1);
  for (unsigned i = 0; i < ctx.n; ++i) im.push_back(var(target, i, p) + var(target, ctx.n + i) * tp1);
  im.push_back(var(target, target.t_axis(), p) / (RatFunc(target, 1) - tp1));
  return {ctx, target, im};
}

DiffModule pullback(const DiffModule& m, const Substitution& s) {
  if (!(m.context() == s.source())) throw PreconditionError("pullback along a substitution from another context");
  const Context& tgt = s.target();
  std::vector<RatMatrix> pulled;
  for (const auto& nj : m.matrices()) pulled.push_back(nj.substitute(s.images()));
  std::vector<RatMatrix> out;
  for (unsigned k = 0; k < tgt.num_axes(); ++k) {
    RatMatrix acc(tgt, m.rank(), m.rank());
    for (unsigned j = 0; j < s.source().num_axes(); ++j) {
      const RatFunc& c = s.jacobian()(k, j);
      if (!c.is_zero()) acc = acc + pulled[j].scaled(c);
    }
    out.push_back(std::move(acc));
  }
  return {tgt, std::move(out)};
}

}  // namespace dswan::diffmod
