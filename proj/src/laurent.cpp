#include "dswan/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "dswan/error.hpp"

namespace dswan {

namespace {

Exponent zero_exponent(const Context& ctx) { return Exponent(ctx.n + 1, 0); }

void check_same(const Context& a, const Context& b) {
  if (!(a == b)) throw PreconditionError("Laurent polynomial context mismatch");
}

}  // namespace

LaurentPoly::LaurentPoly(const Context& ctx, const Coef& c) : ctx_(ctx) {
  if (!c.is_zero()) terms_.emplace(zero_exponent(ctx), c);
}

LaurentPoly::LaurentPoly(const Context& ctx, long c)
    : LaurentPoly(ctx, Coef(ctx.p, c)) {}

LaurentPoly LaurentPoly::monomial(const Context& ctx, const Coef& c,
                                  Exponent exponent) {
  if (exponent.size() != ctx.n + 1)
    throw PreconditionError("exponent vector has wrong length");
  LaurentPoly f(ctx);
  if (!c.is_zero()) f.terms_.emplace(std::move(exponent), c);
  return f;
}

LaurentPoly LaurentPoly::variable(const Context& ctx, unsigned axis) {
  Exponent e = zero_exponent(ctx);
  e.at(axis) = 1;
  return monomial(ctx, Coef(ctx.p, 1), std::move(e));
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c.is_one() && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Coef LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coef(ctx_.p) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(ctx_, o.ctx_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same(ctx_, o.ctx_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a.ctx_, b.ctx_);
  LaurentPoly r(a.ctx_);
  Exponent e(a.ctx_.n + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Coef& c) const {
  LaurentPoly r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t k = 0; k < f.size(); ++k) f[k] += shift[k];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(ctx_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::partial(unsigned axis) const {
  if (axis > ctx_.n) throw PreconditionError("axis out of range");
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponent f = e;
    f[axis] -= 1;
    r.add_term(f, c * Coef(ctx_.p, e[axis]));
  }
  return r;
}

Valuation LaurentPoly::gauss_val(const Rational& r) const {
  Valuation best;
  for (const auto& [e, c] : terms_)
    best = min(best, val_coef(c) + Valuation(r * e[ctx_.n]));
  return best;
}

const LaurentPoly::Terms::value_type& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.rbegin();
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min exponent of zero");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max exponent of zero");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(m[k], e[k]);
  return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a,
                                                     const LaurentPoly& b) {
  check_same(a.ctx_, b.ctx_);
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  LaurentPoly q(a.ctx_);
  if (a.is_zero()) return q;
  // Any quotient's support lies in the box [min(a)-min(b), max(a)-max(b)].
  Exponent lo = a.min_exponent(), hi = a.max_exponent();
  Exponent blo = b.min_exponent(), bhi = b.max_exponent();
  for (std::size_t k = 0; k < lo.size(); ++k) {
    lo[k] -= blo[k];
    hi[k] -= bhi[k];
    if (lo[k] > hi[k]) return std::nullopt;
  }
  const auto& [lb_e, lb_c] = b.leading_term();
  const Coef lb_inv = lb_c.inverse();
  LaurentPoly rem = a;
  Exponent e(lo.size());
  while (!rem.is_zero()) {
    const auto& [lr_e, lr_c] = rem.leading_term();
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = lr_e[k] - lb_e[k];
      if (e[k] < lo[k] || e[k] > hi[k]) return std::nullopt;
    }
    LaurentPoly t = monomial(a.ctx_, lr_c * lb_inv, e);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_.axis_name(static_cast<unsigned>(k));
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    int nonzero = 0;
    bool negative = false;
    for (const auto& x : c.coords()) {
      if (x == 0) continue;
      ++nonzero;
      negative = x < 0;
    }
    negative = negative && nonzero == 1;
    Coef mag = negative ? -c : c;
    std::string coef = mag.to_string();
    std::string term;
    if (mono.empty())
      term = coef;
    else if (mag.is_one())
      term = mono;
    else
      term = coef + "*" + mono;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? "-" : "+") + term;
  }
  return out;
}

}  // namespace dswan
