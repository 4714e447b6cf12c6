#include "dswan/ore/series.hpp"

#include "dswan/error.hpp"

namespace dswan::ore {

namespace {

// Splits a Laurent polynomial into t-degree buckets with t-free coefficients.
std::map<int, LaurentPoly> t_buckets(const LaurentPoly& f) {
  const Context& ctx = f.context();
  std::map<int, LaurentPoly> out;
  for (const auto& [e, c] : f.terms()) {
    Exponent u = e;
    u.back() = 0;
    auto it = out.try_emplace(e.back(), ctx).first;
    it->second.add_term(u, c);
  }
  return out;
}

Series from_poly(const LaurentPoly& f, const Rational& r) {
  Series s(f.context(), r);
  for (auto& [j, c] : t_buckets(f)) s.add_term(j, RatFunc(c));
  return s;
}

}  // namespace

Valuation Series::term_val(int j, const RatFunc& c) const {
  return c.gauss_val(r_) + Valuation(r_ * j);
}

Valuation Series::val() const {
  Valuation best;
  for (const auto& [j, c] : terms_) best = min(best, term_val(j, c));
  return best;
}

void Series::add_term(int j, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    terms_.emplace(j, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Series& Series::operator+=(const Series& o) {
  if (terms_.empty() && !o.terms_.empty()) {
    ctx_ = o.ctx_;
    r_ = o.r_;
  }
  for (const auto& [j, c] : o.terms_) add_term(j, c);
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const {
  Series s = *this;
  for (auto& [j, c] : s.terms_) c = -c;
  return s;
}

Series Series::mul(const Series& a, const Series& b, const Valuation& cutoff) {
  Series out(a.ctx_, a.r_);
  std::vector<std::pair<int, Valuation>> vb;
  for (const auto& [j, c] : b.terms_) vb.emplace_back(j, b.term_val(j, c));
  for (const auto& [i, ca] : a.terms_) {
    Valuation va = a.term_val(i, ca);
    auto itb = b.terms_.begin();
    for (std::size_t k = 0; k < vb.size(); ++k, ++itb) {
      if (va + vb[k].second > cutoff) continue;
      out.add_term(i + itb->first, ca * itb->second);
    }
  }
  return out;
}

Series Series::truncated(const Valuation& cutoff) const {
  Series out(ctx_, r_);
  for (const auto& [j, c] : terms_)
    if (term_val(j, c) <= cutoff) out.terms_.emplace(j, c);
  return out;
}

Series Series::scaled(long k) const {
  Series out(ctx_, r_);
  if (k == 0) return out;
  for (const auto& [j, c] : terms_) out.terms_.emplace(j, c * RatFunc(ctx_, k));
  return out;
}

Series Series::derive(unsigned axis, int sign) const {
  Series out(ctx_, r_);
  if (ctx_.is_t_axis(axis)) {
    for (const auto& [j, c] : terms_)
      if (j != 0) out.add_term(j - 1, c * RatFunc(ctx_, sign * j));
  } else {
    for (const auto& [j, c] : terms_) {
      RatFunc d = c.partial(axis);
      out.add_term(j, sign > 0 ? d : -d);
    }
  }
  return out;
}

Series Series::inverse(const Rational& window) const {
  if (terms_.empty()) throw PreconditionError("inverse of zero series");
  const Valuation v = val();
  int lead = 0;
  int ties = 0;
  for (const auto& [j, c] : terms_) {
    if (term_val(j, c) == v) {
      lead = j;
      ++ties;
    }
  }
  if (ties != 1)
    throw PreconditionError("series has no unique dominant term on the circle");
  const RatFunc lead_inv = terms_.at(lead).inverse();
  // Newton iteration x <- x (2 - a x) starting from the inverse of the
  // dominant term; the relative precision doubles each step.
  Series x(ctx_, r_);
  x.add_term(-lead, lead_inv);
  const Valuation target = Valuation(-v.value() + window);
  Series unit(ctx_, r_);
  unit.add_term(0, RatFunc(ctx_, 1));
  // Precision of x relative to 1/this; starts at the gap to the next term.
  Valuation gap;
  for (const auto& [j, c] : terms_)
    if (j != lead) gap = min(gap, term_val(j, c));
  if (gap.is_infinite()) return x;
  Rational have = gap.value() - v.value();
  const Series self = truncated(Valuation(v.value() + window));
  while (have <= window) {
    const Rational step = have * 2 < window ? have * 2 : window;
    Series err = (unit - mul(self, x, Valuation(step))).truncated(Valuation(step));
    if (!err.is_zero()) x += mul(x, err, Valuation(-v.value() + step));
    if (step == window) break;
    have = step;
  }
  return x.truncated(target);
}

Series Series::expand(const RatFunc& f, const Rational& r, const Rational& window) {
  Series num = from_poly(f.num(), r);
  if (f.is_polynomial() || num.is_zero()) return num;
  Series den = from_poly(f.den(), r);
  Series inv = den.inverse(window);
  Valuation cut = f.gauss_val(r) + Valuation(window);
  return mul(num, inv, cut);
}

RatFunc Series::to_ratfunc() const {
  RatFunc out(ctx_);
  for (const auto& [j, c] : terms_) {
    Exponent e(ctx_.n + 1, 0);
    e.back() = j;
    out += c * RatFunc(LaurentPoly::monomial(ctx_, Coef(ctx_.p, 1), e));
  }
  return out;
}

}  // namespace dswan::ore
