#include "dswan/ratfunc.hpp"

#include <map>

#include "dswan/error.hpp"

namespace dswan {

RatFunc::RatFunc(const Context& ctx) : num_(ctx), den_(ctx, 1) {}

RatFunc::RatFunc(const LaurentPoly& num) : num_(num), den_(num.context(), 1) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc::RatFunc(const Context& ctx, long c) : num_(ctx, c), den_(ctx, 1) {}

void RatFunc::normalize() {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (!(num_.context() == den_.context()))
    throw PreconditionError("rational function context mismatch");
  const Context ctx = num_.context();
  if (num_.is_zero()) {
    den_ = LaurentPoly(ctx, 1);
    return;
  }
  if (den_.is_one()) return;
  auto fold_monomial_den = [&] {
    const auto& [e, c] = *den_.terms().begin();
    Exponent neg = e;
    for (auto& x : neg) x = -x;
    num_ = num_.scaled(c.inverse()).shifted(neg);
    den_ = LaurentPoly(ctx, 1);
  };
  if (den_.is_monomial()) {
    fold_monomial_den();
    return;
  }
  if (auto q = LaurentPoly::divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(ctx, 1);
    return;
  }
  if (auto q = LaurentPoly::divide_exact(den_, num_)) {
    num_ = LaurentPoly(ctx, 1);
    den_ = std::move(*q);
    if (den_.is_monomial()) {
      fold_monomial_den();
      return;
    }
  }
  // Units of the Laurent ring: shift the denominator to minimal exponent 0
  // and make its leading coefficient 1.
  Exponent lo = den_.min_exponent();
  for (auto& x : lo) x = -x;
  Coef lead_inv = den_.leading_term().second.inverse();
  den_ = den_.shifted(lo).scaled(lead_inv);
  num_ = num_.shifted(lo).scaled(lead_inv);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
  } else if (o.den_.is_one()) {
    num_ += o.num_ * den_;
  } else if (auto q = LaurentPoly::divide_exact(o.den_, den_)) {
    num_ = num_ * *q + o.num_;
    den_ = o.den_;
  } else if (auto q2 = LaurentPoly::divide_exact(den_, o.den_)) {
    num_ += o.num_ * *q2;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    if (auto q = LaurentPoly::divide_exact(a, d)) {
      a = std::move(*q);
      d = LaurentPoly(d.context(), 1);
    }
  }
  if (!b.is_one()) {
    if (auto q = LaurentPoly::divide_exact(c, b)) {
      c = std::move(*q);
      b = LaurentPoly(b.context(), 1);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (den_.is_one()) return RatFunc(num_.pow(static_cast<unsigned>(k)));
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RatFunc RatFunc::partial(unsigned axis) const {
  if (den_.is_one()) return RatFunc(num_.partial(axis));
  LaurentPoly top = num_.partial(axis) * den_ - num_ * den_.partial(axis);
  return RatFunc(std::move(top), den_ * den_);
}

Valuation RatFunc::gauss_val(const Rational& r) const {
  if (is_zero()) return Valuation::infinity();
  return Valuation(num_.gauss_val(r).value() - den_.gauss_val(r).value());
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
  RatFunc top = dswan::substitute(num_, images);
  if (den_.is_one()) return top;
  RatFunc bottom = dswan::substitute(den_, images);
  if (bottom.is_zero())
    throw PreconditionError("substitution makes a denominator vanish");
  return top / bottom;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc substitute(const LaurentPoly& f, const std::vector<RatFunc>& images) {
  const Context& src = f.context();
  if (images.size() != src.n + 1)
    throw PreconditionError("substitution needs one image per coordinate");
  const Context& dst = images.front().context();
  std::vector<std::map<int, RatFunc>> cache(images.size());
  auto power = [&](std::size_t k, int e) -> const RatFunc& {
    auto it = cache[k].find(e);
    if (it != cache[k].end()) return it->second;
    return cache[k].emplace(e, images[k].pow(e)).first->second;
  };
  RatFunc result(dst);
  for (const auto& [e, c] : f.terms()) {
    RatFunc term(LaurentPoly(dst, c));
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term *= power(k, e[k]);
    result += term;
  }
  return result;
}

}  // namespace dswan
