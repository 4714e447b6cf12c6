#pragma once

// Small random generators for the property tests. Seeds are fixed per test
// so failures reproduce.

#include <random>

#include "dswan/expr.hpp"
#include "dswan/ratfunc.hpp"

namespace gen {

using dswan::Coef;
using dswan::Context;
using dswan::Exponent;
using dswan::LaurentPoly;
using dswan::Rational;

class Gen {
 public:
  explicit Gen(unsigned long seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// Nonzero rational with small p-power content.
  Rational rational(unsigned p) {
    long num = 0;
    while (num == 0) num = integer(-9, 9);
    long den = integer(1, 5);
    Rational q(num, den);
    long e = integer(-2, 2);
    for (long i = 0; i < e; ++i) q *= p;
    for (long i = 0; i > e; --i) q /= p;
    q.canonicalize();
    return q;
  }

  /// Positive rational in (0, hi].
  Rational radius(long hi = 4) {
    long den = integer(1, 6);
    long num = integer(1, hi * den);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Coef coef(const Context& ctx) {
    if (!ctx.uses_pi || ctx.p == 2) return Coef(ctx.p, rational(ctx.p));
    std::vector<Rational> coords;
    for (unsigned k = 0; k + 1 < ctx.p; ++k) coords.push_back(coin() ? rational(ctx.p) : Rational(0));
    Coef c = Coef::from_coords(ctx.p, coords);
    return c.is_zero() ? Coef(ctx.p, 1) : c;
  }

  LaurentPoly laurent(const Context& ctx, int terms = 3, int tspan = 4, int uspan = 2) {
    LaurentPoly f(ctx);
    while (f.is_zero()) {
      for (int k = 0; k < terms; ++k) {
        Exponent e(ctx.n + 1);
        for (unsigned i = 0; i < ctx.n; ++i) e[i] = static_cast<int>(integer(0, uspan));
        e[ctx.n] = static_cast<int>(integer(-tspan, tspan));
        f.add_term(e, coef(ctx));
      }
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
