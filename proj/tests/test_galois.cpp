#include <doctest.h>

#include "dswan/error.hpp"
#include "dswan/expr.hpp"
#include "dswan/galois/artin_schreier.hpp"

using namespace dswan;
using namespace dswan::galois;

namespace {

ASCharacter chi(const char* f, unsigned p, unsigned n) { return {FpLaurent::parse(f, p, n)}; }

RatFunc rf(const char* s, const Context& c) { return parse_expr(s, c); }

// Oracle: pole order of f after subtracting y^p - y for every y supported on
// monomials b^I t^j with j > -m/p... searched exhaustively over small y.
unsigned brute_swan(const FpLaurent& f, int depth) {
  const unsigned p = f.p();
  // candidate monomials t^j for j in [-depth, -1]; n = 0 only
  std::vector<int> js;
  for (int j = -depth; j <= -1; ++j) js.push_back(j);
  unsigned best = f.is_zero() || f.t_order() >= 0 ? 0 : static_cast<unsigned>(-f.t_order());
  std::vector<unsigned> digits(js.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
    FpLaurent y(p, 0);
    for (std::size_t i = 0; i < js.size(); ++i) y.add_term(Exponent{js[i]}, digits[i]);
    FpLaurent g = f - (y.frobenius() - y);
    unsigned s = g.is_zero() || g.t_order() >= 0 ? 0 : static_cast<unsigned>(-g.t_order());
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

TEST_CASE("FpLaurent arithmetic") {
  FpLaurent a = FpLaurent::parse("2*b1*t^(-1) + 4", 3, 1);
  CHECK(a.to_string() == "1+2*b1*t^-1");
  CHECK(FpLaurent::parse(a.to_string(), 3, 1) == a);
  CHECK((a - a).is_zero());
  CHECK(FpLaurent::parse("1/2*t", 3, 0) == FpLaurent::parse("2*t", 3, 0));
  CHECK_THROWS_AS(FpLaurent::parse("1/3*t", 3, 0), PreconditionError);
  CHECK_THROWS_AS(FpLaurent::parse("b1^(-1)", 3, 1), PreconditionError);
  FpLaurent y = FpLaurent::parse("b1 + t^(-1)", 2, 1);
  CHECK(y.frobenius() == y * y);
  CHECK(FpLaurent::parse("b1*t^(-3)", 5, 1).t_power(4) == FpLaurent::parse("b1*t^(-12)", 5, 1));
}

TEST_CASE("Kato reduction examples") {
  CHECK(kato_swan(chi("t^(-2)", 3, 0)) == 2);
  KatoReport r = as_reduce(chi("t^(-3)", 3, 0));
  CHECK(r.swan == 1);
  CHECK(r.witness == FpLaurent::parse("t^(-1)", 3, 0));
  CHECK(r.reduced == FpLaurent::parse("t^(-1)", 3, 0));
  CHECK_FALSE(r.obstruction);

  KatoReport b = as_reduce(chi("b1*t^(-3)", 3, 1));
  CHECK(b.swan == 3);
  REQUIRE(b.obstruction);
  CHECK(*b.obstruction == FpLaurent::parse("b1", 3, 1));
  CHECK(kato_swan(chi("b1^3*t^(-3)", 3, 1)) == 1);
  CHECK(kato_swan(chi("t^2 + 5", 5, 0)) == 0);
  CHECK(kato_swan(chi("t^(-9)", 3, 0)) == 1);

  FpLaurent f = FpLaurent::parse("t^(-4) + t^(-1)", 2, 0);
  CHECK(kato_swan({f}) == brute_swan(f, 4));
}

TEST_CASE("Kato reduction against exhaustive search") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    unsigned p = k % 2 == 0 ? 2 : 3;
    ASCharacter c = random_character(rng, p, 0, p == 2 ? -8 : -6, false);
    CHECK(kato_swan(c) == brute_swan(c.f, p == 2 ? 8 : 6));
  }
}

TEST_CASE("Kato reduction invariants") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    unsigned p = std::array<unsigned, 3>{2, 3, 5}[k % 3];
    unsigned n = k % 3 == 0 ? 0 : 1 + k % 2;
    ASCharacter c = random_character(rng, p, n, -12, n > 0 && k % 4 == 1);
    KatoReport r = as_reduce(c);
    // witness identity
    CHECK(c.f - r.reduced == r.witness.frobenius() - r.witness);
    // the reduced form has pole order equal to the conductor
    unsigned pole = r.reduced.is_zero() || r.reduced.t_order() >= 0 ? 0 : -r.reduced.t_order();
    CHECK(pole == r.swan);
    // p | swan > 0 forces a non-p-th-power obstruction
    if (r.swan > 0 && r.swan % p == 0) CHECK(r.obstruction);
    else CHECK_FALSE(r.obstruction);
    // invariance under adding y^p - y
    ASCharacter y = random_character(rng, p, n, -4, false);
    CHECK(kato_swan({c.f + y.f.frobenius() - y.f}) == r.swan);
  }
}

TEST_CASE("Dwork lifts") {
  Context c3{3, 0, true};
  CHECK(dwork_module(as_reduce(chi("t^(-2)", 3, 0))).matrix(0)(0, 0) == rf("-2*pi*t^(-3)", c3));
  Context c31{3, 1, true};
  diffmod::DiffModule m = dwork_module(as_reduce(chi("b1*t^(-3)", 3, 1)));
  CHECK(m.matrix(0)(0, 0) == rf("pi*t^(-3)", c31));
  CHECK(m.matrix(1)(0, 0) == rf("-3*pi*b1*t^(-4)", c31));
  // the naive lift keeps the unreduced pole
  CHECK(naive_dwork_module(chi("t^(-3)", 3, 0)).matrix(0)(0, 0) == rf("-3*pi*t^(-4)", c3));
}

TEST_CASE("Kato and differential conductors agree") {
  Comparison a = compare(chi("t^(-2)", 3, 0), {});
  CHECK(a.equal);
  CHECK_FALSE(a.naive);
  Comparison b = compare(chi("t^(-3)", 3, 0), {});
  CHECK(b.kato.swan == 1);
  CHECK(b.equal);
  REQUIRE(b.naive);
  CHECK_FALSE(b.naive->ok);
  Comparison c = compare(chi("b1*t^(-3)", 3, 1), {});
  CHECK(c.kato.swan == 3);
  CHECK(c.equal);
}

TEST_CASE("tame twists") {
  ASCharacter c = chi("b1*t^(-3)", 5, 1);
  CHECK(kato_swan(tame_twist(c, 4)) == 12);
  CHECK_THROWS_AS(tame_twist(c, 5), PreconditionError);
  CHECK_THROWS_AS(tame_twist(c, 0), PreconditionError);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    ASCharacter r = random_character(rng, 3, k % 2, -9, false);
    for (unsigned N : {2u, 4u, 5u}) CHECK(kato_swan(tame_twist(r, N)) == N * kato_swan(r));
  }
}
