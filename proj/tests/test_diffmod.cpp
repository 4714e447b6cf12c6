#include <doctest.h>

#include "dswan/derivation.hpp"
#include "dswan/diffmod/scale.hpp"
#include "dswan/diffmod/substitution.hpp"
#include "dswan/error.hpp"
#include "dswan/expr.hpp"
#include "gen.hpp"

using namespace dswan;
using namespace dswan::diffmod;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

DiffModule dwork(const Context& ctx, const char* x) { return DiffModule::dwork(ctx, parse_laurent(x, ctx)); }

RatFunc e(const Context& ctx, const char* s) { return parse_expr(s, ctx); }

RatMatrix mat(const Context& ctx, std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<RatFunc>> out;
  for (auto& row : rows) {
    out.emplace_back();
    for (const char* s : row) out.back().push_back(e(ctx, s));
  }
  return {ctx, out};
}

// Random unimodular basis change: unit lower times unit upper triangular
// with integral polynomial entries (Gauss valuation >= 0, determinant 1).
RatMatrix unimodular(gen::Gen& g, const Context& ctx, std::size_t d) {
  RatMatrix lo = RatMatrix::identity(ctx, d), up = RatMatrix::identity(ctx, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = RatFunc(ctx, g.integer(-2, 2)) * e(ctx, g.coin() ? "t" : "1");
      up(j, i) = RatFunc(ctx, g.integer(-2, 2)) * e(ctx, g.coin() ? "t^2" : "1");
    }
  return lo * up;
}

std::vector<Rational> entries(const ScaleReport& rep) {
  std::vector<Rational> out;
  for (const auto& x : rep.entries)
    for (unsigned k = 0; k < x.multiplicity; ++k) out.push_back(x.scale_logp);
  return out;
}

}  // namespace

TEST_CASE("integrability") {
  Context c0{3, 0, true}, c1{3, 1, true};
  CHECK(check_integrability(DiffModule::rank_one(c0, {e(c0, "t^5")})).ok);
  CHECK(check_integrability(dwork(c1, "u1*t^(-3) + u1^2*t^(-1)")).ok);
  // N_u = (u1), N_t = (t) commutes; N_u = (t), N_t = (0) does not.
  CHECK(check_integrability(DiffModule::rank_one(c1, {e(c1, "u1"), e(c1, "t")})).ok);
  auto bad = check_integrability(DiffModule::rank_one(c1, {e(c1, "t"), e(c1, "0")}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.i == 0);
  CHECK(bad.j == 1);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == e(c1, "-1"));
}

TEST_CASE("cyclic vectors") {
  Context c{3, 0, true};
  CHECK(cyclic_vector(DiffModule::rank_one(c, {e(c, "t")}), 0) == Vec{e(c, "1")});
  DiffModule diag{c, {mat(c, {{"t^(-2)", "0"}, {"0", "t^(-1)"}})}};
  Vec v = cyclic_vector(diag, 0);
  CHECK(!wronskian(diag, 0, v).determinant().is_zero());
  CHECK(v == Vec{e(c, "1"), e(c, "1")});
  DiffModule nil{c, {mat(c, {{"0", "0"}, {"1", "0"}})}};
  CHECK(cyclic_vector(nil, 0) == Vec{e(c, "1"), e(c, "0")});
  CHECK(wronskian(nil, 0, Vec{e(c, "1"), e(c, "0")}).determinant() == e(c, "1"));
}

TEST_CASE("characteristic twisted polynomials") {
  Context c{3, 0, true};
  DiffModule m1 = DiffModule::rank_one(c, {e(c, "pi*t^(-3)")});
  CHECK(char_twisted_poly(m1, 0, 1) == ore::TwistedPoly::linear({c, 0, 1, 1}, e(c, "pi*t^(-3)")));
  DiffModule sum = direct_sum(dwork(c, "t^(-2)"), dwork(c, "t^(-1)"));
  auto p = char_twisted_poly(sum, 0, 1);
  CHECK(p.degree() == 2);
  CHECK(p.is_monic());
  Vec v = cyclic_vector(sum, 0);
  for (const auto& x : apply_poly(sum, p, v)) CHECK(x.is_zero());
  gen::Gen g(8);
  for (int k = 0; k < 5; ++k) {
    DiffModule m = change_basis(direct_sum(dwork(c, "t^(-2)"), dwork(c, "2*t^(-1)")), unimodular(g, c, 2));
    auto pm = char_twisted_poly(m, 0, 1);
    for (const auto& x : apply_poly(m, pm, cyclic_vector(m, 0))) CHECK(x.is_zero());
  }
}

TEST_CASE("scale reports") {
  Context c0{3, 0, true}, c1{3, 1, true};
  auto rep = scale_report(dwork(c0, "t^(-2)"), 0, 1);
  CHECK(rep.readable);
  CHECK(rep.sp_val == q(-5, 2));
  CHECK(entries(rep) == std::vector<Rational>{2});
  CHECK(rep.unreadable == 0);

  auto triv = scale_report(DiffModule::trivial(c0, 2), 0, 1);
  CHECK_FALSE(triv.readable);
  CHECK(triv.unreadable == 2);
  CHECK(triv.unreadable_bound == q(1, 2));

  auto u = scale_report(dwork(c1, "u1*t^(-3)"), 0, 1);
  CHECK(entries(u) == std::vector<Rational>{3});
  auto t = scale_report(dwork(c1, "u1*t^(-3)"), 1, 1);
  CHECK(entries(t) == std::vector<Rational>{2});  // 3r - 1

  auto ds = scale_report(direct_sum(dwork(c0, "t^(-2)"), dwork(c0, "t^(-1)")), 0, 1);
  CHECK(entries(ds) == std::vector<Rational>{2, 1});
  CHECK(scale_report(direct_sum(dwork(c0, "t^(-2)"), DiffModule::trivial(c0, 0)), 0, 1).rank == 1);
}

TEST_CASE("scale reports are invariant under unimodular basis change") {
  gen::Gen g(77);
  Context c{3, 1, true};
  const char* xs[] = {"u1*t^(-3)", "t^(-2)", "u1^2*t^(-4) + t^(-1)", "2*t^(-5)"};
  for (int k = 0; k < 8; ++k) {
    DiffModule m = direct_sum(dwork(c, xs[k % 4]), dwork(c, xs[(k + 1) % 4]));
    DiffModule mb = change_basis(m, unimodular(g, c, 2));
    CHECK(check_integrability(mb).ok);
    for (unsigned ax = 0; ax < 2; ++ax) {
      auto a = scale_report(m, ax, 1), b = scale_report(mb, ax, 1, 3);
      CHECK(a.entries == b.entries);
      CHECK(a.unreadable == b.unreadable);
    }
  }
}

TEST_CASE("spectral estimate") {
  Context c{3, 0, true};
  auto triv = spectral_estimate(DiffModule::trivial(c, 1), 0, 1, 8);
  CHECK(triv.trivial);
  CHECK(triv.last().is_infinite());

  auto est = spectral_estimate(dwork(c, "t^(-2)"), 0, 1, 64);
  for (std::size_t s = 1; s < est.running.size(); ++s) CHECK(est.running[s] <= est.running[s - 1]);
  CHECK(est.last() == Valuation(q(-5, 2)));

  gen::Gen g(4);
  DiffModule m = change_basis(direct_sum(dwork(c, "t^(-3)"), dwork(c, "t^(-1)")), unimodular(g, c, 2));
  auto est2 = spectral_estimate(m, 0, 1, 64);
  const Rational exact = scale_report(m, 0, 1).sp_val;
  CHECK(est2.last().value() >= exact);
  CHECK(est2.last().value() - exact <= q(15, 100));
}

TEST_CASE("pullbacks") {
  Context c0{3, 0, true}, c1{3, 1, true};
  DiffModule m = dwork(c1, "u1*t^(-3) + t^(-1)");
  CHECK(pullback(m, Substitution::identity(c1)) == m);
  CHECK(pullback(dwork(c0, "t^(-2)"), Substitution::tame(c0, 2)) == dwork(c0, "t^(-4)"));

  // rotation: new N_t = old N_t + old N_u at the substituted arguments
  DiffModule x9 = dwork(c1, "u1*t^(-9)");
  DiffModule rot = pullback(x9, Substitution::rotation(c1, 0));
  CHECK(rot == dwork(c1, "(u1 + t)*t^(-9)"));
  CHECK(rot.matrix(1)(0, 0) == e(c1, "pi*(-9*u1*t^(-10) - 8*t^(-9))"));
  CHECK(check_integrability(rot).ok);
  for (Rational r : {q(1, 2), q(1), q(3, 2)}) {
    auto rep = scale_report(rot, 1, r);
    CHECK(entries(rep) == std::vector<Rational>{8 * r});
  }

  Substitution gr = Substitution::generic_rotation(c1);
  CHECK(gr.target().n == 2);
  DiffModule big = pullback(dwork(c1, "u1*t^(-2)"), gr);
  CHECK(check_integrability(big).ok);
  CHECK(big.context().n == 2);

  CHECK(check_integrability(pullback(m, Substitution::frobenius(c1, 1))).ok);
}

TEST_CASE("direct sums") {
  Context c{3, 0, true};
  DiffModule a = dwork(c, "t^(-2)");
  CHECK(direct_sum(a, DiffModule::trivial(c, 0)) == a);
  gen::Gen g(12);
  for (int k = 0; k < 6; ++k) {
    DiffModule x = dwork(c, k % 2 ? "t^(-4)" : "t^(-1)"), y = dwork(c, k % 3 ? "2*t^(-5)" : "t^(-2)");
    auto sx = entries(scale_report(x, 0, 1)), sy = entries(scale_report(y, 0, 1));
    sx.insert(sx.end(), sy.begin(), sy.end());
    std::sort(sx.rbegin(), sx.rend());
    CHECK(entries(scale_report(direct_sum(x, y), 0, 1)) == sx);
  }
  CHECK_THROWS_AS(direct_sum(a, DiffModule::trivial(Context{3, 1, true}, 1)), PreconditionError);
}

TEST_CASE("tame and Frobenius pullback laws") {
  Context c{5, 0, true};
  for (const char* x : {"t^(-2)", "t^(-3) + t^(-1)", "2*t^(-7)"}) {
    DiffModule m = dwork(c, x);
    for (unsigned n : {2u, 3u}) {
      DiffModule pm = pullback(m, Substitution::tame(c, n));
      for (Rational r : {q(1), q(2), q(3)}) {
        auto a = scale_report(m, 0, r), b = scale_report(pm, 0, r / n);
        CHECK(a.entries == b.entries);
        CHECK(a.unreadable == b.unreadable);
      }
    }
    DiffModule fm = pullback(m, Substitution::frobenius(c, 1));
    for (Rational r : {q(1), q(2), q(3)}) {
      auto a = scale_report(m, 0, r), b = scale_report(fm, 0, r / 5);
      REQUIRE(a.readable);
      // readable values are exact; an unreadable one is at most the gap
      CHECK(a.scale_logp() >= b.scale_logp());
    }
  }
}

TEST_CASE("Frobenius pullback shifts readable scales by N") {
  // chain rule: d/dT = p^N T^(p^N - 1) d/dt, so readable scales drop by
  // exactly N at the matched radius
  for (unsigned p : {3u, 5u}) {
    Context c{p, 0, true};
    for (const char* x : {"t^(-2)", "t^(-3) + t^(-1)", "2*t^(-7)"}) {
      DiffModule m = dwork(c, x);
      for (unsigned n : {1u, 2u}) {
        DiffModule fm = pullback(m, Substitution::frobenius(c, n));
        Rational pn = Rational(p == 3 ? (n == 1 ? 3 : 9) : (n == 1 ? 5 : 25));
        for (Rational r : {q(2), q(3), q(5)}) {
          auto a = scale_report(m, 0, r), b = scale_report(fm, 0, r / pn);
          REQUIRE(a.readable);
          if (b.readable) CHECK(b.scale_logp() == a.scale_logp() - n);
          else CHECK(a.scale_logp() - n <= b.unreadable_bound);
        }
      }
    }
  }
}
