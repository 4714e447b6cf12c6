// Acceptance suite: one pass/fail line per criterion. Tolerances are fixed
// here and nowhere else; the process exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dswan/diffmod/scale.hpp"
#include "dswan/diffmod/substitution.hpp"
#include "dswan/expr.hpp"
#include "dswan/galois/artin_schreier.hpp"
#include "dswan/ore/hensel.hpp"
#include "dswan/swan/breaks.hpp"
#include "gen.hpp"

using namespace dswan;
using diffmod::DiffModule;
using diffmod::Substitution;

namespace {

constexpr double kCorpusSeconds = 60;
const Rational kEstimatorTolerance(15, 100);
constexpr int kCorpusPerCell = 5;

Rational q(long a, long b = 1) { return make_rational(a, b); }

struct Result {
  bool pass = true;
  std::string detail;
};

/// Collects the first few failure descriptions of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Result result(const std::string& summary) const {
    std::ostringstream o;
    o << summary << " (" << total_ - failed_ << "/" << total_ << " checks)";
    if (failed_) o << ": " << notes_;
    return {failed_ == 0, o.str()};
  }

 private:
  int total_ = 0, failed_ = 0;
  std::string notes_;
};

DiffModule dwork(const Context& c, const std::string& x) { return DiffModule::dwork(c, parse_laurent(x, c)); }

bool is_nonnegative_integer(const Rational& r) { return r >= 0 && r.get_den() == 1; }

// The Kato corpus: every (p, n) cell, poles down to t^-12, with p-divisible
// conductors for n >= 1.
std::vector<galois::ASCharacter> corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<galois::ASCharacter> out;
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned n : {0u, 1u, 2u})
      for (int k = 0; k < kCorpusPerCell; ++k)
        out.push_back(galois::random_character(rng, p, n, -12, n > 0 && k % 2 == 0));
  // pin the deepest pole explicitly
  out.push_back({galois::FpLaurent::parse("t^(-11) + 2*t^(-12)", 3, 0)});
  out.push_back({galois::FpLaurent::parse("b1*b2*t^(-12) + t^(-5)", 2, 2)});
  return out;
}

struct CorpusRun {
  std::vector<galois::ASCharacter> items;
  std::vector<galois::Comparison> results;
  double seconds = 0;
};

const CorpusRun& corpus_run() {
  static const CorpusRun run = [] {
    CorpusRun r;
    r.items = corpus();
    auto start = std::chrono::steady_clock::now();
    for (const auto& chi : r.items) r.results.push_back(galois::compare(chi));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }();
  return run;
}

Result kato_agreement() {
  const CorpusRun& run = corpus_run();
  Check c;
  std::map<unsigned, int> by_p;
  std::map<unsigned, int> by_n;
  int divisible = 0, deepest = 0;
  for (std::size_t i = 0; i < run.items.size(); ++i) {
    const auto& chi = run.items[i];
    const auto& cmp = run.results[i];
    ++by_p[chi.p()];
    ++by_n[chi.n()];
    if (!chi.f.is_zero()) deepest = std::min(deepest, chi.f.t_order());
    if (cmp.kato.obstruction) ++divisible;
    bool certified = cmp.differential.ok;
    for (const auto& f : cmp.differential.fits) certified = certified && f.mode == swan::FitMode::ThroughOrigin;
    c.expect(cmp.equal && certified, "f=" + chi.f.to_string() + " p=" + std::to_string(chi.p()) + " kato " +
                                         std::to_string(cmp.kato.swan) + " differential " +
                                         (cmp.differential.swan ? cmp.differential.swan->get_str() : "none"));
  }
  c.expect(run.items.size() >= 40, "corpus too small");
  c.expect(by_p.size() == 3 && by_n.size() == 3, "corpus misses a (p, n) value");
  c.expect(divisible > 0, "no p-divisible conductor");
  c.expect(deepest <= -12, "no pole of order 12");
  c.expect(run.seconds < kCorpusSeconds, "corpus took " + std::to_string(run.seconds) + " s");
  std::ostringstream s;
  s << run.items.size() << " characters, " << divisible << " p-divisible, " << run.seconds << " s";
  return c.result(s.str());
}

Result hasse_arf() {
  Check c;
  for (const auto& cmp : corpus_run().results)
    c.expect(cmp.differential.swan && is_nonnegative_integer(*cmp.differential.swan),
             "corpus swan not a nonnegative integer");
  gen::Gen g(77);
  for (int k = 0; k < 20; ++k) {
    const unsigned p = std::array<unsigned, 3>{2, 3, 5}[k % 3];
    const Context ctx{p, 0, true};
    DiffModule m = DiffModule::trivial(ctx, 0);
    const int parts = 2 + k % 2;
    for (int j = 0; j < parts; ++j) {
      LaurentPoly x(ctx);
      x.add_term(Exponent{-static_cast<int>(g.integer(1, 8))}, Coef(p, g.integer(1, p - 1)));
      x.add_term(Exponent{-static_cast<int>(g.integer(0, 3))}, Coef(p, g.integer(0, p - 1)));
      // reduce so each summand's pole order is prime to p (or absent)
      galois::KatoReport rep = galois::as_reduce({galois::FpLaurent::from_laurent(x)});
      m = diffmod::direct_sum(m, galois::dwork_module(rep));
    }
    swan::SwanReport r = swan::break_multiset(m);
    bool breaks_ok = r.ok;
    for (const auto& b : r.breaks) breaks_ok = breaks_ok && b >= 0;
    c.expect(breaks_ok && r.swan && is_nonnegative_integer(*r.swan) && r.hasse_arf,
             "direct sum " + std::to_string(k) + " gave no integral Swan conductor");
  }
  return c.result("corpus plus 20 direct sums");
}

Result tame_base_change() {
  const CorpusRun& run = corpus_run();
  Check c;
  int done = 0;
  for (std::size_t i = 0; i < run.items.size() && done < 10; ++i) {
    const auto& chi = run.items[i];
    if (run.results[i].kato.swan == 0) continue;
    ++done;
    const unsigned base = run.results[i].kato.swan;
    const DiffModule m = galois::dwork_module(run.results[i].kato);
    for (unsigned n : {2u, 3u, 4u}) {
      if (std::gcd(n, chi.p()) != 1) continue;
      c.expect(galois::kato_swan(galois::tame_twist(chi, n)) == n * base, "Kato path, N=" + std::to_string(n));
      swan::SwanReport r = swan::break_multiset(diffmod::pullback(m, Substitution::tame(m.context(), n)));
      c.expect(r.ok && r.swan == Rational(n * base),
               "differential path, f=" + chi.f.to_string() + " N=" + std::to_string(n));
    }
  }
  c.expect(done == 10, "fewer than 10 usable corpus items");
  return c.result(std::to_string(done) + " items, N in {2,3,4} prime to p");
}

Result rotation() {
  const Context ctx{3, 1, true};
  const DiffModule m = diffmod::pullback(dwork(ctx, "u1*t^(-9)"), Substitution::rotation(ctx, 0));
  const std::vector<Rational> rs{q(1, 2), q(1), q(3, 2)};
  Check c;
  swan::BreakFit t = swan::axis_break(m, ctx.t_axis(), rs);
  c.expect(t.mode == swan::FitMode::ThroughOrigin && t.b == 8, "t-axis break " + t.b.get_str());
  for (const Rational& r : rs) {
    const diffmod::ScaleReport s = diffmod::scale_report(m, ctx.t_axis(), r);
    c.expect(s.readable && s.rank == 1 && s.scale_logp() == 8 * r, "t-axis scale at r=" + r.get_str());
  }
  return c.result("b1 t^-9 at p=3 after u1 -> u1 + t: t-axis break " + t.b.get_str());
}

Result generic_rotation() {
  const Context ctx{3, 0, true};
  const DiffModule m = diffmod::pullback(dwork(ctx, "t^(-2)"), Substitution::generic_rotation(ctx));
  swan::BreakOptions opts;
  opts.rs = {q(1, 6), q(1, 4), q(1, 3)};
  opts.fixed_grid = true;
  Check c;
  swan::SwanReport r = swan::break_multiset(m, opts);
  c.expect(r.ok && r.breaks == std::vector<Rational>{4}, "highest break not 4");
  swan::BreakFit t = swan::axis_break(m, ctx.t_axis(), opts.rs);
  c.expect(t.mode == swan::FitMode::ThroughOrigin && t.b == 4, "t-axis fit " + t.b.get_str());
  bool t_dominant = false;
  for (const auto& d : r.dominance) t_dominant = t_dominant || (d.axis == ctx.t_axis() && d.dominant);
  c.expect(t_dominant, "t-axis not dominant");
  return c.result("t^-2 at p=3, b=2: fitted highest break " + (r.breaks.empty() ? std::string("none") : r.breaks[0].get_str()));
}

std::vector<DiffModule> pullback_fixtures(unsigned p) {
  const Context ctx{p, 0, true};
  std::vector<DiffModule> out;
  for (const char* x : {"t^(-1)", "t^(-2)", "t^(-3) + t^(-1)", "2*t^(-4)", "t^(-7)", "t^(-6) + t^(-2)"})
    out.push_back(dwork(ctx, x));
  out.push_back(diffmod::direct_sum(dwork(ctx, "t^(-2)"), dwork(ctx, "t^(-3)")));
  out.push_back(diffmod::direct_sum(dwork(ctx, "t^(-1)"), dwork(ctx, "t^(-4)")));
  out.push_back(diffmod::direct_sum(dwork(ctx, "t^(-3)"), DiffModule::trivial(ctx, 1)));
  out.push_back(DiffModule::trivial(ctx, 2));
  return out;
}

Result pullback_laws() {
  Check c;
  const unsigned p = 5;
  const std::vector<Rational> rs{q(1), q(2), q(3)};
  int fixtures = 0;
  for (const DiffModule& m : pullback_fixtures(p)) {
    ++fixtures;
    const unsigned axis = m.context().t_axis();
    // tame: equality of the sorted multisets at r/N
    for (unsigned n : {2u, 3u}) {
      const DiffModule pm = diffmod::pullback(m, Substitution::tame(m.context(), n));
      for (const Rational& r : rs) {
        auto a = diffmod::scale_report(m, axis, r), b = diffmod::scale_report(pm, axis, r / n);
        c.expect(a.entries == b.entries && a.unreadable == b.unreadable,
                 "tame N=" + std::to_string(n) + " r=" + r.get_str());
      }
    }
    // Frobenius: position-wise scale(E, r) >= scale(F^* E, r/p); unreadable
    // positions of the pullback count at their upper bound
    const DiffModule fm = diffmod::pullback(m, Substitution::frobenius(m.context(), 1));
    for (const Rational& r : rs) {
      auto a = diffmod::scale_report(m, axis, r).flattened();
      auto b = diffmod::scale_report(fm, axis, r / p).flattened();
      bool ok = a.size() == b.size();
      for (std::size_t k = 0; ok && k < a.size(); ++k) ok = a[k] >= b[k];
      c.expect(ok, "Frobenius r=" + r.get_str());
    }
  }
  return c.result(std::to_string(fixtures) + " fixtures each, p=5, r in {1,2,3}");
}

ore::TwistedPoly random_readable(gen::Gen& g, const ore::DiffContext& dc) {
  while (true) {
    std::vector<RatFunc> cs;
    const int deg = static_cast<int>(g.integer(1, 2));
    for (int i = 0; i < deg; ++i) {
      LaurentPoly f(dc.ctx);
      f.add_term(Exponent{static_cast<int>(g.integer(-4 * (deg - i), -1))}, g.coef(dc.ctx));
      cs.push_back(RatFunc(f));
    }
    cs.push_back(RatFunc(dc.ctx, 1));
    ore::TwistedPoly p(dc, cs);
    if (!p.coeffs().front().is_zero() &&
        ore::newton_polygon(p).readable_multiplicity() == static_cast<unsigned>(p.degree()))
      return p;
  }
}

std::map<Rational, unsigned> readable_slopes(const ore::TwistedPoly& p) {
  std::map<Rational, unsigned> out;
  for (const auto& s : ore::newton_polygon(p).readable()) out[s.slope] += s.multiplicity;
  return out;
}

Result np_additivity() {
  gen::Gen g(4242);
  Check c;
  for (int k = 0; k < 50; ++k) {
    const ore::DiffContext dc{Context{k % 2 ? 3u : 5u, 0, true}, 0, q(g.integer(1, 4), 2)};
    const ore::TwistedPoly a = random_readable(g, dc), b = random_readable(g, dc);
    auto expect = readable_slopes(a);
    for (auto [s, m] : readable_slopes(b)) expect[s] += m;
    c.expect(readable_slopes(a * b) == expect, "product " + std::to_string(k));
  }
  return c.result("50 random readable products");
}

// Products of linear factors T - (pi t^-k + lower terms) with distinct k.
std::vector<ore::TwistedPoly> hensel_fixtures() {
  const ore::DiffContext dc{Context{3, 0, true}, 0, 1};
  gen::Gen g(808);
  std::vector<ore::TwistedPoly> out;
  while (out.size() < 20) {
    const int factors = out.size() < 14 ? 2 : 3;
    std::vector<int> ks;
    while (static_cast<int>(ks.size()) < factors) {
      int k = static_cast<int>(g.integer(2, 7));
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
    ore::TwistedPoly p = ore::TwistedPoly::constant(dc, RatFunc(dc.ctx, 1));
    for (int k : ks) {
      LaurentPoly a(dc.ctx);
      a.add_term(Exponent{-k}, Coef::pi(3) * Coef(3, g.integer(1, 2)));
      a.add_term(Exponent{static_cast<int>(g.integer(-1, 1))}, Coef(3, g.integer(-3, 3)));
      p = p * ore::TwistedPoly::linear(dc, RatFunc(a));
    }
    out.push_back(p);
  }
  return out;
}

Result hensel() {
  Check c;
  int n = 0;
  for (const auto& p : hensel_fixtures()) {
    ++n;
    const auto lo = ore::hensel_slope_factor(p, {20}), hi = ore::hensel_slope_factor(p, {30});
    c.expect(lo.reached && ore::residual_margin(p, lo.factors) >= Valuation(20), "fixture " + std::to_string(n) + " residual");
    c.expect(hi.reached, "fixture " + std::to_string(n) + " prec 30 not reached");
    bool agree = lo.factors.size() == hi.factors.size();
    for (std::size_t i = 0; agree && i < lo.factors.size(); ++i) {
      agree = lo.factors[i].slope == hi.factors[i].slope;
      const ore::TwistedPoly diff = lo.factors[i].poly - hi.factors[i].poly;
      const ore::NewtonPolygon np = ore::newton_polygon(hi.factors[i].poly);
      for (int j = 0; agree && j <= diff.degree(); ++j)
        if (!diff.coeffs()[j].is_zero())
          agree = diff.coeffs()[j].gauss_val(1).value() >= 20 + np.height_at(-j);
    }
    c.expect(agree, "fixture " + std::to_string(n) + " prec 20 and 30 disagree");
  }
  return c.result("20 slope-separated fixtures, prec 20 vs 30");
}

std::vector<DiffModule> estimator_fixtures() {
  const Context ctx{3, 0, true};
  std::vector<DiffModule> out;
  for (const char* x : {"t^(-2)", "t^(-4) + t^(-1)", "2*t^(-5)"}) out.push_back(dwork(ctx, x));
  out.push_back(diffmod::direct_sum(dwork(ctx, "t^(-3)"), dwork(ctx, "t^(-1)")));
  out.push_back(diffmod::direct_sum(dwork(ctx, "t^(-2)"), dwork(ctx, "t^(-5)")));
  out.push_back(diffmod::direct_sum(diffmod::direct_sum(dwork(ctx, "t^(-2)"), dwork(ctx, "t^(-4)")),
                                    dwork(ctx, "t^(-1)")));
  // the same with a unimodular change of basis mixing the summands
  auto mix = [&](const DiffModule& m, const char* off) {
    diffmod::RatMatrix b = diffmod::RatMatrix::identity(ctx, m.rank());
    for (std::size_t i = 1; i < m.rank(); ++i) b(i, i - 1) = parse_expr(off, ctx);
    return diffmod::change_basis(m, b);
  };
  out.push_back(mix(out[3], "t"));
  out.push_back(mix(out[4], "1 + t"));
  out.push_back(mix(out[5], "t^2"));
  out.push_back(mix(diffmod::direct_sum(dwork(ctx, "t^(-4)"), dwork(ctx, "2*t^(-2)")), "2"));
  return out;
}

Result estimator() {
  Check c;
  Rational worst = 0;
  int n = 0;
  for (const DiffModule& m : estimator_fixtures()) {
    ++n;
    const Rational r = 1;
    const diffmod::ScaleReport exact = diffmod::scale_report(m, 0, r);
    c.expect(exact.readable, "fixture " + std::to_string(n) + " not readable");
    const diffmod::SpectralEstimate est = diffmod::spectral_estimate(m, 0, r, 64);
    if (est.last().is_infinite()) {
      c.expect(false, "fixture " + std::to_string(n) + " estimate infinite");
      continue;
    }
    Rational gap = abs(est.last().value() - exact.sp_val);
    worst = std::max(worst, gap);
    c.expect(gap <= kEstimatorTolerance, "fixture " + std::to_string(n) + " off by " + gap.get_str());
  }
  return c.result(std::to_string(n) + " fixtures, s_max 64, worst gap " + worst.get_str() + " (tolerance 3/20)");
}

Result concavity_three_circles() {
  Check c;
  gen::Gen g(2718);
  for (int k = 0; k < 100; ++k) {
    const unsigned p = std::array<unsigned, 3>{2, 3, 5}[k % 3];
    const Context ctx{p, static_cast<unsigned>(k % 2), true};
    DiffModule m = DiffModule::dwork(ctx, g.laurent(ctx, 3, 8, 3));
    if (k % 4 == 0) m = diffmod::direct_sum(m, DiffModule::dwork(ctx, g.laurent(ctx, 2, 6, 2)));
    std::vector<Rational> rs;
    for (int j = 0; j < 5; ++j) rs.push_back(g.radius(3));
    swan::Profile prof = swan::sample_profile(m, {}, rs);
    c.expect(prof.violations.empty(), "profile " + std::to_string(k));
  }
  for (int k = 0; k < 100; ++k) {
    const Context ctx{std::array<unsigned, 3>{2, 3, 5}[k % 3], static_cast<unsigned>(k % 3), k % 2 == 0};
    const LaurentPoly f = g.laurent(ctx, 4, 6, 3);
    Rational r1 = g.radius(), r3 = g.radius();
    if (r3 < r1) std::swap(r1, r3);
    Rational w(g.integer(0, 8), 8);
    w.canonicalize();
    const Rational r2 = w * r1 + (1 - w) * r3;
    c.expect(f.gauss_val(r2).value() >= w * f.gauss_val(r1).value() + (1 - w) * f.gauss_val(r3).value(),
             "three circles " + std::to_string(k));
  }
  return c.result("100 profiles, 100 three-circles cases");
}

Result negative_control() {
  const Context ctx{3, 0, true};
  const DiffModule m = galois::naive_dwork_module({galois::FpLaurent::parse("t^(-3)", 3, 0)});
  Check c;
  std::vector<std::pair<Rational, Rational>> pts;
  for (const Rational& r : {q(3, 4), q(1), q(2)}) {
    const Rational s = diffmod::scale_report(m, 0, r).scale_logp();
    c.expect(s == 3 * r - 1, "scale at r=" + r.get_str() + " is " + s.get_str());
    pts.emplace_back(r, s);
  }
  const swan::BreakFit fit = swan::fit_highest_break(pts, 1);
  c.expect(fit.mode == swan::FitMode::Affine && fit.b == 3 && fit.intercept == -1, "fit is not 3r - 1");
  swan::BreakOptions opts;
  opts.rs = {q(3, 4), q(1), q(2)};
  const swan::SwanReport r = swan::break_multiset(m, opts);
  c.expect(!r.ok && !r.swan && !r.diagnostics.empty(), "reported as a conductor");
  return c.result("naive lift of t^-3 at p=3: scale_logp = 3r - 1 on {3/4, 1, 2}");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"Kato agreement corpus", kato_agreement},
      {"Hasse-Arf integrality", hasse_arf},
      {"tame base change", tame_base_change},
      {"rotation lemma", rotation},
      {"generic rotation", generic_rotation},
      {"pullback multiset laws", pullback_laws},
      {"Newton polygon additivity", np_additivity},
      {"Hensel factorization soundness", hensel},
      {"estimator cross-check", estimator},
      {"concavity and three circles", concavity_three_circles},
      {"negative control", negative_control},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %-32s %s  %s [%.1fs]\n", i + 1, criteria[i].first, r.pass ? "PASS" : "FAIL",
                r.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !r.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
