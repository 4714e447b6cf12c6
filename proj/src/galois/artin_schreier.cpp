#include "dswan/galois/artin_schreier.hpp"

#include <numeric>

#include "dswan/error.hpp"
#include "dswan/expr.hpp"

namespace dswan::galois {

namespace {

long mod(long a, unsigned p) {
  long r = a % static_cast<long>(p);
  return r < 0 ? r + p : r;
}

unsigned residue(const Rational& q, unsigned p) {
  const Integer pp = p;
  Integer den = q.get_den();
  if (den % pp == 0) throw PreconditionError("coefficient " + q.get_str() + " is not p-integral");
  Integer num = q.get_num() % pp;
  den %= pp;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  Integer r = (num * inv) % pp;
  if (r < 0) r += pp;
  return static_cast<unsigned>(r.get_ui());
}

}  // namespace

FpLaurent FpLaurent::from_laurent(const LaurentPoly& f) {
  const Context& ctx = f.context();
  FpLaurent out(ctx.p, ctx.n);
  for (const auto& [e, c] : f.terms()) {
    if (!c.is_rational()) throw PreconditionError("character coefficients must be rational");
    for (unsigned i = 0; i < ctx.n; ++i)
      if (e[i] < 0) throw PreconditionError("negative exponent of a residue variable");
    out.add_term(e, residue(c.rational(), ctx.p));
  }
  return out;
}

FpLaurent FpLaurent::parse(std::string_view text, unsigned p, unsigned n) {
  return from_laurent(parse_laurent(text, Context{p, n, false}));
}

void FpLaurent::add_term(const Exponent& e, long c) {
  c = mod(c, p_);
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, static_cast<unsigned>(c));
    return;
  }
  long s = mod(static_cast<long>(it->second) + c, p_);
  if (s == 0)
    terms_.erase(it);
  else
    it->second = static_cast<unsigned>(s);
}

FpLaurent FpLaurent::operator-() const {
  FpLaurent out(p_, n_);
  for (const auto& [e, c] : terms_) out.add_term(e, -static_cast<long>(c));
  return out;
}

FpLaurent operator+(const FpLaurent& a, const FpLaurent& b) {
  FpLaurent out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

FpLaurent operator-(const FpLaurent& a, const FpLaurent& b) { return a + (-b); }

FpLaurent operator*(const FpLaurent& a, const FpLaurent& b) {
  FpLaurent out(a.p_, a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, static_cast<long>(ca) * cb);
    }
  return out;
}

FpLaurent FpLaurent::frobenius() const {
  FpLaurent out(p_, n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (auto& x : f) x *= static_cast<int>(p_);
    out.add_term(f, c);
  }
  return out;
}

FpLaurent FpLaurent::t_power(unsigned n) const {
  FpLaurent out(p_, n_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.back() *= static_cast<int>(n);
    out.add_term(f, c);
  }
  return out;
}

int FpLaurent::t_order() const {
  if (terms_.empty()) throw PreconditionError("t-order of zero");
  int lo = terms_.begin()->first.back();
  for (const auto& [e, c] : terms_) lo = std::min(lo, e.back());
  return lo;
}

FpLaurent FpLaurent::t_coefficient(int j) const {
  FpLaurent out(p_, n_);
  for (const auto& [e, c] : terms_)
    if (e.back() == j) {
      Exponent f = e;
      f.back() = 0;
      out.add_term(f, c);
    }
  return out;
}

LaurentPoly FpLaurent::lift() const {
  const Context ctx{p_, n_, true};
  LaurentPoly x(ctx);
  for (const auto& [e, c] : terms_) x.add_term(e, Coef(p_, static_cast<long>(c)));
  return x;
}

std::string FpLaurent::to_string() const {
  LaurentPoly x(Context{p_, n_, false});
  for (const auto& [e, c] : terms_) x.add_term(e, Coef(p_, static_cast<long>(c)));
  std::string s = x.to_string();
  // residue variables print as u_k; characters use b_k
  for (auto& ch : s)
    if (ch == 'u') ch = 'b';
  return s;
}

KatoReport as_reduce(const ASCharacter& chi) {
  const unsigned p = chi.p();
  KatoReport rep;
  rep.reduced = chi.f;
  rep.witness = FpLaurent(p, chi.n());
  while (true) {
    if (rep.reduced.is_zero()) {
      rep.steps.push_back("f = 0");
      rep.swan = 0;
      return rep;
    }
    const int m = -rep.reduced.t_order();
    if (m <= 0) {
      rep.steps.push_back("no pole: swan 0");
      rep.swan = 0;
      return rep;
    }
    if (m % static_cast<int>(p) != 0) {
      rep.steps.push_back("pole order " + std::to_string(m) + " prime to p: swan " + std::to_string(m));
      rep.swan = static_cast<unsigned>(m);
      return rep;
    }
    const FpLaurent lead = rep.reduced.t_coefficient(-m);
    FpLaurent root(p, chi.n()), rest(p, chi.n());
    for (const auto& [e, c] : lead.terms()) {
      bool power = true;
      for (unsigned i = 0; i < chi.n(); ++i) power = power && e[i] % static_cast<int>(p) == 0;
      if (power) {
        Exponent r = e;
        for (unsigned i = 0; i < chi.n(); ++i) r[i] /= static_cast<int>(p);
        r.back() = -m / static_cast<int>(p);
        root.add_term(r, c);
      } else {
        rest.add_term(e, c);
      }
    }
    if (!root.is_zero()) {
      rep.reduced = rep.reduced - (root.frobenius() - root);
      rep.witness = rep.witness + root;
      rep.steps.push_back("subtract y^p - y for y = " + root.to_string());
    }
    if (!rest.is_zero()) {
      rep.steps.push_back("leading coefficient " + rest.to_string() + " is not a p-th power: swan " +
                          std::to_string(m));
      rep.swan = static_cast<unsigned>(m);
      rep.obstruction = rest;
      return rep;
    }
  }
}

unsigned kato_swan(const ASCharacter& chi) { return as_reduce(chi).swan; }

diffmod::DiffModule dwork_module(const KatoReport& report) {
  const Context ctx{report.reduced.p(), report.reduced.n(), true};
  return diffmod::DiffModule::dwork(ctx, report.reduced.lift());
}

diffmod::DiffModule naive_dwork_module(const ASCharacter& chi) {
  const Context ctx{chi.p(), chi.n(), true};
  return diffmod::DiffModule::dwork(ctx, chi.f.lift());
}

Comparison compare(const ASCharacter& chi, const swan::BreakOptions& opts) {
  Comparison out;
  out.kato = as_reduce(chi);
  out.differential = swan::break_multiset(dwork_module(out.kato), opts);
  out.equal = out.differential.ok && out.differential.swan == Rational(out.kato.swan);
  if (!(out.kato.reduced == chi.f)) out.naive = swan::break_multiset(naive_dwork_module(chi), opts);
  return out;
}

ASCharacter tame_twist(const ASCharacter& chi, unsigned n) {
  if (n == 0 || std::gcd(n, chi.p()) != 1) throw PreconditionError("tame twist needs N >= 1 prime to p");
  return {chi.f.t_power(n)};
}

ASCharacter random_character(std::mt19937_64& rng, unsigned p, unsigned n, int min_degree, bool p_divisible) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  FpLaurent f(p, n);
  while (f.is_zero()) {
    const long terms = pick(1, 4);
    for (long k = 0; k < terms; ++k) {
      Exponent e(n + 1, 0);
      for (unsigned i = 0; i < n; ++i) e[i] = static_cast<int>(pick(0, 2 * p - 1));
      e[n] = static_cast<int>(pick(min_degree, 1));
      f.add_term(e, pick(1, p - 1));
    }
  }
  if (p_divisible) {
    if (n == 0) throw PreconditionError("a p-divisible conductor needs a residue variable");
    const int kmax = std::max(1, -min_degree / static_cast<int>(p));
    const int j = -static_cast<int>(p) * static_cast<int>(pick(1, kmax));
    // drop everything at or below t^j, then add a non-p-th-power monomial
    FpLaurent g(p, n);
    for (const auto& [e, c] : f.terms())
      if (e.back() > j) g.add_term(e, c);
    Exponent e(n + 1, 0);
    for (unsigned i = 0; i < n; ++i) e[i] = static_cast<int>(pick(0, 2 * p - 1));
    if (e[0] % static_cast<int>(p) == 0) e[0] += 1;
    e[n] = j;
    g.add_term(e, pick(1, p - 1));
    f = g;
  }
  return {f};
}

}  // namespace dswan::galois
