#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dswan/diffmod/module.hpp"
#include "dswan/swan/breaks.hpp"

namespace dswan::galois {

/// Laurent polynomial in t over F_p[b_1..b_n] (b-exponents nonnegative).
/// Exponent vectors are (i_1..i_n, j) as for LaurentPoly; coefficients are
/// kept in 1..p-1.
class FpLaurent {
 public:
  using Terms = std::map<Exponent, unsigned>;

  FpLaurent() = default;
  FpLaurent(unsigned p, unsigned n) : p_(p), n_(n) {}

  /// Reduces a rational Laurent polynomial mod p; throws PreconditionError
  /// when a denominator is divisible by p, a b-exponent is negative, or a
  /// coefficient involves pi.
  static FpLaurent from_laurent(const LaurentPoly& f);
  /// Parses with the expression grammar (b1..bn, t).
  static FpLaurent parse(std::string_view text, unsigned p, unsigned n);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, long c);
  FpLaurent operator-() const;
  friend FpLaurent operator+(const FpLaurent& a, const FpLaurent& b);
  friend FpLaurent operator-(const FpLaurent& a, const FpLaurent& b);
  friend FpLaurent operator*(const FpLaurent& a, const FpLaurent& b);
  friend bool operator==(const FpLaurent& a, const FpLaurent& b) = default;

  /// y^p (exponents times p; F_p coefficients are fixed by Frobenius).
  FpLaurent frobenius() const;
  /// t -> t^N.
  FpLaurent t_power(unsigned n) const;
  /// Smallest t-exponent; requires nonzero.
  int t_order() const;
  /// The coefficient of t^j as a polynomial in b (t-exponent set to 0).
  FpLaurent t_coefficient(int j) const;

  /// Integer lift with coefficients in 0..p-1 over the pi-extended context.
  LaurentPoly lift() const;
  /// Expression text with b1..bn and t; "0" when zero.
  std::string to_string() const;

 private:
  unsigned p_ = 2, n_ = 0;
  Terms terms_;
};

struct ASCharacter {
  FpLaurent f;
  unsigned p() const { return f.p(); }
  unsigned n() const { return f.n(); }
  friend bool operator==(const ASCharacter&, const ASCharacter&) = default;
};

struct KatoReport {
  unsigned swan = 0;
  FpLaurent reduced;
  FpLaurent witness;  ///< y with f - reduced = y^p - y
  std::vector<std::string> steps;
  /// Leading coefficient of the reduced form when p | swan > 0; it is not a
  /// p-th power in k.
  std::optional<FpLaurent> obstruction;
  friend bool operator==(const KatoReport&, const KatoReport&) = default;
};

/// Artin-Schreier reduction to a representative of least pole order.
KatoReport as_reduce(const ASCharacter& chi);
unsigned kato_swan(const ASCharacter& chi);

/// Rank-one module with N_i = pi d_i(x) for the integer lift x of the
/// reduced representative, over Context{p, n, uses_pi = true}.
diffmod::DiffModule dwork_module(const KatoReport& report);
/// Same construction applied to f itself (negative control).
diffmod::DiffModule naive_dwork_module(const ASCharacter& chi);

struct Comparison {
  KatoReport kato;
  swan::SwanReport differential;
  bool equal = false;
  /// The unreduced lift, recorded only when it differs from the reduced one.
  std::optional<swan::SwanReport> naive;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

Comparison compare(const ASCharacter& chi, const swan::BreakOptions& opts = {});

/// t -> t^N; requires gcd(N, p) = 1.
ASCharacter tame_twist(const ASCharacter& chi, unsigned n);

/// Random character with t-degrees in [min_degree, 1] and b-degrees below
/// 2p. With `p_divisible` (needs n >= 1), the leading term is a b-monomial
/// that is not a p-th power times t^(-p k), so the conductor is divisible
/// by p.
ASCharacter random_character(std::mt19937_64& rng, unsigned p, unsigned n, int min_degree,
                             bool p_divisible = false);

}  // namespace dswan::galois
