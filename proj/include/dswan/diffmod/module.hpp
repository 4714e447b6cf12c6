#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dswan/diffmod/matrix.hpp"
#include "dswan/ore/twisted.hpp"

namespace dswan::diffmod {

/// A differential module of rank d: one d x d matrix N_i per axis, acting on
/// a basis e by d_i(e c) = e (N_i c + d_i c).
class DiffModule {
 public:
  DiffModule() = default;
  /// Throws PreconditionError unless there is one d x d matrix per axis.
  DiffModule(const Context& ctx, std::vector<RatMatrix> matrices);

  /// The zero connection of rank d.
  static DiffModule trivial(const Context& ctx, std::size_t d);
  /// Rank one with N_i = (g_i).
  static DiffModule rank_one(const Context& ctx, const std::vector<RatFunc>& g);
  /// Rank one with N_i = (pi * d_i x); requires ctx.uses_pi.
  static DiffModule dwork(const Context& ctx, const LaurentPoly& x);

  const Context& context() const { return ctx_; }
  std::size_t rank() const { return rank_; }
  const std::vector<RatMatrix>& matrices() const { return n_; }
  const RatMatrix& matrix(unsigned axis) const { return n_.at(axis); }

  /// d_axis applied to the coordinate vector c: N c + d c.
  Vec apply(unsigned axis, const Vec& c) const;

  friend bool operator==(const DiffModule& a, const DiffModule& b) {
    return a.ctx_ == b.ctx_ && a.n_ == b.n_;
  }

 private:
  Context ctx_;
  std::size_t rank_ = 0;
  std::vector<RatMatrix> n_;
};

struct IntegrabilityReport {
  bool ok = true;
  /// First failing pair (i < j) and entry, with the nonzero defect there.
  unsigned i = 0, j = 0;
  std::size_t row = 0, col = 0;
  std::optional<RatFunc> witness;
};

/// Exact test of N_i N_j + d_i N_j = N_j N_i + d_j N_i for all i < j.
IntegrabilityReport check_integrability(const DiffModule& m);

DiffModule direct_sum(const DiffModule& a, const DiffModule& b);

/// Module in the basis e B: N' = B^-1 (N B + d B).
DiffModule change_basis(const DiffModule& m, const RatMatrix& b);

/// Searches for v with v, dv, ..., d^(d-1) v independent: e_1, then
/// e_1 + t^a e_2 + t^2a e_3 + ... for a in {0,1,2}, then u-monomial
/// multipliers, then seeded random sparse vectors; 64 candidates in all.
/// Throws PreconditionError when the budget is exhausted.
Vec cyclic_vector(const DiffModule& m, unsigned axis, unsigned long seed = 0);

/// The matrix [v, dv, ..., d^(d-1) v] (columns).
RatMatrix wronskian(const DiffModule& m, unsigned axis, const Vec& v);

/// Monic P of degree d with P(d) v = 0 for a cyclic vector v, over the
/// twisted ring of the axis at radius r.
ore::TwistedPoly char_twisted_poly(const DiffModule& m, unsigned axis, const Rational& r,
                                   unsigned long seed = 0);

/// P(d) applied to v (used to verify characteristic polynomials).
Vec apply_poly(const DiffModule& m, const ore::TwistedPoly& p, const Vec& v);

}  // namespace dswan::diffmod
