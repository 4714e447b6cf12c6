#pragma once

#include <vector>

#include "dswan/ratfunc.hpp"

namespace dswan::diffmod {

using Vec = std::vector<RatFunc>;

/// Dense square-or-rectangular matrix over RatFunc, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(const Context& ctx, std::size_t rows, std::size_t cols);
  RatMatrix(const Context& ctx, std::vector<std::vector<RatFunc>> rows);

  static RatMatrix identity(const Context& ctx, std::size_t d);

  const Context& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  Vec column(std::size_t j) const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend Vec operator*(const RatMatrix& a, const Vec& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  RatMatrix scaled(const RatFunc& c) const;

  RatMatrix partial(unsigned axis) const;
  RatMatrix substitute(const std::vector<RatFunc>& images) const;
  /// Minimum Gauss valuation over the entries.
  Valuation gauss_val(const Rational& r) const;

  /// Cofactor expansion; exact and division-free (meant for small sizes).
  RatFunc determinant() const;
  /// Adjugate-based inverse; throws PreconditionError when singular.
  RatMatrix inverse() const;

 private:
  Context ctx_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RatFunc> a_;
};

/// Solves A x = b for square nonsingular A by Cramer's rule.
Vec solve(const RatMatrix& a, const Vec& b);

Vec partial(const Vec& v, unsigned axis);
Vec operator+(const Vec& a, const Vec& b);

}  // namespace dswan::diffmod
