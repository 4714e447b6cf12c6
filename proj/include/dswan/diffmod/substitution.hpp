#pragma once

#include <vector>

#include "dswan/diffmod/module.hpp"

namespace dswan::diffmod {

/// A ring map g* sending the coordinates u_1..u_n, t of a source context to
/// rational functions over a target context (which may have more
/// u-variables, as for the generic rotation).
class Substitution {
 public:
  Substitution() = default;
  /// images: one per source coordinate (u_1..u_n, t), all in `target`.
  Substitution(const Context& source, const Context& target, std::vector<RatFunc> images);

  static Substitution identity(const Context& ctx);
  /// t -> t^N.
  static Substitution tame(const Context& ctx, unsigned n);
  /// t -> t^(p^N).
  static Substitution frobenius(const Context& ctx, unsigned n);
  /// u_i -> u_i + t (axis = i, 0-based).
  static Substitution rotation(const Context& ctx, unsigned axis);
  /// u_i -> u_i^p + v_i t^(p-1), t -> t^p / (1 - t^(p-1)), with the new
  /// variables v_i appended as u_{n+1}..u_{2n} of the target.
  static Substitution generic_rotation(const Context& ctx);

  const Context& source() const { return source_; }
  const Context& target() const { return target_; }
  const std::vector<RatFunc>& images() const { return images_; }
  /// jacobian()(k, j) = d(image_j) / d(x'_k).
  const RatMatrix& jacobian() const { return jac_; }

  RatFunc apply(const RatFunc& f) const { return f.substitute(images_); }

 private:
  Context source_, target_;
  std::vector<RatFunc> images_;
  RatMatrix jac_;
};

/// g* M: N'_k = sum_j (d image_j / d x'_k) g*(N_j).
DiffModule pullback(const DiffModule& m, const Substitution& s);

}  // namespace dswan::diffmod
