#pragma once

#include <string>

namespace dswan {

/// Ambient data shared by every element: the residue characteristic p, the
/// number n of u-variables, and whether coefficients may involve pi with
/// pi^(p-1) = -p. Axes are numbered 0..n internally; axis n is t.
struct Context {
  unsigned p = 2;
  unsigned n = 0;
  bool uses_pi = false;

  unsigned num_axes() const { return n + 1; }
  unsigned t_axis() const { return n; }
  bool is_t_axis(unsigned axis) const { return axis == n; }

  /// "u1".."un" or "t".
  std::string axis_name(unsigned axis) const;

  /// Throws PreconditionError unless p is prime.
  void validate() const;

  friend bool operator==(const Context&, const Context&) = default;
};

bool is_prime(unsigned p);

}  // namespace dswan
