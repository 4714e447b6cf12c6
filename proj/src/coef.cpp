#include "dswan/coef.hpp"

#include <stdexcept>

#include "dswan/error.hpp"

namespace dswan {

namespace {

// Number of coordinates of the normal form: pi has degree p-1 over Q.
std::size_t degree(unsigned p) { return p - 1; }

}  // namespace

Coef Coef::pi(unsigned p) {
  if (p == 2) return Coef(2, -2);
  Coef c(p);
  c.c_.assign(2, Rational(0));
  c.c_[1] = 1;
  return c;
}

Coef Coef::from_coords(unsigned p, std::vector<Rational> coords) {
  Coef c(p);
  c.c_ = std::move(coords);
  if (c.c_.empty()) c.c_.emplace_back(0);
  c.normalize();
  return c;
}

void Coef::normalize() {
  const std::size_t deg = degree(p_);
  // pi^k = -p pi^(k - (p-1)) for k >= p-1.
  for (std::size_t k = c_.size(); k-- > deg;) {
    if (c_[k] != 0) c_[k - deg] -= c_[k] * p_;
  }
  if (c_.size() > deg) c_.resize(std::max<std::size_t>(deg, 1));
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

bool Coef::is_zero() const { return c_.size() == 1 && c_[0] == 0; }

bool Coef::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Coef Coef::operator-() const {
  Coef r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Coef& Coef::operator+=(const Coef& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Coef& Coef::operator-=(const Coef& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Coef& Coef::operator*=(const Coef& o) {
  if (c_.size() == 1 && o.c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  normalize();
  return *this;
}

bool operator==(const Coef& a, const Coef& b) { return a.c_ == b.c_; }

Coef Coef::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero coefficient");
  if (c_.size() == 1) return Coef(p_, 1 / c_[0]);
  // Solve (this) * x = 1 in the basis 1, pi, ..., pi^(p-2).
  const std::size_t m = degree(p_);
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, 0));
  Coef basis(p_, 1);
  for (std::size_t col = 0; col < m; ++col) {
    Coef img = *this * basis;
    for (std::size_t row = 0; row < img.c_.size(); ++row) a[row][col] = img.c_[row];
    basis *= pi(p_);
  }
  a[0][m] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::logic_error("singular multiplication matrix in Q(pi)");
    std::swap(a[piv], a[col]);
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= m; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> x(m);
  for (std::size_t k = 0; k < m; ++k) x[k] = a[k][m] / a[k][k];
  return from_coords(p_, std::move(x));
}

std::string Coef::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::string out;
  int nonzero = 0;
  for (const auto& x : c_)
    if (x != 0) ++nonzero;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& x = c_[k];
    if (x == 0) continue;
    std::string mag = Rational(abs(x)).get_str();
    std::string piece;
    if (k == 0) {
      piece = mag;
    } else {
      std::string pw = k == 1 ? "pi" : "pi^" + std::to_string(k);
      piece = (abs(x) == 1) ? pw : mag + "*" + pw;
    }
    if (out.empty())
      out = (x < 0 ? "-" : "") + piece;
    else
      out += (x < 0 ? "-" : "+") + piece;
  }
  return nonzero > 1 ? "(" + out + ")" : out;
}

Valuation val_coef(const Coef& c) {
  if (c.is_zero()) return Valuation::infinity();
  const unsigned p = c.p();
  Valuation best;
  const auto& xs = c.coords();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] == 0) continue;
    Rational v = Rational(vp(xs[k], p)) + make_rational(static_cast<long>(k), p - 1);
    best = min(best, Valuation(v));
  }
  return best;
}

}  // namespace dswan
