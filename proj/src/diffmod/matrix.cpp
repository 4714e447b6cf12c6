#include "dswan/diffmod/matrix.hpp"

#include "dswan/error.hpp"

namespace dswan::diffmod {

namespace {

void check_shape(bool ok, const char* what) {
  if (!ok) throw PreconditionError(std::string("matrix shape mismatch in ") + what);
}

RatFunc det_rec(const RatMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return RatFunc(m.context(), 1);
  RatFunc acc(m.context());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<long>(k));
      RatFunc minor = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      if (!minor.is_zero()) {
        RatFunc term = m(row, c) * minor;
        acc += sign > 0 ? term : -term;
      }
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

RatMatrix::RatMatrix(const Context& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, RatFunc(ctx)) {}

RatMatrix::RatMatrix(const Context& ctx, std::vector<std::vector<RatFunc>> rows)
    : ctx_(ctx), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  for (auto& row : rows) {
    check_shape(row.size() == cols_, "construction");
    for (auto& x : row) {
      if (!(x.context() == ctx)) throw PreconditionError("matrix entry in the wrong context");
      a_.push_back(std::move(x));
    }
  }
}

RatMatrix RatMatrix::identity(const Context& ctx, std::size_t d) {
  RatMatrix m(ctx, d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = RatFunc(ctx, 1);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec RatMatrix::column(std::size_t j) const {
  Vec v;
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  check_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "sum");
  RatMatrix c = a;
  for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  check_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "difference");
  RatMatrix c = a;
  for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  check_shape(a.cols_ == b.rows_, "product");
  RatMatrix c(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vec operator*(const RatMatrix& a, const Vec& v) {
  check_shape(a.cols_ == v.size(), "matrix-vector product");
  Vec out(a.rows_, RatFunc(a.ctx_));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RatMatrix RatMatrix::scaled(const RatFunc& c) const {
  RatMatrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

RatMatrix RatMatrix::partial(unsigned axis) const {
  RatMatrix m = *this;
  for (auto& x : m.a_) x = x.partial(axis);
  return m;
}

RatMatrix RatMatrix::substitute(const std::vector<RatFunc>& images) const {
  const Context target = images.empty() ? ctx_ : images.front().context();
  RatMatrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].substitute(images);
  return m;
}

Valuation RatMatrix::gauss_val(const Rational& r) const {
  Valuation v;
  for (const auto& x : a_) v = min(v, x.gauss_val(r));
  return v;
}

RatFunc RatMatrix::determinant() const {
  check_shape(rows_ == cols_, "determinant");
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < cols_; ++j) cols.push_back(j);
  return det_rec(*this, cols, 0);
}

RatMatrix RatMatrix::inverse() const {
  check_shape(rows_ == cols_, "inverse");
  const RatFunc det = determinant();
  if (det.is_zero()) throw PreconditionError("singular matrix");
  const RatFunc det_inv = det.inverse();
  const std::size_t n = rows_;
  RatMatrix inv(ctx_, n, n);
  if (n == 1) {
    inv(0, 0) = det_inv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ji goes to inv(i, j)
      RatMatrix minor(ctx_, n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == j) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == i) continue;
          minor(ra, cb++) = (*this)(a, b);
        }
        ++ra;
      }
      RatFunc c = minor.determinant() * det_inv;
      inv(i, j) = (i + j) % 2 == 0 ? c : -c;
    }
  return inv;
}

Vec solve(const RatMatrix& a, const Vec& b) {
  check_shape(a.rows() == a.cols() && a.rows() == b.size(), "solve");
  const RatFunc det = a.determinant();
  if (det.is_zero()) throw PreconditionError("singular linear system");
  Vec x;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    RatMatrix ak = a;
    for (std::size_t i = 0; i < a.rows(); ++i) ak(i, k) = b[i];
    x.push_back(ak.determinant() / det);
  }
  return x;
}

Vec partial(const Vec& v, unsigned axis) {
  Vec out;
  for (const auto& x : v) out.push_back(x.partial(axis));
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  check_shape(a.size() == b.size(), "vector sum");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace dswan::diffmod
