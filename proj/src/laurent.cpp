#include "parawave/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include <Eigen/Dense>

#include "parawave/errors.hpp"

namespace parawave {

namespace {

void trim_zeros(int &lo, std::vector<cplx> &c) {
  size_t begin = 0;
  while (begin < c.size() && c[begin] == cplx{0.0, 0.0})
    ++begin;
  if (begin == c.size()) {
    c.clear();
    lo = 0;
    return;
  }
  size_t end = c.size();
  while (end > begin && c[end - 1] == cplx{0.0, 0.0})
    --end;
  if (begin > 0 || end < c.size()) {
    c = std::vector<cplx>(c.begin() + begin, c.begin() + end);
    lo += static_cast<int>(begin);
  }
}

} // namespace

LaurentPoly::LaurentPoly(int lo, std::vector<cplx> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
  trim_zeros(lo_, coeffs_);
}

LaurentPoly LaurentPoly::constant(cplx value) { return {0, {value}}; }

LaurentPoly LaurentPoly::monomial(cplx value, int power) {
  return {power, {value}};
}

cplx LaurentPoly::coeff(int power) const {
  if (is_zero() || power < lo_ || power > hi())
    return {};
  return coeffs_[static_cast<size_t>(power - lo_)];
}

cplx LaurentPoly::operator()(cplx z) const {
  if (is_zero())
    return {};
  cplx acc{};
  for (size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * z + coeffs_[i];
  if (lo_ > 0)
    acc *= std::pow(z, lo_);
  else if (lo_ < 0)
    acc *= std::pow(cplx{1.0, 0.0} / z, -lo_);
  return acc;
}

double LaurentPoly::max_abs() const {
  double m = 0.0;
  for (const cplx &c : coeffs_)
    m = std::max(m, std::abs(c));
  return m;
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::vector<cplx> c(static_cast<size_t>(hi - lo + 1));
  for (int p = a.lo(); p <= a.hi(); ++p)
    c[static_cast<size_t>(p - lo)] += a.coeff(p);
  for (int p = b.lo(); p <= b.hi(); ++p)
    c[static_cast<size_t>(p - lo)] += b.coeff(p);
  return {lo, std::move(c)};
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
  return a + cplx{-1.0, 0.0} * b;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  std::vector<cplx> c(ca.size() + cb.size() - 1);
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < cb.size(); ++j)
      c[i + j] += ca[i] * cb[j];
  return {a.lo() + b.lo(), std::move(c)};
}

LaurentPoly operator*(cplx s, const LaurentPoly &a) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (cplx &v : c)
    v *= s;
  return {a.lo(), std::move(c)};
}

LaurentPoly tilde(const LaurentPoly &a) {
  std::vector<cplx> c(a.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = std::conj(a.coeffs()[c.size() - 1 - i]);
  return {-a.hi(), std::move(c)};
}

LaurentPoly project(const LaurentPoly &a, int lo, int hi) {
  if (lo > hi)
    throw InvalidArgument("project: lo > hi");
  if (a.is_zero() || a.hi() < lo || a.lo() > hi)
    return {};
  int l = std::max(lo, a.lo());
  int h = std::min(hi, a.hi());
  std::vector<cplx> c(static_cast<size_t>(h - l + 1));
  for (int p = l; p <= h; ++p)
    c[static_cast<size_t>(p - l)] = a.coeff(p);
  return {l, std::move(c)};
}

LaurentPoly trim(const LaurentPoly &a, double tol) {
  int l = a.lo();
  int h = a.hi();
  while (l <= h && std::abs(a.coeff(l)) <= tol)
    ++l;
  while (h >= l && std::abs(a.coeff(h)) <= tol)
    --h;
  if (l > h)
    return {};
  return project(a, l, h);
}

LaurentPoly shift(const LaurentPoly &a, int k) {
  if (a.is_zero())
    return {};
  return {a.lo() + k, {a.coeffs().begin(), a.coeffs().end()}};
}

LaurentMatrix::LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0)
    throw InvalidArgument("LaurentMatrix: non-positive dimensions");
  entries_.resize(static_cast<size_t>(rows) * cols);
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = LaurentPoly::constant(1.0);
  return m;
}

LaurentMatrix LaurentMatrix::constant(int rows, int cols,
                                      std::span<const cplx> values) {
  if (values.size() != static_cast<size_t>(rows) * cols)
    throw DimensionMismatch("constant: value count mismatch");
  LaurentMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      cplx v = values[static_cast<size_t>(r) * cols + c];
      if (v != cplx{})
        m.at(r, c) = LaurentPoly::constant(v);
    }
  return m;
}

int LaurentMatrix::lo() const {
  int l = 0;
  bool any = false;
  for (const LaurentPoly &e : entries_)
    if (!e.is_zero()) {
      l = any ? std::min(l, e.lo()) : e.lo();
      any = true;
    }
  return any ? l : 0;
}

int LaurentMatrix::hi() const {
  int h = 0;
  bool any = false;
  for (const LaurentPoly &e : entries_)
    if (!e.is_zero()) {
      h = any ? std::max(h, e.hi()) : e.hi();
      any = true;
    }
  return any ? h : -1;
}

int LaurentMatrix::span() const {
  int h = hi();
  int l = lo();
  return h >= l ? h - l : 0;
}

double LaurentMatrix::max_abs_coeff() const {
  double m = 0.0;
  for (const LaurentPoly &e : entries_)
    m = std::max(m, e.max_abs());
  return m;
}

std::vector<cplx> LaurentMatrix::eval(cplx z) const {
  std::vector<cplx> v(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i)
    v[i] = entries_[i](z);
  return v;
}

LaurentMatrix operator+(const LaurentMatrix &a, const LaurentMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix add: shape mismatch");
  LaurentMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

LaurentMatrix operator-(const LaurentMatrix &a, const LaurentMatrix &b) {
  return a + cplx{-1.0, 0.0} * b;
}

LaurentMatrix operator*(const LaurentMatrix &a, const LaurentMatrix &b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix mul: inner dimension mismatch");
  LaurentMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      LaurentPoly acc;
      for (int k = 0; k < a.cols(); ++k)
        acc = acc + a.at(i, k) * b.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

LaurentMatrix operator*(cplx s, const LaurentMatrix &a) {
  LaurentMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = s * a.at(i, j);
  return r;
}

LaurentMatrix adjoint(const LaurentMatrix &a) {
  LaurentMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(j, i) = tilde(a.at(i, j));
  return r;
}

LaurentMatrix project(const LaurentMatrix &a, int lo, int hi) {
  LaurentMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = project(a.at(i, j), lo, hi);
  return r;
}

LaurentMatrix trim(const LaurentMatrix &a, double tol) {
  LaurentMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.at(i, j) = trim(a.at(i, j), tol);
  return r;
}

LaurentMatrix shift_row(const LaurentMatrix &a, int row, int k) {
  LaurentMatrix r = a;
  for (int j = 0; j < a.cols(); ++j)
    r.at(row, j) = shift(a.at(row, j), k);
  return r;
}

namespace detail {

int next_pow2(int n) {
  int p = 1;
  while (p < n)
    p *= 2;
  return p;
}

void fft_pow2(std::vector<cplx> &x, int sign) {
  const size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw InvalidArgument("fft_pow2: length must be a power of two");
  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1)
      j ^= bit;
    j ^= bit;
    if (i < j)
      std::swap(x[i], x[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    cplx wl = std::polar(1.0, ang);
    for (size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (size_t k = 0; k < len / 2; ++k) {
        cplx u = x[i + k];
        cplx v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

} // namespace detail

CircleGrid eval_grid(const LaurentMatrix &a, int n) {
  if (n < 2 || (n & (n - 1)) != 0)
    throw InvalidArgument("eval_grid: n must be a power of two >= 2");
  if (n < 2 * a.span() + 2)
    throw GridTooSmall("eval_grid: n < 2*span + 2");
  CircleGrid g;
  g.rows = a.rows();
  g.cols = a.cols();
  g.n = n;
  g.data.assign(static_cast<size_t>(n) * a.rows() * a.cols(), cplx{});
  std::vector<cplx> buf(static_cast<size_t>(n));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      const LaurentPoly &e = a.at(r, c);
      if (e.is_zero())
        continue;
      std::fill(buf.begin(), buf.end(), cplx{});
      for (int p = e.lo(); p <= e.hi(); ++p)
        buf[static_cast<size_t>(((p % n) + n) % n)] += e.coeff(p);
      detail::fft_pow2(buf, +1);
      for (int t = 0; t < n; ++t)
        g.at(t, r, c) = buf[static_cast<size_t>(t)];
    }
  return g;
}

LaurentMatrix coeffs_from_grid(const CircleGrid &grid, int lo, int hi) {
  if (hi - lo + 1 > grid.n)
    throw GridTooSmall("coeffs_from_grid: window wider than grid");
  LaurentMatrix a(grid.rows, grid.cols);
  const int n = grid.n;
  std::vector<cplx> buf(static_cast<size_t>(n));
  for (int r = 0; r < grid.rows; ++r)
    for (int c = 0; c < grid.cols; ++c) {
      for (int t = 0; t < n; ++t)
        buf[static_cast<size_t>(t)] = grid.at(t, r, c);
      detail::fft_pow2(buf, -1);
      std::vector<cplx> coeffs(static_cast<size_t>(hi - lo + 1));
      for (int p = lo; p <= hi; ++p)
        coeffs[static_cast<size_t>(p - lo)] =
            buf[static_cast<size_t>(((p % n) + n) % n)] / static_cast<double>(n);
      a.at(r, c) = LaurentPoly(lo, std::move(coeffs));
    }
  return a;
}

double unitarity_residual(const LaurentMatrix &a, double scale, int n) {
  if (!a.square())
    throw DimensionMismatch("unitarity_residual: matrix not square");
  const int m = a.rows();
  // A(z) A(z)^* is formed pointwise; the default grid resolves the product
  // exactly (span 2*span(A)), so the sampled values are exact evaluations
  if (n == 0)
    n = detail::next_pow2(std::max(4 * a.span() + 2, 8));
  CircleGrid g = eval_grid(a, n);
  double worst = 0.0;
  for (int t = 0; t < n; ++t) {
    double fro2 = 0.0;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        cplx dot{};
        for (int k = 0; k < m; ++k)
          dot += g.at(t, r, k) * std::conj(g.at(t, c, k));
        if (r == c)
          dot -= scale;
        fro2 += std::norm(dot);
      }
    worst = std::max(worst, fro2);
  }
  return std::sqrt(worst);
}

DetMonomial det_monomial_info(const LaurentMatrix &a) {
  if (!a.square())
    throw DimensionMismatch("det_monomial: matrix not square");
  const int m = a.rows();
  const int lo = m * std::min(a.lo(), 0);
  const int hi = m * std::max(a.hi(), 0);
  const int n = detail::next_pow2(std::max(hi - lo + 2, 8));
  CircleGrid g = eval_grid(a, std::max(n, detail::next_pow2(2 * a.span() + 2)));
  std::vector<cplx> dets(static_cast<size_t>(g.n));
  Eigen::MatrixXcd p(m, m);
  for (int t = 0; t < g.n; ++t) {
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        p(r, c) = g.at(t, r, c);
    dets[static_cast<size_t>(t)] = Eigen::PartialPivLU<Eigen::MatrixXcd>(p).determinant();
  }
  DetMonomial out;
  for (const cplx &d : dets)
    out.max_abs = std::max(out.max_abs, std::abs(d));
  detail::fft_pow2(dets, -1);
  double best = -1.0;
  double second = 0.0;
  for (int p2 = lo; p2 <= hi; ++p2) {
    cplx c = dets[static_cast<size_t>(((p2 % g.n) + g.n) % g.n)] /
             static_cast<double>(g.n);
    double mag = std::abs(c);
    if (mag > best) {
      second = std::max(second, best);
      best = mag;
      out.coeff = c;
      out.degree = p2;
    } else {
      second = std::max(second, mag);
    }
  }
  out.residual = best > 0.0 ? second / best : 0.0;
  return out;
}

std::pair<cplx, int> det_monomial(const LaurentMatrix &a, double tol) {
  DetMonomial info = det_monomial_info(a);
  if (info.max_abs < tol)
    throw SingularInput("det_monomial: determinant vanishes on the circle");
  if (info.residual > tol)
    throw NotMonomial("det_monomial: secondary coefficient above tolerance");
  return {info.coeff, info.degree};
}

} // namespace parawave
