#include "parawave/wavelet_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "parawave/errors.hpp"

namespace parawave {

WaveletMatrix::WaveletMatrix(int m, int genus, std::vector<cplx> coeffs)
    : m_(m), genus_(genus), coeffs_(std::move(coeffs)) {
  if (m < 2)
    throw InvalidArgument("WaveletMatrix: rank must be >= 2");
  if (genus < 1)
    throw InvalidArgument("WaveletMatrix: genus must be >= 1");
  if (coeffs_.size() != static_cast<size_t>(m) * m * genus)
    throw DimensionMismatch("WaveletMatrix: coefficient count != m*m*genus");
}

ValidationReport validate(const WaveletMatrix &w) {
  const int m = w.rank();
  const int len = w.taps();
  ValidationReport rep;

  // quadratic condition: sum_j a^r_{j+mt} conj(a^s_j) = m delta_rs delta_t0
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int t = -(w.genus() - 1); t <= w.genus() - 1; ++t) {
        cplx sum{};
        const int jlo = std::max(0, -m * t);
        const int jhi = std::min(len - 1, len - 1 - m * t);
        for (int j = jlo; j <= jhi; ++j)
          sum += w.a(r, j + m * t) * std::conj(w.a(s, j));
        if (r == s && t == 0)
          sum -= static_cast<double>(m);
        rep.quad_residual = std::max(rep.quad_residual, std::abs(sum));
      }

  for (int r = 0; r < m; ++r) {
    cplx sum{};
    for (int j = 0; j < len; ++j)
      sum += w.a(r, j);
    if (r == 0)
      sum -= static_cast<double>(m);
    rep.linear_residual = std::max(rep.linear_residual, std::abs(sum));
  }

  DetMonomial det = det_monomial_info(to_polyphase(w));
  rep.degree = det.degree;
  rep.det_const = det.coeff;
  rep.det_residual = det.residual;
  return rep;
}

PolyphaseResiduals polyphase_residuals(const LaurentMatrix &a, int m) {
  PolyphaseResiduals out;
  LaurentMatrix diff =
      a * adjoint(a) - cplx(static_cast<double>(m), 0.0) * LaurentMatrix::identity(m);
  out.quad_residual = diff.max_abs_coeff();
  std::vector<cplx> at1 = a.eval(cplx{1.0, 0.0});
  for (int r = 0; r < m; ++r) {
    cplx sum{};
    for (int c = 0; c < m; ++c)
      sum += at1[static_cast<size_t>(r) * m + c];
    if (r == 0)
      sum -= static_cast<double>(m);
    out.linear_residual = std::max(out.linear_residual, std::abs(sum));
  }
  return out;
}

PolyphaseResiduals polyphase_residuals(const WaveletMatrix &w) {
  return polyphase_residuals(to_polyphase(w), w.rank());
}

LaurentMatrix to_polyphase(const WaveletMatrix &w) {
  const int m = w.rank();
  LaurentMatrix a(m, m);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      std::vector<cplx> coeffs(static_cast<size_t>(w.genus()));
      for (int k = 0; k < w.genus(); ++k)
        coeffs[static_cast<size_t>(k)] = w.a(r, k * m + s);
      a.at(r, s) = LaurentPoly(0, std::move(coeffs));
    }
  return a;
}

WaveletMatrix from_polyphase(const LaurentMatrix &a, int genus_hint) {
  if (!a.square())
    throw DimensionMismatch("from_polyphase: matrix not square");
  if (a.lo() < 0)
    throw NegativePowers("from_polyphase: negative powers present");
  const int m = a.rows();
  const int genus = std::max({a.hi() + 1, genus_hint, 1});
  std::vector<cplx> coeffs(static_cast<size_t>(m) * m * genus);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int k = 0; k <= a.at(r, s).hi(); ++k)
        coeffs[static_cast<size_t>(r) * m * genus + k * m + s] =
            a.at(r, s).coeff(k);
  return {m, genus, std::move(coeffs)};
}

int degree(const WaveletMatrix &w, double tol) {
  return det_monomial(to_polyphase(w), tol).second;
}

namespace {

LaurentMatrix prefix_for(const std::vector<cplx> &x, int m) {
  // sigma rotates x_1 to the positive real axis; the Householder reflector
  // then maps x to sigma*m*e_1, and the final diagonal removes sigma.
  cplx sigma{1.0, 0.0};
  if (std::abs(x[0]) >= 1e-14)
    sigma = x[0] / std::abs(x[0]);
  std::vector<cplx> u = x;
  u[0] -= sigma * static_cast<double>(m);
  double uu = 0.0;
  for (const cplx &v : u)
    uu += std::norm(v);
  std::vector<cplx> h(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    h[static_cast<size_t>(i) * m + i] = 1.0;
  if (uu > 1e-28)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        h[static_cast<size_t>(i) * m + j] -=
            2.0 * u[static_cast<size_t>(i)] * std::conj(u[static_cast<size_t>(j)]) / uu;
  for (int j = 0; j < m; ++j)
    h[static_cast<size_t>(j)] *= std::conj(sigma);
  return LaurentMatrix::constant(m, m, h);
}

} // namespace

LaurentMatrix unitary_prefix(const LaurentMatrix &a, double tol) {
  if (!a.square())
    throw DimensionMismatch("unitary_prefix: matrix not square");
  const int m = a.rows();
  std::vector<cplx> at1 = a.eval(cplx{1.0, 0.0});
  std::vector<cplx> x(static_cast<size_t>(m));
  double norm2 = 0.0;
  for (int r = 0; r < m; ++r) {
    cplx sum{};
    for (int c = 0; c < m; ++c)
      sum += at1[static_cast<size_t>(r) * m + c];
    x[static_cast<size_t>(r)] = sum;
    norm2 += std::norm(sum);
  }
  if (std::abs(std::sqrt(norm2) - m) > tol)
    throw NotParaunitary("unitary_prefix: ||A(1) ones|| deviates from m");
  return prefix_for(x, m);
}

LaurentMatrix canonical_prefix(int m) {
  std::vector<cplx> x(static_cast<size_t>(m), cplx{std::sqrt(static_cast<double>(m)), 0.0});
  return prefix_for(x, m);
}

WaveletMatrix apply_left_unitary(const LaurentMatrix &u, const WaveletMatrix &w,
                                 double tol) {
  if (!u.square() || u.rows() != w.rank())
    throw DimensionMismatch("apply_left_unitary: size mismatch");
  if (u.lo() < 0 || u.hi() > 0)
    throw NotUnitary("apply_left_unitary: prefix must be constant");
  if (unitarity_residual(u, 1.0) > tol)
    throw NotUnitary("apply_left_unitary: prefix not unitary within tolerance");
  return from_polyphase(u * to_polyphase(w), w.genus());
}

} // namespace parawave
