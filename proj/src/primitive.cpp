#include "parawave/primitive.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "parawave/errors.hpp"

namespace parawave {

LaurentMatrix make_primitive(std::span<const cplx> v) {
  const int m = static_cast<int>(v.size());
  if (m < 1)
    throw InvalidArgument("make_primitive: empty vector");
  double norm2 = 0.0;
  for (const cplx &c : v)
    norm2 += std::norm(c);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
    throw NotUnit("make_primitive: vector norm deviates from 1");
  LaurentMatrix out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cplx p = v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
      std::vector<cplx> coeffs{(i == j ? cplx{1.0, 0.0} : cplx{}) - p, p};
      out.at(i, j) = LaurentPoly(0, std::move(coeffs));
    }
  return out;
}

LaurentMatrix synthesize(const PrimitiveFactorization &f) {
  LaurentMatrix acc = f.tail_unitary;
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
    acc = make_primitive(it->v) * acc;
  return acc;
}

PrimitiveFactorization extract_factors(const LaurentMatrix &a, double tol) {
  if (!a.square())
    throw DimensionMismatch("extract_factors: matrix not square");
  const int m = a.rows();
  const int d = det_monomial(a, std::sqrt(tol)).second;
  if (d < 0)
    throw DegreeStuck("extract_factors: negative determinant degree");

  PrimitiveFactorization out;
  LaurentMatrix b = trim(a, 0.0);
  for (int step = 0; step < d; ++step) {
    const int hi = b.hi();
    if (hi <= 0)
      throw DegreeStuck("extract_factors: matrix became constant early");
    Eigen::MatrixXcd top(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        top(r, c) = b.at(r, c).coeff(hi);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(top, Eigen::ComputeFullU);
    Eigen::VectorXcd v = svd.matrixU().col(0);
    // deterministic phase: rotate the largest component to the positive
    // real axis (lowest index on ties)
    int imax = 0;
    for (int i = 1; i < m; ++i)
      if (std::abs(v(i)) > std::abs(v(imax)) + 1e-15)
        imax = i;
    if (std::abs(v(imax)) > 0)
      v *= std::conj(v(imax)) / std::abs(v(imax));

    std::vector<cplx> vv(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
      vv[static_cast<size_t>(i)] = v(i);
    // multiply by the factor adjoint V(1/z)* = I - vv* + vv* z^{-1}
    LaurentMatrix vt(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        cplx p = vv[static_cast<size_t>(i)] * std::conj(vv[static_cast<size_t>(j)]);
        vt.at(i, j) = LaurentPoly(-1, {p, (i == j ? cplx{1.0, 0.0} : cplx{}) - p});
      }
    b = trim(vt * b, tol);
    if (b.lo() < 0 || b.hi() < b.lo())
      throw DegreeStuck("extract_factors: step " + std::to_string(step + 1) +
                        " failed to reduce the degree (input not paraunitary "
                        "within tolerance?)");
    out.factors.push_back(PrimitiveFactor{std::move(vv)});
  }

  if (b.span() != 0 || b.hi() != 0)
    throw DegreeStuck("extract_factors: residual matrix not constant after " +
                      std::to_string(d) + " factors");
  if (unitarity_residual(b, 1.0) > 100 * std::max(tol, 1e-12))
    throw DegreeStuck("extract_factors: terminal matrix not unitary");
  out.tail_unitary = b;
  return out;
}

} // namespace parawave
