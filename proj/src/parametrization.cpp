#include "parawave/parametrization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "parallel.hpp"
#include "parawave/errors.hpp"

namespace parawave {

PhiParams::PhiParams(int m, int g, std::vector<cplx> coeffs)
    : m_(m), g_(g), coeffs_(std::move(coeffs)) {
  if (m < 2)
    throw InvalidArgument("PhiParams: rank must be >= 2");
  if (g < 0)
    throw InvalidArgument("PhiParams: degree must be >= 0");
  if (coeffs_.size() != static_cast<size_t>(m - 1) * g)
    throw DimensionMismatch("PhiParams: coefficient count != (m-1)*g");
}

PhiParams PhiParams::zeros(int m, int g) {
  return {m, g, std::vector<cplx>(static_cast<size_t>(m - 1) * g)};
}

LaurentPoly PhiParams::row(int j) const {
  std::vector<cplx> c(static_cast<size_t>(g_));
  for (int k = 0; k < g_; ++k)
    c[static_cast<size_t>(g_ - 1 - k)] = phi(j, k); // power -(k+1)
  return {-g_, std::move(c)};
}

LaurentMatrix triangular_factor(const PhiParams &p, int sign) {
  const int m = p.rank();
  LaurentMatrix f = LaurentMatrix::identity(m);
  for (int j = 0; j < m - 1; ++j)
    f.at(m - 1, j) = cplx(static_cast<double>(sign), 0.0) * p.row(j);
  return f;
}

LaurentMatrix gram_symbol(const PhiParams &p) {
  const int m = p.rank();
  LaurentMatrix s = LaurentMatrix::identity(m);
  LaurentPoly corner = LaurentPoly::constant(1.0);
  for (int j = 0; j < m - 1; ++j) {
    LaurentPoly phi = p.row(j);
    s.at(m - 1, j) = phi;
    s.at(j, m - 1) = tilde(phi);
    corner = corner + phi * tilde(phi);
  }
  s.at(m - 1, m - 1) = std::move(corner);
  return s;
}

namespace {

using EMat = Eigen::MatrixXcd;
using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Grid-domain state: per-point m x m values, point-major, addressed through
// Eigen maps over the contiguous blocks.
struct GridState {
  int n = 0;
  int m = 0;
  std::vector<cplx> data;

  GridState(int n_, int m_) : n(n_), m(m_), data(size_t(n_) * m_ * m_) {}
  Eigen::Map<RowMat> point(int t) {
    return {data.data() + static_cast<size_t>(t) * m * m, m, m};
  }
  Eigen::Map<const RowMat> point(int t) const {
    return {data.data() + static_cast<size_t>(t) * m * m, m, m};
  }
};

GridState sample(const LaurentMatrix &a, int n) {
  CircleGrid g = eval_grid(a, n);
  GridState out(n, a.rows());
  out.data = std::move(g.data);
  return out;
}

// entrywise transforms between grid values and coefficient bins
void grid_to_bins(const GridState &g, std::vector<cplx> &bins) {
  const int n = g.n, m = g.m;
  bins.resize(g.data.size());
  detail::parallel_for(0, m * m, [&](int rc) {
    std::vector<cplx> buf(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t)
      buf[static_cast<size_t>(t)] = g.data[static_cast<size_t>(t) * m * m + rc];
    detail::fft_pow2(buf, -1);
    for (int k = 0; k < n; ++k)
      bins[static_cast<size_t>(k) * m * m + rc] = buf[static_cast<size_t>(k)] / static_cast<double>(n);
  });
}

void bins_to_grid(const std::vector<cplx> &bins, GridState &g) {
  const int n = g.n, m = g.m;
  detail::parallel_for(0, m * m, [&](int rc) {
    std::vector<cplx> buf(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
      buf[static_cast<size_t>(k)] = bins[static_cast<size_t>(k) * m * m + rc];
    detail::fft_pow2(buf, +1);
    for (int t = 0; t < n; ++t)
      g.data[static_cast<size_t>(t) * m * m + rc] = buf[static_cast<size_t>(t)];
  });
}

LaurentMatrix window_from_bins(const std::vector<cplx> &bins, int n, int m,
                               int lo, int hi) {
  LaurentMatrix a(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      std::vector<cplx> coeffs(static_cast<size_t>(hi - lo + 1));
      for (int p = lo; p <= hi; ++p)
        coeffs[static_cast<size_t>(p - lo)] =
            bins[(static_cast<size_t>(((p % n) + n) % n) * m + r) * m + c];
      a.at(r, c) = LaurentPoly(lo, std::move(coeffs));
    }
  return a;
}

// max over sample points of ||A A* - S||_F, on a grid fine enough to make
// the sampled values exact evaluations of the residual polynomial
double sampled_residual(const LaurentMatrix &a, const LaurentMatrix &s) {
  const int span = std::max(2 * a.span(), s.span());
  const int n = detail::next_pow2(std::max(2 * span + 2, 8));
  GridState ag = sample(a, n);
  GridState sg = sample(s, n);
  std::vector<double> per_point(static_cast<size_t>(n));
  detail::parallel_for(0, n, [&](int t) {
    per_point[static_cast<size_t>(t)] =
        (ag.point(t) * ag.point(t).adjoint() - sg.point(t)).norm();
  });
  double worst = 0.0;
  for (double v : per_point)
    worst = std::max(worst, v);
  return worst;
}

// Newton pass on a fixed grid. Convergence is tracked through the deviation
// of T = A^{-1} S A^{-*} from the identity, which is available for free;
// ||A A* - S|| <= ||S||_2 * ||T - I||_F up to the approximation error of A.
void wilson_iterate(const GridState &sgrid, GridState &agrid, double t_target,
                    int max_iterations, int &used) {
  const int n = agrid.n, m = agrid.m;
  const int hw = n / 2;
  std::vector<cplx> tbins, abins;
  GridState work(n, m);
  std::vector<double> tdev(static_cast<size_t>(n));
  double prev = -1.0;
  int stalled = 0;
  int it = 0;
  for (; it < max_iterations; ++it) {
    detail::parallel_for(0, n, [&](int t) {
      Eigen::PartialPivLU<EMat> lu(EMat(agrid.point(t)));
      EMat x = lu.solve(EMat(sgrid.point(t)));
      EMat tmat = lu.solve(x.adjoint()).adjoint();
      work.point(t) = tmat;
      tdev[static_cast<size_t>(t)] = (tmat - EMat::Identity(m, m)).norm();
    });
    double dev = 0.0;
    for (double v : tdev)
      dev = std::max(dev, v);

    grid_to_bins(work, tbins);
    // plus-half operator: half of the zero and Nyquist bins, positive
    // powers kept, negative dropped; then the Newton factor G = Y + I/2
    for (int k = hw + 1; k < n; ++k)
      for (int rc = 0; rc < m * m; ++rc)
        tbins[static_cast<size_t>(k) * m * m + rc] = cplx{};
    for (int rc = 0; rc < m * m; ++rc) {
      tbins[static_cast<size_t>(rc)] *= 0.5;
      tbins[static_cast<size_t>(hw) * m * m + rc] *= 0.5;
    }
    for (int d = 0; d < m; ++d)
      tbins[static_cast<size_t>(d) * m + d] += 0.5;
    bins_to_grid(tbins, work);
    detail::parallel_for(0, n, [&](int t) {
      work.point(t) = (EMat(agrid.point(t)) * EMat(work.point(t))).eval();
    });
    // projection to the causal window [0, hw]
    grid_to_bins(work, abins);
    for (int k = hw + 1; k < n; ++k)
      for (int rc = 0; rc < m * m; ++rc)
        abins[static_cast<size_t>(k) * m * m + rc] = cplx{};
    bins_to_grid(abins, agrid);

    if (dev <= t_target)
      break;
    if (prev >= 0.0 && dev > 0.8 * prev) {
      if (++stalled >= 3)
        break;
    } else {
      stalled = 0;
    }
    prev = dev;
  }
  used = it + 1;
}

} // namespace

LaurentMatrix spectral_factor(const LaurentMatrix &s, int g,
                              const SpectralFactorOptions &opts) {
  if (!s.square())
    throw DimensionMismatch("spectral_factor: symbol not square");
  if (s.lo() < -g || s.hi() > g)
    throw InvalidArgument("spectral_factor: symbol powers outside [-g, g]");
  const int m = s.rows();
  const double scale = std::max(1.0, s.max_abs_coeff());

  // init: Cholesky factor of the zero-power coefficient
  EMat s0(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      s0(r, c) = s.at(r, c).coeff(0);
  Eigen::LLT<EMat> llt(s0);
  if (llt.info() != Eigen::Success)
    throw SingularInput("spectral_factor: zero-power block not positive definite");
  EMat a0 = llt.matrixL();
  std::vector<cplx> rowmajor(static_cast<size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      rowmajor[static_cast<size_t>(r) * m + c] = a0(r, c);
  LaurentMatrix a = LaurentMatrix::constant(m, m, rowmajor);

  int n = opts.grid > 0 ? opts.grid
                        : detail::next_pow2(std::max(8 * (g + 1), 2 * s.span() + 2));
  // ||T - I|| target implied by the residual target (see wilson_iterate)
  double s_norm = 1.0;
  {
    GridState sg = sample(s, detail::next_pow2(std::max(2 * s.span() + 2, 8)));
    for (int t = 0; t < sg.n; ++t)
      s_norm = std::max(s_norm, sg.point(t).norm());
  }

  double best_exact = -1.0;
  int iterations_used = 0;
  while (true) {
    GridState sgrid = sample(s, n);
    GridState agrid = sample(a, n);
    const double t_target = 0.1 * opts.tol * scale / s_norm;
    int used = 0;
    wilson_iterate(sgrid, agrid, t_target, opts.max_iterations, used);
    iterations_used += used;
    std::fprintf(stderr, "[wilson] n=%d iters=%d t_target=%.2e\n", n, used, t_target);

    std::vector<cplx> abins;
    grid_to_bins(agrid, abins);
    LaurentMatrix cand = trim(window_from_bins(abins, n, m, 0, g), 1e-300);
    double exact = sampled_residual(cand, s);
    std::fprintf(stderr, "[wilson] exact=%.2e accept_at=%.2e\n", exact, opts.tol * scale);
    if (best_exact < 0.0 || exact < best_exact) {
      best_exact = exact;
      a = cand;
    }
    if (best_exact <= opts.tol * scale)
      break;
    if (2 * n > opts.max_grid)
      throw NoConvergence(iterations_used, best_exact,
                          "spectral_factor: residual " + fmt_sci(best_exact) +
                              " above tolerance at maximum grid size");
    n *= 2; // refine and warm-start from the current candidate
  }

  // A(0) must be invertible for the factor to be the analytic one
  EMat head(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      head(r, c) = a.at(r, c).coeff(0);
  if (std::abs(Eigen::PartialPivLU<EMat>(head).determinant()) < 1e-12)
    throw SingularInput("spectral_factor: A(0) numerically singular");
  return a;
}

namespace {

LaurentMatrix right_multiply_constant(const LaurentMatrix &a, const EMat &v) {
  const int m = a.rows();
  std::vector<cplx> entries(static_cast<size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      entries[static_cast<size_t>(r) * m + c] = v(r, c);
  return a * LaurentMatrix::constant(m, m, entries);
}

// F (identity except the last row, unit diagonal) times B: only the last
// row needs convolutions
LaurentMatrix triangular_times(const LaurentMatrix &f, const LaurentMatrix &b) {
  const int m = b.rows();
  LaurentMatrix out = b;
  for (int c = 0; c < m; ++c) {
    LaurentPoly acc = b.at(m - 1, c);
    for (int j = 0; j < m - 1; ++j)
      if (!f.at(m - 1, j).is_zero())
        acc = acc + f.at(m - 1, j) * b.at(j, c);
    out.at(m - 1, c) = std::move(acc);
  }
  return out;
}

} // namespace

LaurentMatrix construct_unitary_from_triangular(const LaurentMatrix &f,
                                                const LaurentMatrix &f_inv, int g,
                                                const ConstructOptions &opts) {
  const int m = f.rows();
  LaurentMatrix s = f * adjoint(f);
  SpectralFactorOptions sf;
  // aim two orders below the requested tolerance: the triangular factor
  // amplifies the factorization error in U = F_- * A
  sf.tol = 0.01 * opts.tol;
  sf.grid = opts.grid;
  LaurentMatrix a = spectral_factor(s, g, sf);

  LaurentMatrix u = triangular_times(f_inv, a);
  // rows 0..m-2 equal rows of A (already in L^+_g); the last row must lie in
  // L^-_g -- the positive powers cancel by the structure theorem and are
  // checked before being dropped.
  double pos_leak = 0.0;
  for (int c = 0; c < m; ++c)
    pos_leak = std::max(pos_leak, project(u.at(m - 1, c), 1, std::max(g, 1)).max_abs());
  if (pos_leak > opts.verify_tol)
    throw StructureViolation(
        "construct_unitary: last row leaks positive powers (" +
        fmt_sci(pos_leak) + ")");
  for (int c = 0; c < m; ++c)
    u.at(m - 1, c) = project(u.at(m - 1, c), -g, 0);

  // canonical representative: U(1) = I
  std::vector<cplx> u1 = u.eval(cplx{1.0, 0.0});
  EMat v(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      v(r, c) = u1[static_cast<size_t>(r) * m + c];
  u = right_multiply_constant(u, v.adjoint());

  double ur = unitarity_residual(u, 1.0);
  if (ur > opts.verify_tol)
    throw StructureViolation("construct_unitary: unitarity residual " +
                             fmt_sci(ur));
  LaurentMatrix fu = triangular_times(f, u);
  double minus_leak = fu.lo() < 0 ? project(fu, fu.lo(), -1).max_abs_coeff() : 0.0;
  if (minus_leak > opts.verify_tol)
    throw StructureViolation("construct_unitary: F*U leaks negative powers (" +
                             fmt_sci(minus_leak) + ")");
  return u;
}

LaurentMatrix construct_unitary(const PhiParams &p, const ConstructOptions &opts) {
  return construct_unitary_from_triangular(triangular_factor(p, +1),
                                           triangular_factor(p, -1), p.order(),
                                           opts);
}

WaveletMatrix phi_to_wavelet(const PhiParams &p, const ConstructOptions &opts) {
  const int m = p.rank();
  const int g = p.order();
  LaurentMatrix u = construct_unitary(p, opts);
  LaurentMatrix aw = cplx(std::sqrt(static_cast<double>(m)), 0.0) *
                     shift_row(u, m - 1, g); // diag(1,..,1,z^g) * U, scaled
  LaurentMatrix wpoly = canonical_prefix(m) * aw;
  double quad = unitarity_residual(wpoly, static_cast<double>(m));
  double lin = 0.0;
  std::vector<cplx> at1 = wpoly.eval(cplx{1.0, 0.0});
  for (int r = 0; r < m; ++r) {
    cplx sum{};
    for (int c = 0; c < m; ++c)
      sum += at1[static_cast<size_t>(r) * m + c];
    if (r == 0)
      sum -= static_cast<double>(m);
    lin = std::max(lin, std::abs(sum));
  }
  if (quad > opts.verify_tol * std::sqrt(static_cast<double>(m)) ||
      lin > opts.verify_tol)
    throw StructureViolation("phi_to_wavelet: residuals above tolerance (quad " +
                             fmt_sci(quad) + ", linear " + fmt_sci(lin) + ")");
  return from_polyphase(wpoly, g + 1);
}

PhiParams wavelet_to_phi(const WaveletMatrix &w, const CoordinateOptions &opts) {
  const int m = w.rank();
  LaurentMatrix a = to_polyphase(w);
  const int d = det_monomial(a).second;

  // normalize the genus to d+1: blocks beyond power d must be negligible
  if (a.hi() > d) {
    double beyond = project(a, d + 1, a.hi()).max_abs_coeff();
    if (beyond > opts.tol)
      throw DegenerateDegree("wavelet_to_phi: nonzero blocks beyond the degree");
    a = project(a, 0, d);
  }

  if (opts.undo_prefix)
    a = adjoint(canonical_prefix(m)) * a;
  a = cplx(1.0 / std::sqrt(static_cast<double>(m)), 0.0) * a;
  LaurentMatrix u = shift_row(a, m - 1, -d);

  if (d == 0)
    return PhiParams::zeros(m, 0);

  // for each column l and negative power -t the last row of F*U must
  // vanish: sum_{j,k} phi_j[-k] * u_{j,l}[k-t] = -u_{m-1,l}[-t]
  const int unknowns = (m - 1) * d;
  EMat sys(m * d, unknowns);
  Eigen::VectorXcd rhs(m * d);
  int row = 0;
  for (int l = 0; l < m; ++l)
    for (int t = 1; t <= d; ++t, ++row) {
      for (int j = 0; j < m - 1; ++j)
        for (int k = 1; k <= d; ++k)
          sys(row, j * d + (k - 1)) = u.at(j, l).coeff(k - t);
      rhs(row) = -u.at(m - 1, l).coeff(-t);
    }
  Eigen::ColPivHouseholderQR<EMat> qr(sys);
  Eigen::VectorXcd x = qr.solve(rhs);
  double residual = (sys * x - rhs).norm();
  if (residual > opts.tol * std::max(1.0, rhs.norm()))
    throw Inconsistent(residual,
                       "wavelet_to_phi: least-squares residual " +
                           fmt_sci(residual) +
                           "; input violates the structural hypotheses");
  std::vector<cplx> coeffs(static_cast<size_t>(unknowns));
  for (int i = 0; i < unknowns; ++i)
    coeffs[static_cast<size_t>(i)] = x(i);
  return {m, d, std::move(coeffs)};
}

WienerHopfCertificate wiener_hopf_certificate(const LaurentMatrix &u,
                                              const PhiParams &p) {
  const int g = p.order();
  WienerHopfCertificate cert;
  cert.f_minus = triangular_factor(p, -1);
  cert.plus_part = triangular_times(triangular_factor(p, +1), u);
  if (cert.plus_part.lo() < 0)
    cert.negative_leak = project(cert.plus_part, cert.plus_part.lo(), -1).max_abs_coeff();
  if (cert.plus_part.hi() > g)
    cert.excess_leak = project(cert.plus_part, g + 1, cert.plus_part.hi()).max_abs_coeff();

  LaurentMatrix diff = triangular_times(cert.f_minus, cert.plus_part) - u;
  if (diff.hi() >= diff.lo()) {
    int n = detail::next_pow2(std::max(2 * diff.span() + 2, 8));
    CircleGrid gr = eval_grid(diff, n);
    for (int t = 0; t < n; ++t) {
      double fro2 = 0.0;
      for (int r = 0; r < gr.rows; ++r)
        for (int c = 0; c < gr.cols; ++c)
          fro2 += std::norm(gr.at(t, r, c));
      cert.residual = std::max(cert.residual, std::sqrt(fro2));
    }
  }
  return cert;
}

} // namespace parawave
