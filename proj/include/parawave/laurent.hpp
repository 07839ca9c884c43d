#ifndef PARAWAVE_LAURENT_HPP
#define PARAWAVE_LAURENT_HPP

#include <complex>
#include <span>
#include <vector>

namespace parawave {

using cplx = std::complex<double>;

/// Scalar Laurent polynomial with dense complex coefficients over a power
/// window [lo, hi]. The stored form is normalized: the first and last
/// coefficients are nonzero unless the polynomial is identically zero
/// (canonical zero: no coefficients, lo() == 0, hi() == -1).
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<cplx> coeffs);

  static LaurentPoly constant(cplx value);
  static LaurentPoly monomial(cplx value, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Coefficient of z^power (zero outside the stored window).
  cplx coeff(int power) const;

  /// Evaluation by Horner's scheme; negative powers via 1/z.
  cplx operator()(cplx z) const;

  double max_abs() const;

  /// Membership in L^+_g (powers within [0, g]) / L^-_g (within [-g, 0]).
  bool in_plus(int g) const { return is_zero() || (lo_ >= 0 && hi() <= g); }
  bool in_minus(int g) const { return is_zero() || (lo_ >= -g && hi() <= 0); }

private:
  int lo_ = 0;
  std::vector<cplx> coeffs_;
};

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly operator*(cplx s, const LaurentPoly &a);

/// Adjoint on the circle: coefficients conjugated, z -> 1/z, so that
/// tilde(f)(z) == conj(f(z)) for |z| = 1.
LaurentPoly tilde(const LaurentPoly &a);

/// Keep exactly the powers in [lo, hi].
LaurentPoly project(const LaurentPoly &a, int lo, int hi);

/// Drop leading/trailing coefficients of magnitude <= tol.
LaurentPoly trim(const LaurentPoly &a, double tol);

/// Multiply by z^k.
LaurentPoly shift(const LaurentPoly &a, int k);

/// Samples of a matrix Laurent polynomial at the n-th roots of unity
/// z_t = exp(2*pi*i*t/n). Data is point-major: value(t, r, c).
struct CircleGrid {
  int rows = 0;
  int cols = 0;
  int n = 0;
  std::vector<cplx> data;

  cplx &at(int t, int r, int c) { return data[(static_cast<size_t>(t) * rows + r) * cols + c]; }
  cplx at(int t, int r, int c) const { return data[(static_cast<size_t>(t) * rows + r) * cols + c]; }
};

/// Rectangular matrix with LaurentPoly entries (row-major).
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols);

  static LaurentMatrix identity(int n);
  /// Constant matrix from row-major complex entries.
  static LaurentMatrix constant(int rows, int cols, std::span<const cplx> values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const LaurentPoly &at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  LaurentPoly &at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  /// Lowest/highest power over all entries (0 / -1 for the zero matrix).
  int lo() const;
  int hi() const;
  int span() const;

  double max_abs_coeff() const;

  /// Pointwise evaluation; row-major values.
  std::vector<cplx> eval(cplx z) const;

  bool is_constant() const { return lo() >= 0 && hi() <= 0; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

LaurentMatrix operator+(const LaurentMatrix &a, const LaurentMatrix &b);
LaurentMatrix operator-(const LaurentMatrix &a, const LaurentMatrix &b);
LaurentMatrix operator*(const LaurentMatrix &a, const LaurentMatrix &b);
LaurentMatrix operator*(cplx s, const LaurentMatrix &a);

/// Conjugate transpose with z -> 1/z: adjoint(A)(z) == A(z)^* on |z| = 1.
LaurentMatrix adjoint(const LaurentMatrix &a);

/// Entrywise projection to the power window [lo, hi].
LaurentMatrix project(const LaurentMatrix &a, int lo, int hi);

/// Entrywise trim of end coefficients of magnitude <= tol.
LaurentMatrix trim(const LaurentMatrix &a, double tol);

/// Multiply row r by z^k.
LaurentMatrix shift_row(const LaurentMatrix &a, int r, int k);

/// Exact evaluation at n roots of unity. Requires n a power of two with
/// n >= 2*span + 2 so that coefficients are recoverable from the samples.
CircleGrid eval_grid(const LaurentMatrix &a, int n);

/// Inverse of eval_grid for a known power window [lo, hi] (hi - lo < n).
LaurentMatrix coeffs_from_grid(const CircleGrid &grid, int lo, int hi);

/// max over circle samples of ||A(z) A(z)^* - scale*I||_F. The difference is
/// formed in exact coefficient arithmetic; n = 0 picks the smallest
/// sufficient power-of-two grid.
double unitarity_residual(const LaurentMatrix &a, double scale, int n = 0);

struct DetMonomial {
  cplx coeff;          // dominant coefficient c of det A(z) = c z^d
  int degree = 0;      // its power d
  double residual = 0; // largest other |coefficient| / |c|
  double max_abs = 0;  // max |det A(z_t)| over the grid
};

/// Determinant via circle sampling and interpolation.
DetMonomial det_monomial_info(const LaurentMatrix &a);

/// (c, d) with det A(z) = c z^d. Throws SingularInput if max |det| < tol,
/// NotMonomial if a second coefficient exceeds tol*|c|.
std::pair<cplx, int> det_monomial(const LaurentMatrix &a, double tol = 1e-8);

namespace detail {
/// In-place radix-2 transform: sign = +1 computes sum_k x_k e^{+2 pi i k t/n}
/// (evaluation), sign = -1 the conjugate sum (unnormalized inversion).
void fft_pow2(std::vector<cplx> &x, int sign);
int next_pow2(int n);
} // namespace detail

} // namespace parawave

#endif
