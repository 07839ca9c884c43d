#ifndef PARAWAVE_WAVELET_MATRIX_HPP
#define PARAWAVE_WAVELET_MATRIX_HPP

#include <vector>

#include "parawave/laurent.hpp"

namespace parawave {

/// Coefficient array a^r_j of a rank-m, genus-G wavelet matrix: m rows of
/// m*G complex filter taps, support starting at j = 0. Row 0 is the scaling
/// (low-pass) vector, rows 1..m-1 the wavelet (high-pass) vectors.
class WaveletMatrix {
public:
  WaveletMatrix(int m, int genus, std::vector<cplx> coeffs);

  int rank() const { return m_; }
  int genus() const { return genus_; }
  int taps() const { return m_ * genus_; }

  cplx a(int r, int j) const { return coeffs_[static_cast<size_t>(r) * taps() + j]; }
  const std::vector<cplx> &coeffs() const { return coeffs_; }

private:
  int m_;
  int genus_;
  std::vector<cplx> coeffs_; // row-major, m x (m*genus)
};

struct ValidationReport {
  double quad_residual = 0;   // max violation of the shifted-orthogonality sums
  double linear_residual = 0; // max violation of the row-sum condition
  int degree = 0;             // exponent of det A(z) = c z^d (polyphase)
  cplx det_const;             // the dominant determinant coefficient c
  double det_residual = 0;    // largest non-dominant |det coeff| / |c|

  bool ok(double tol) const {
    return quad_residual <= tol && linear_residual <= tol && det_residual <= tol;
  }
};

/// Residuals of both defining conditions, computed by direct summation over
/// the coefficient array, plus the determinant monomial data.
ValidationReport validate(const WaveletMatrix &w);

/// The same residuals read off the polyphase symbol: max |coefficient| of
/// A(z)*adjoint(A)(z) - m*I, and the row sums of A(1). Used to cross-check
/// the direct path; the two agree to roundoff.
struct PolyphaseResiduals {
  double quad_residual = 0;
  double linear_residual = 0;
};
PolyphaseResiduals polyphase_residuals(const WaveletMatrix &w);
PolyphaseResiduals polyphase_residuals(const LaurentMatrix &a, int m);

/// Block decimation: entry (r, s) of the result carries coefficient
/// a^r_{k m + s} at power k.
LaurentMatrix to_polyphase(const WaveletMatrix &w);

/// Inverse of to_polyphase. Throws NegativePowers if the matrix has powers
/// below zero (shift support first). genus_hint pads with zero blocks when
/// larger than the minimal genus.
WaveletMatrix from_polyphase(const LaurentMatrix &a, int genus_hint = 0);

/// Exponent d of det A(z) = c z^d for the polyphase symbol of w.
int degree(const WaveletMatrix &w, double tol = 1e-8);

/// Constant unitary U with U * (A(1) * ones) = m * e_1, built from a phase
/// rotation and a Householder reflection. Requires ||A(1) ones|| to be within
/// tol of m (forced by paraunitarity with scale m).
LaurentMatrix unitary_prefix(const LaurentMatrix &a, double tol = 1e-8);

/// The prefix for the canonical generator input A(1) ones = sqrt(m) * ones;
/// depends only on m. Row 0 is ones/sqrt(m).
LaurentMatrix canonical_prefix(int m);

/// Left-multiply the polyphase symbol by a constant unitary; preserves the
/// quadratic condition and the degree.
WaveletMatrix apply_left_unitary(const LaurentMatrix &u, const WaveletMatrix &w,
                                 double tol = 1e-10);

} // namespace parawave

#endif
