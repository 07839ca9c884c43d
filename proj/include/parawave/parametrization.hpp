#ifndef PARAWAVE_PARAMETRIZATION_HPP
#define PARAWAVE_PARAMETRIZATION_HPP

#include <vector>

#include "parawave/laurent.hpp"
#include "parawave/wavelet_matrix.hpp"

namespace parawave {

/// The (m-1)*g free complex coordinates of a rank-m, degree-g construction:
/// phi(j, k) is the coefficient of z^{-(k+1)} in the lower-row function
/// phi_{j+1}. Constant terms are fixed to zero; they do not enter the
/// defining conditions and would be unidentifiable.
class PhiParams {
public:
  PhiParams(int m, int g, std::vector<cplx> coeffs);

  static PhiParams zeros(int m, int g);

  int rank() const { return m_; }
  int order() const { return g_; } // the degree g of the target matrices

  cplx phi(int j, int k) const { return coeffs_[static_cast<size_t>(j) * g_ + k]; }
  const std::vector<cplx> &coeffs() const { return coeffs_; }

  /// phi_{j+1} as a Laurent polynomial (powers -g..-1).
  LaurentPoly row(int j) const;

private:
  int m_;
  int g_;
  std::vector<cplx> coeffs_; // (m-1) x g row-major
};

/// The unit lower-triangular factor: identity except for the last row
/// (sign*phi_1, ..., sign*phi_{m-1}, 1). triangular_factor(p, +1) *
/// triangular_factor(p, -1) == I exactly.
LaurentMatrix triangular_factor(const PhiParams &p, int sign);

/// S = F * adjoint(F): identity block bordered by phi / tilde(phi), lower
/// right entry 1 + sum_j phi_j tilde(phi_j). Hermitian and positive definite
/// on the circle, det == 1.
LaurentMatrix gram_symbol(const PhiParams &p);

struct SpectralFactorOptions {
  double tol = 1e-10; // relative to max |coefficient| of S
  int grid = 0;       // 0: smallest power of two >= 8*(g+1)
  int max_grid = 1 << 14;
  int max_iterations = 200;
};

/// Spectral factor A in L^+_g of a Hermitian positive definite symbol with
/// powers in [-g, g]: A has powers in [0, g], A * adjoint(A) == S within
/// tolerance, constant determinant, A(0) invertible. Newton iteration on
/// circle samples; the grid is doubled (warm start) when aliasing limits the
/// exact coefficient residual. Deterministic for fixed inputs and options.
LaurentMatrix spectral_factor(const LaurentMatrix &s, int g,
                              const SpectralFactorOptions &opts = {});

struct ConstructOptions {
  double tol = 1e-10;        // spectral factorization tolerance
  double verify_tol = 1e-9;  // structural residual gate
  int grid = 0;              // forwarded to the spectral factorization
};

/// The unitary matrix-function of the core construction: U = F_- * A with
/// A the spectral factor of F F*, canonicalized so that U(1) = I. Rows
/// 0..m-2 lie in L^+_g, the last row in L^-_g, det is constant, and
/// F * U lies in L^+_g.
LaurentMatrix construct_unitary(const PhiParams &p, const ConstructOptions &opts = {});

/// Same construction from an explicit pair (F, F_inverse); used by tests
/// that perturb the triangular factor directly.
LaurentMatrix construct_unitary_from_triangular(const LaurentMatrix &f,
                                                const LaurentMatrix &f_inv, int g,
                                                const ConstructOptions &opts = {});

/// Full generator: W = from_polyphase(prefix * sqrt(m) * diag(1,..,1,z^g) * U).
/// Output has rank m, genus g+1, degree exactly g and satisfies both wavelet
/// matrix conditions within opts.verify_tol.
WaveletMatrix phi_to_wavelet(const PhiParams &p, const ConstructOptions &opts = {});

struct CoordinateOptions {
  bool undo_prefix = true; // remove the canonical constant prefix first
  double tol = 1e-8;       // least-squares consistency gate
};

/// Inverse map ("coordinates" of a wavelet matrix): trims/pads the genus to
/// degree+1, optionally removes the canonical prefix, converts the polyphase
/// symbol to unitary form and solves the linear system for the phi
/// coefficients. Throws DegenerateDegree when nonzero blocks sit beyond the
/// determinant degree, Inconsistent when the least-squares residual exceeds
/// tol.
PhiParams wavelet_to_phi(const WaveletMatrix &w, const CoordinateOptions &opts = {});

struct WienerHopfCertificate {
  LaurentMatrix f_minus;   // the analytic-outside factor
  LaurentMatrix plus_part; // F * U, a member of L^+_g up to the leaks below
  double negative_leak = 0; // max |coefficient| of plus_part at powers < 0
  double excess_leak = 0;   // max |coefficient| at powers > g
  double residual = 0;      // max over circle of ||F_- * plus_part - U||_F
};

/// Factorization certificate U = F_-(z) * (F(z) U(z)) for a unitary factor
/// and its coordinates.
WienerHopfCertificate wiener_hopf_certificate(const LaurentMatrix &u,
                                              const PhiParams &p);

} // namespace parawave

#endif
