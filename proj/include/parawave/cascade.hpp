#ifndef PARAWAVE_CASCADE_HPP
#define PARAWAVE_CASCADE_HPP

#include <cstdint>
#include <vector>

#include "parawave/wavelet_matrix.hpp"

namespace parawave {

/// Samples of a function on the m-adic grid of step m^{-level}: values[i]
/// is the sample at x = (start + i) * m^{-level}.
struct FunctionSamples {
  int m = 2;
  int level = 0;
  std::int64_t start = 0;
  std::vector<cplx> values;

  double step() const;
  double x(size_t i) const { return (static_cast<double>(start) + static_cast<double>(i)) * step(); }
  /// Riemann sum step * sum(values).
  cplx integral() const;
  double norm_l2() const;
};

struct CascadeResult {
  FunctionSamples phi;
  int iterations = 0;
  double final_change = 0; // sup-norm change of the last iteration
  bool converged = false;
  double integral_drift = 0; // max per-iteration drift of the Riemann sum
};

/// Fixed-point iteration for the scaling equation phi(x) = sum_k a^0_k
/// phi(m x - k) from the indicator of [0, 1), sampled on the level-L grid.
/// The first L iterations reproduce the exact cascade iterates at the grid
/// points. Non-convergence within maxiter is reported, not thrown. level = 0
/// picks the smallest L with m^L >= 4096; maxiter = 0 runs L iterations.
CascadeResult scaling_function(const WaveletMatrix &w, int level = 0,
                               int maxiter = 0, double tol = 1e-7);

/// psi^r(x) = sum_k a^r_k phi(m x - k) for r = 1..m-1, on phi's grid.
std::vector<FunctionSamples> wavelet_functions(const WaveletMatrix &w,
                                               const FunctionSamples &phi);

struct FrameReconstruction {
  FunctionSamples reconstruction;
  double rel_l2_error = 0;
};

/// Truncated expansion through scale J: projection coefficients against
/// phi_{0k} and psi^r_{jk} (0 <= j <= J) by midpoint quadrature on the grid
/// of f, then the synthesized sum. Reports the relative L2 error.
FrameReconstruction frame_reconstruct(const FunctionSamples &f,
                                      const WaveletMatrix &w, int levels_j);

} // namespace parawave

#endif
