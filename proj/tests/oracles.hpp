// Test-only reference implementations, kept independent of the library's
// computation paths: quadratic-time discrete Fourier transforms for
// evaluation/interpolation checks, and the Bauer block-Toeplitz Cholesky
// method as the second spectral factorization route.
#ifndef PARAWAVE_TESTS_ORACLES_HPP
#define PARAWAVE_TESTS_ORACLES_HPP

#include <complex>
#include <random>
#include <vector>

#include "parawave/laurent.hpp"

namespace oracles {

using parawave::cplx;
using parawave::LaurentMatrix;
using parawave::LaurentPoly;

// f(z_t) for z_t = exp(2 pi i t / n), by direct summation.
std::vector<cplx> naive_eval(const LaurentPoly &p, int n);

// Coefficients over [lo, hi] from n samples, by direct summation.
LaurentPoly naive_interp(const std::vector<cplx> &values, int lo, int hi);

// Pointwise product of samples of a and b followed by interpolation over
// the exact product window.
LaurentPoly product_via_grid(const LaurentPoly &a, const LaurentPoly &b);

// Last block row of the Cholesky factor of the banded block Toeplitz matrix
// T[i][j] = S_{i-j} with nblocks blocks: converges to the analytic spectral
// factor of S (powers 0..g).
LaurentMatrix bauer_factor(const LaurentMatrix &s, int g, int nblocks);

// Constant unitary V minimizing ||A V - B||_F over coefficients (polar part
// of sum_k A_k^* B_k).
LaurentMatrix polar_align(const LaurentMatrix &a, const LaurentMatrix &b);

// max |coefficient| of A - B.
double coeff_distance(const LaurentMatrix &a, const LaurentMatrix &b);

// Random Laurent polynomial with coefficients uniform in the unit square,
// powers [lo, lo+len).
LaurentPoly random_poly(std::mt19937_64 &rng, int lo, int len);

// Random constant unitary via QR of a Gaussian matrix.
LaurentMatrix random_unitary(std::mt19937_64 &rng, int m);

// Random unit vector.
std::vector<cplx> random_unit_vector(std::mt19937_64 &rng, int m);

} // namespace oracles

#endif
