// Shared test fixtures: classical filter banks and the hand-computed
// expected values for the rank-2 frozen construction.
#ifndef PARAWAVE_TESTS_FIXTURES_HPP
#define PARAWAVE_TESTS_FIXTURES_HPP

#include <cmath>
#include <vector>

#include "parawave/wavelet_matrix.hpp"

namespace fixtures {

using parawave::cplx;
using parawave::WaveletMatrix;

inline WaveletMatrix haar() {
  return {2, 1, {cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{-1.0, 0.0}}};
}

// Daubechies-4 rows normalized to row sums (2, 0); the wavelet row is the
// alternating-flip of the scaling row.
inline WaveletMatrix d4() {
  const double s3 = std::sqrt(3.0);
  const double a0 = (1.0 + s3) / 4.0, a1 = (3.0 + s3) / 4.0;
  const double a2 = (3.0 - s3) / 4.0, a3 = (1.0 - s3) / 4.0;
  return {2, 2,
          {cplx{a0, 0.0}, cplx{a1, 0.0}, cplx{a2, 0.0}, cplx{a3, 0.0},
           cplx{a3, 0.0}, cplx{-a2, 0.0}, cplx{a1, 0.0}, cplx{-a0, 0.0}}};
}

// Expected wavelet matrix for m = 2, g = 1, phi_1 = 0.5 z^-1 (exact values
// derived by eliminating the spectral factor by hand): rows
// (0.4, -0.2, 0.6, 1.2) and (1.2, -0.6, -0.2, -0.4).
inline WaveletMatrix frozen_halfphi() {
  return {2, 2,
          {cplx{0.4, 0.0}, cplx{-0.2, 0.0}, cplx{0.6, 0.0}, cplx{1.2, 0.0},
           cplx{1.2, 0.0}, cplx{-0.6, 0.0}, cplx{-0.2, 0.0}, cplx{-0.4, 0.0}}};
}

} // namespace fixtures

#endif
