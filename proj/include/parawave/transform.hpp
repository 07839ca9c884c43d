#ifndef PARAWAVE_TRANSFORM_HPP
#define PARAWAVE_TRANSFORM_HPP

#include <cstdint>
#include <vector>

#include "parawave/wavelet_matrix.hpp"

namespace parawave {

/// Finitely supported discrete signal: samples f(n) for n in
/// [offset, offset + size), zero elsewhere.
struct Signal {
  std::int64_t offset = 0;
  std::vector<cplx> samples;
};

/// Per-subband expansion coefficients c^r_k, each with its own index offset.
struct SubbandCoeffs {
  int m = 0;
  int genus = 0;
  std::vector<std::int64_t> offsets;       // size m
  std::vector<std::vector<cplx>> coeffs;   // size m
};

/// Analysis: c^r_k = (1/m) sum_n f(n) conj(a^r_{mk+n}). Exact finite sums
/// over the overlap of the shifted rows with the signal support.
SubbandCoeffs analyze(const Signal &f, const WaveletMatrix &w);

/// Synthesis: f(n) = sum_r sum_k c^r_k a^r_{mk+n}. Left inverse of analyze
/// for any wavelet matrix satisfying the defining conditions.
Signal synthesize_signal(const SubbandCoeffs &c, const WaveletMatrix &w);

} // namespace parawave

#endif
