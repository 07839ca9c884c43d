#include "parawave/transform.hpp"

#include <algorithm>
#include <cmath>

#include "parawave/errors.hpp"

namespace parawave {

SubbandCoeffs analyze(const Signal &f, const WaveletMatrix &w) {
  const int m = w.rank();
  const int len = w.taps();
  SubbandCoeffs out;
  out.m = m;
  out.genus = w.genus();
  out.offsets.assign(static_cast<size_t>(m), 0);
  out.coeffs.resize(static_cast<size_t>(m));
  if (f.samples.empty())
    return out;

  // j = mk + n must hit [0, len) while n stays in the signal support
  const std::int64_t nmin = f.offset;
  const std::int64_t nmax = f.offset + static_cast<std::int64_t>(f.samples.size()) - 1;
  const std::int64_t kmin = static_cast<std::int64_t>(
      std::floor(static_cast<double>(0 - nmax) / m));
  const std::int64_t kmax = static_cast<std::int64_t>(
      std::floor(static_cast<double>(len - 1 - nmin) / m));

  for (int r = 0; r < m; ++r) {
    out.offsets[static_cast<size_t>(r)] = kmin;
    auto &row = out.coeffs[static_cast<size_t>(r)];
    row.assign(static_cast<size_t>(kmax - kmin + 1), cplx{});
    for (std::int64_t k = kmin; k <= kmax; ++k) {
      cplx sum{};
      const std::int64_t jlo = std::max<std::int64_t>(0, m * k + nmin);
      const std::int64_t jhi = std::min<std::int64_t>(len - 1, m * k + nmax);
      for (std::int64_t j = jlo; j <= jhi; ++j)
        sum += f.samples[static_cast<size_t>(j - m * k - nmin)] *
               std::conj(w.a(r, static_cast<int>(j)));
      row[static_cast<size_t>(k - kmin)] = sum / static_cast<double>(m);
    }
  }
  return out;
}

Signal synthesize_signal(const SubbandCoeffs &c, const WaveletMatrix &w) {
  if (c.m != w.rank())
    throw DimensionMismatch("synthesize_signal: rank mismatch");
  const int m = w.rank();
  const int len = w.taps();

  // the k-th coefficient of row r feeds samples n = j - m*k, 0 <= j < len
  bool any = false;
  std::int64_t nmin = 0, nmax = 0;
  for (int r = 0; r < m; ++r) {
    if (c.coeffs[static_cast<size_t>(r)].empty())
      continue;
    std::int64_t klo = c.offsets[static_cast<size_t>(r)];
    std::int64_t khi = klo + static_cast<std::int64_t>(c.coeffs[static_cast<size_t>(r)].size()) - 1;
    std::int64_t lo = -m * khi;
    std::int64_t hi = -m * klo + len - 1;
    nmin = any ? std::min(nmin, lo) : lo;
    nmax = any ? std::max(nmax, hi) : hi;
    any = true;
  }
  Signal f;
  if (!any)
    return f;
  f.offset = nmin;
  f.samples.assign(static_cast<size_t>(nmax - nmin + 1), cplx{});
  for (int r = 0; r < m; ++r) {
    const auto &row = c.coeffs[static_cast<size_t>(r)];
    const std::int64_t klo = c.offsets[static_cast<size_t>(r)];
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i] == cplx{})
        continue;
      const std::int64_t base = -m * (klo + static_cast<std::int64_t>(i));
      for (int j = 0; j < len; ++j)
        f.samples[static_cast<size_t>(base + j - nmin)] += row[i] * w.a(r, j);
    }
  }
  return f;
}

} // namespace parawave
