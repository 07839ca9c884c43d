#include "parawave/cascade.hpp"

#include <algorithm>
#include <cmath>

#include "parawave/errors.hpp"

namespace parawave {

double FunctionSamples::step() const { return std::pow(static_cast<double>(m), -level); }

cplx FunctionSamples::integral() const {
  cplx sum{};
  for (const cplx &v : values)
    sum += v;
  return sum * step();
}

double FunctionSamples::norm_l2() const {
  double sum = 0.0;
  for (const cplx &v : values)
    sum += std::norm(v);
  return std::sqrt(sum * step());
}

namespace {

std::int64_t ipow(int base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i)
    r *= base;
  return r;
}

} // namespace

CascadeResult scaling_function(const WaveletMatrix &w, int level, int maxiter,
                               double tol) {
  const int m = w.rank();
  const int taps = w.taps();
  if (level <= 0) {
    level = 1;
    while (ipow(m, level) < 4096)
      ++level;
  }
  if (maxiter <= 0)
    maxiter = level;

  const std::int64_t mL = ipow(m, level);
  // support bound (m*G - 1)/(m - 1) from the scaling equation
  const std::int64_t grid_len = ((static_cast<std::int64_t>(taps) - 1) * mL +
                                 (m - 2)) / (m - 1) + 1;

  CascadeResult out;
  out.phi.m = m;
  out.phi.level = level;
  out.phi.start = 0;
  out.phi.values.assign(static_cast<size_t>(grid_len + 1), cplx{});
  for (std::int64_t i = 0; i < mL && i <= grid_len; ++i)
    out.phi.values[static_cast<size_t>(i)] = 1.0; // indicator of [0, 1)

  const double h = out.phi.step();
  cplx prev_integral = out.phi.integral();
  std::vector<cplx> next(out.phi.values.size());
  for (int it = 0; it < maxiter; ++it) {
    std::fill(next.begin(), next.end(), cplx{});
    for (int k = 0; k < taps; ++k) {
      const cplx a = w.a(0, k);
      if (a == cplx{})
        continue;
      const std::int64_t off = static_cast<std::int64_t>(k) * mL;
      for (std::int64_t i = 0; i <= grid_len; ++i) {
        const std::int64_t src = i * m - off;
        if (src >= 0 && src <= grid_len)
          next[static_cast<size_t>(i)] += a * out.phi.values[static_cast<size_t>(src)];
      }
    }
    double change = 0.0;
    for (size_t i = 0; i < next.size(); ++i)
      change = std::max(change, std::abs(next[i] - out.phi.values[i]));
    out.phi.values.swap(next);
    ++out.iterations;
    out.final_change = change;
    cplx integ{};
    for (const cplx &v : out.phi.values)
      integ += v;
    integ *= h;
    out.integral_drift = std::max(out.integral_drift, std::abs(integ - prev_integral));
    prev_integral = integ;
    if (change <= tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::vector<FunctionSamples> wavelet_functions(const WaveletMatrix &w,
                                               const FunctionSamples &phi) {
  const int m = w.rank();
  if (phi.m != m)
    throw DimensionMismatch("wavelet_functions: grid base != rank");
  const int taps = w.taps();
  const std::int64_t mL = ipow(m, phi.level);
  const std::int64_t len = static_cast<std::int64_t>(phi.values.size());
  std::vector<FunctionSamples> out;
  out.reserve(static_cast<size_t>(m - 1));
  for (int r = 1; r < m; ++r) {
    FunctionSamples psi;
    psi.m = m;
    psi.level = phi.level;
    psi.start = phi.start;
    psi.values.assign(phi.values.size(), cplx{});
    for (int k = 0; k < taps; ++k) {
      const cplx a = w.a(r, k);
      if (a == cplx{})
        continue;
      for (std::int64_t i = 0; i < len; ++i) {
        // argument m*x - k in phi's index space
        const std::int64_t idx =
            (phi.start + i) * m - static_cast<std::int64_t>(k) * mL - phi.start;
        if (idx >= 0 && idx < len)
          psi.values[static_cast<size_t>(i)] += a * phi.values[static_cast<size_t>(idx)];
      }
    }
    out.push_back(std::move(psi));
  }
  return out;
}

namespace {

// inner product <f, s_{jk}> where s_{jk}(x) = m^{j/2} s(m^j x - k), by the
// midpoint rule on f's grid
cplx projection_coeff(const FunctionSamples &f, const FunctionSamples &s, int j,
                      std::int64_t k) {
  const std::int64_t mL = ipow(f.m, f.level);
  const std::int64_t mj = ipow(f.m, j);
  const double weight = std::pow(static_cast<double>(f.m), 0.5 * j) * f.step();
  const std::int64_t slen = static_cast<std::int64_t>(s.values.size());
  cplx sum{};
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(f.values.size()); ++i) {
    const std::int64_t idx = (f.start + i) * mj - k * mL - s.start;
    if (idx >= 0 && idx < slen)
      sum += f.values[static_cast<size_t>(i)] * std::conj(s.values[static_cast<size_t>(idx)]);
  }
  return sum * weight;
}

void accumulate(FunctionSamples &rec, const FunctionSamples &s, int j,
                std::int64_t k, cplx coeff) {
  const std::int64_t mL = ipow(rec.m, rec.level);
  const std::int64_t mj = ipow(rec.m, j);
  const double weight = std::pow(static_cast<double>(rec.m), 0.5 * j);
  const std::int64_t slen = static_cast<std::int64_t>(s.values.size());
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rec.values.size()); ++i) {
    const std::int64_t idx = (rec.start + i) * mj - k * mL - s.start;
    if (idx >= 0 && idx < slen)
      rec.values[static_cast<size_t>(i)] += coeff * weight * s.values[static_cast<size_t>(idx)];
  }
}

} // namespace

FrameReconstruction frame_reconstruct(const FunctionSamples &f,
                                      const WaveletMatrix &w, int levels_j) {
  // run the grid iteration to its fixed point: the expansion identity holds
  // for the converged samples, not for the level-th iterate
  CascadeResult cascade = scaling_function(w, f.level, 12 * f.level, 1e-9);
  const FunctionSamples &phi = cascade.phi;
  std::vector<FunctionSamples> psis = wavelet_functions(w, phi);

  FrameReconstruction out;
  out.reconstruction.m = f.m;
  out.reconstruction.level = f.level;
  out.reconstruction.start = f.start;
  out.reconstruction.values.assign(f.values.size(), cplx{});

  const std::int64_t mL = ipow(f.m, f.level);
  const std::int64_t f_lo = f.start;
  const std::int64_t f_hi = f.start + static_cast<std::int64_t>(f.values.size()) - 1;

  // scale-0 scaling coefficients
  {
    const std::int64_t slen = static_cast<std::int64_t>(phi.values.size());
    const std::int64_t kmin = (f_lo - phi.start - slen) / mL - 1;
    const std::int64_t kmax = (f_hi - phi.start) / mL + 1;
    for (std::int64_t k = kmin; k <= kmax; ++k) {
      cplx c = projection_coeff(f, phi, 0, k);
      accumulate(out.reconstruction, phi, 0, k, c);
    }
  }
  for (int j = 0; j <= levels_j; ++j) {
    const std::int64_t mj = ipow(f.m, j);
    for (const FunctionSamples &psi : psis) {
      const std::int64_t slen = static_cast<std::int64_t>(psi.values.size());
      const std::int64_t kmin = (f_lo * mj - psi.start - slen) / mL - 1;
      const std::int64_t kmax = (f_hi * mj - psi.start) / mL + 1;
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        cplx c = projection_coeff(f, psi, j, k);
        accumulate(out.reconstruction, psi, j, k, c);
      }
    }
  }

  double err2 = 0.0, norm2 = 0.0;
  for (size_t i = 0; i < f.values.size(); ++i) {
    err2 += std::norm(f.values[i] - out.reconstruction.values[i]);
    norm2 += std::norm(f.values[i]);
  }
  out.rel_l2_error = norm2 > 0 ? std::sqrt(err2 / norm2) : 0.0;
  return out;
}

} // namespace parawave
