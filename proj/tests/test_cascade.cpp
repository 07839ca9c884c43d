#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "parawave/cascade.hpp"
#include "parawave/parametrization.hpp"

using namespace parawave;

TEST_CASE("Haar scaling function is the indicator, fixed after one step") {
  CascadeResult res = scaling_function(fixtures::haar(), 10, 5);
  CHECK(res.converged);
  CHECK(res.final_change == 0.0);
  const std::int64_t mL = 1 << 10;
  for (size_t i = 0; i < res.phi.values.size(); ++i) {
    double expect = (std::int64_t(i) < mL) ? 1.0 : 0.0;
    CHECK(std::abs(res.phi.values[i] - expect) == 0.0);
  }
  CHECK(std::abs(res.phi.integral() - cplx{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("D4: support bound, integral, drift within twelve iterations") {
  CascadeResult res = scaling_function(fixtures::d4(), 12, 12);
  CHECK(res.iterations <= 12);
  // support bound (g-1)m/(m-1) + 1 = 3 for m=2, genus 2
  const double bound = 3.0;
  double leak = 0.0;
  for (size_t i = 0; i < res.phi.values.size(); ++i)
    if (res.phi.x(i) > bound)
      leak = std::max(leak, std::abs(res.phi.values[i]));
  CHECK(leak <= 1e-6);
  CHECK(std::abs(res.phi.integral() - cplx{1.0, 0.0}) <= 1e-6);
  CHECK(res.integral_drift <= 1e-12);
}

TEST_CASE("zero-coordinate generator, support bound for genus 2") {
  WaveletMatrix w = phi_to_wavelet(PhiParams::zeros(2, 1));
  CascadeResult res = scaling_function(w, 11, 11);
  const double bound = 3.0; // same formula, genus 2, m 2
  for (size_t i = 0; i < res.phi.values.size(); ++i)
    if (res.phi.x(i) > bound)
      CHECK(std::abs(res.phi.values[i]) <= 1e-6);
  CHECK(std::abs(res.phi.integral() - cplx{1.0, 0.0}) <= 1e-6);
}

TEST_CASE("Haar wavelet function: +1 then -1") {
  CascadeResult res = scaling_function(fixtures::haar(), 8, 4);
  auto psis = wavelet_functions(fixtures::haar(), res.phi);
  REQUIRE(psis.size() == 1);
  const FunctionSamples &psi = psis[0];
  const std::int64_t mL = 1 << 8;
  for (size_t i = 0; i < psi.values.size(); ++i) {
    double expect = 0.0;
    if (std::int64_t(i) < mL / 2)
      expect = 1.0;
    else if (std::int64_t(i) < mL)
      expect = -1.0;
    CHECK(std::abs(psi.values[i] - expect) == 0.0);
  }
}

TEST_CASE("wavelet functions: zero phi gives zero psi; D4 psi has mean zero") {
  WaveletMatrix d4 = fixtures::d4();
  CascadeResult res = scaling_function(d4, 12, 12);
  FunctionSamples zero = res.phi;
  for (cplx &v : zero.values)
    v = {};
  auto zpsis = wavelet_functions(d4, zero);
  for (const auto &p : zpsis)
    for (const cplx &v : p.values)
      CHECK(v == cplx{});

  auto psis = wavelet_functions(d4, res.phi);
  REQUIRE(psis.size() == 1);
  CHECK(std::abs(psis[0].integral()) <= 1e-6);
}

TEST_CASE("normalization of dilated translates is scale invariant") {
  WaveletMatrix d4 = fixtures::d4();
  CascadeResult res = scaling_function(d4, 12, 12);
  auto psis = wavelet_functions(d4, res.phi);
  const FunctionSamples &psi = psis[0];
  // grid norm of psi^r_{jk}: m^{j/2} psi(m^j x - k) sampled with step h has
  // squared norm approx independent of j for j << level
  double base = psi.norm_l2();
  for (int j = 1; j <= 3; ++j) {
    const std::int64_t mj = 1 << j;
    double sum = 0.0;
    for (size_t i = 0; i < psi.values.size(); i += size_t(mj))
      sum += std::norm(psi.values[i]) * double(mj);
    double nrm = std::sqrt(sum * psi.step());
    CHECK(std::abs(nrm - base) <= 1e-3 * std::max(1.0, base));
  }
}

TEST_CASE("frame reconstruction: phi itself at J=0") {
  WaveletMatrix d4 = fixtures::d4();
  // converged samples: phi is then in the span of its own translates
  CascadeResult res = scaling_function(d4, 14, 200, 1e-9);
  REQUIRE(res.converged);
  FrameReconstruction rec = frame_reconstruct(res.phi, d4, 0);
  CHECK(rec.rel_l2_error <= 1e-6);
}

TEST_CASE("frame reconstruction: zero input") {
  WaveletMatrix d4 = fixtures::d4();
  CascadeResult res = scaling_function(d4, 10, 10);
  FunctionSamples zero = res.phi;
  for (cplx &v : zero.values)
    v = {};
  FrameReconstruction rec = frame_reconstruct(zero, d4, 2);
  CHECK(rec.rel_l2_error == 0.0);
  for (const cplx &v : rec.reconstruction.values)
    CHECK(std::abs(v) == 0.0);
}

TEST_CASE("frame reconstruction: Gaussian error small and monotone in J") {
  WaveletMatrix d4 = fixtures::d4();
  FunctionSamples f;
  f.m = 2;
  f.level = 12;
  f.start = 0;
  const std::int64_t len = 3 << 12;
  f.values.resize(size_t(len));
  for (std::int64_t i = 0; i < len; ++i) {
    double x = double(i) * f.step();
    f.values[size_t(i)] = std::exp(-(x - 1.5) * (x - 1.5) / (2 * 0.09));
  }
  double prev = 2.0;
  for (int j = 0; j <= 6; ++j) {
    FrameReconstruction rec = frame_reconstruct(f, d4, j);
    CHECK(rec.rel_l2_error <= prev + 1e-6);
    prev = rec.rel_l2_error;
  }
  CHECK(prev <= 1e-2);
}
