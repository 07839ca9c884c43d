#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "parawave.h"

namespace {

struct PhiGuard {
  pw_phi *p = nullptr;
  ~PhiGuard() { pw_phi_destroy(p); }
};
struct WaveletGuard {
  pw_wavelet *w = nullptr;
  ~WaveletGuard() { pw_wavelet_destroy(w); }
};

std::vector<double> haar_coeffs() { return {1, 0, 1, 0, 1, 0, -1, 0}; }

} // namespace

TEST_CASE("status names and error text") {
  CHECK(std::strcmp(pw_status_name(PW_OK), "ok") == 0);
  CHECK(pw_status_name(PW_ERR_NO_CONVERGENCE) != nullptr);

  pw_wavelet *w = nullptr;
  pw_status st = pw_wavelet_create(1, 1, haar_coeffs().data(), &w);
  CHECK(st == PW_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(pw_last_error()) > 0);
}

TEST_CASE("phi handles round trip their coefficients") {
  std::vector<double> coeffs{0.5, -0.25, 0.125, 0.0625};
  PhiGuard p;
  REQUIRE(pw_phi_create(3, 1, coeffs.data(), &p.p) == PW_OK);
  CHECK(pw_phi_rank(p.p) == 3);
  CHECK(pw_phi_order(p.p) == 1);
  std::vector<double> back(4);
  pw_phi_coeffs(p.p, back.data());
  CHECK(back == coeffs);
}

TEST_CASE("random phi is deterministic and scale-bounded") {
  PhiGuard a, b;
  REQUIRE(pw_phi_random(3, 4, 99, 1.0, &a.p) == PW_OK);
  REQUIRE(pw_phi_random(3, 4, 99, 1.0, &b.p) == PW_OK);
  std::vector<double> va(16), vb(16);
  pw_phi_coeffs(a.p, va.data());
  pw_phi_coeffs(b.p, vb.data());
  CHECK(va == vb);
  for (size_t i = 0; i < va.size(); i += 2)
    CHECK(va[i] * va[i] + va[i + 1] * va[i + 1] <= 1.0);

  PhiGuard z;
  REQUIRE(pw_phi_random(3, 4, 99, 0.0, &z.p) == PW_OK);
  std::vector<double> vz(16);
  pw_phi_coeffs(z.p, vz.data());
  for (double v : vz)
    CHECK(v == 0.0);
}

TEST_CASE("construct: g = 0 gives Haar, validation via the C surface") {
  PhiGuard p;
  REQUIRE(pw_phi_create(2, 0, haar_coeffs().data(), &p.p) == PW_OK); // 0 coeffs read
  WaveletGuard w;
  REQUIRE(pw_construct(p.p, 0.0, &w.w) == PW_OK);
  CHECK(pw_wavelet_rank(w.w) == 2);
  CHECK(pw_wavelet_genus(w.w) == 1);
  std::vector<double> c(8);
  pw_wavelet_coeffs(w.w, c.data());
  std::vector<double> expect = haar_coeffs();
  for (size_t i = 0; i < 8; ++i)
    CHECK(std::abs(c[i] - expect[i]) <= 1e-12);

  pw_validation rep{};
  REQUIRE(pw_wavelet_validate(w.w, &rep) == PW_OK);
  CHECK(rep.quad_residual <= 1e-12);
  CHECK(rep.linear_residual <= 1e-12);
  CHECK(rep.degree == 0);

  int deg = -1;
  REQUIRE(pw_wavelet_degree(w.w, &deg) == PW_OK);
  CHECK(deg == 0);
}

TEST_CASE("coordinates round trip through the C surface") {
  PhiGuard p;
  REQUIRE(pw_phi_random(3, 2, 12345, 1.0, &p.p) == PW_OK);
  WaveletGuard w;
  REQUIRE(pw_construct(p.p, 0.0, &w.w) == PW_OK);
  PhiGuard back;
  REQUIRE(pw_coordinates(w.w, 1, 0.0, &back.p) == PW_OK);
  REQUIRE(pw_phi_order(back.p) == 2);
  std::vector<double> va(8), vb(8);
  pw_phi_coeffs(p.p, va.data());
  pw_phi_coeffs(back.p, vb.data());
  for (size_t i = 0; i < va.size(); ++i)
    CHECK(std::abs(va[i] - vb[i]) <= 1e-8);
}

TEST_CASE("factor: count equals the degree, residual small") {
  PhiGuard p;
  REQUIRE(pw_phi_random(2, 3, 777, 1.0, &p.p) == PW_OK);
  WaveletGuard w;
  REQUIRE(pw_construct(p.p, 0.0, &w.w) == PW_OK);
  pw_factorization *f = nullptr;
  REQUIRE(pw_factor(w.w, 0.0, &f) == PW_OK);
  CHECK(pw_factorization_count(f) == 3);
  CHECK(pw_factorization_rank(f) == 2);
  CHECK(pw_factorization_residual(f) <= 1e-8);
  std::vector<double> v(4);
  pw_factorization_vector(f, 0, v.data());
  double norm = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
  CHECK(std::abs(norm - 1.0) <= 1e-10);
  std::vector<double> tail(8);
  pw_factorization_tail(f, tail.data());
  pw_factorization_destroy(f);
}

TEST_CASE("analyze/synthesize round trip through the C surface") {
  WaveletGuard w;
  REQUIRE(pw_wavelet_create(2, 1, haar_coeffs().data(), &w.w) == PW_OK);
  std::vector<double> signal{1, 0, 0, 0}; // (1, 0) complex
  pw_subbands *s = nullptr;
  REQUIRE(pw_analyze(w.w, 0, signal.data(), 2, &s) == PW_OK);
  CHECK(pw_subbands_count(s) == 2);
  for (int r = 0; r < 2; ++r) {
    size_t len = pw_subbands_length(s, r);
    std::vector<double> c(2 * len);
    pw_subbands_coeffs(s, r, c.data());
    double sum = 0;
    for (size_t i = 0; i < len; ++i)
      sum += c[2 * i];
    CHECK(std::abs(sum - 0.5) <= 1e-15);
  }
  int64_t off = 0;
  size_t count = 0;
  REQUIRE(pw_synthesize(s, w.w, &off, &count, nullptr) == PW_OK);
  std::vector<double> out(2 * count);
  REQUIRE(pw_synthesize(s, w.w, &off, &count, out.data()) == PW_OK);
  // as a function on the integers the result is the original impulse pair
  for (size_t i = 0; i < count; ++i) {
    int64_t n = off + int64_t(i);
    double expect = (n == 0) ? 1.0 : 0.0;
    CHECK(std::abs(out[2 * i] - expect) <= 1e-15);
    CHECK(std::abs(out[2 * i + 1]) <= 1e-15);
  }
  pw_subbands_destroy(s);

  // assembling coefficients by hand synthesizes the same signal
  pw_subbands *manual = nullptr;
  REQUIRE(pw_subbands_create(2, &manual) == PW_OK);
  std::vector<double> half{0.5, 0.0};
  REQUIRE(pw_subbands_set(manual, 0, 0, half.data(), 1) == PW_OK);
  REQUIRE(pw_subbands_set(manual, 1, 0, half.data(), 1) == PW_OK);
  int64_t off2 = 0;
  size_t count2 = 0;
  REQUIRE(pw_synthesize(manual, w.w, &off2, &count2, nullptr) == PW_OK);
  std::vector<double> out2(2 * count2);
  REQUIRE(pw_synthesize(manual, w.w, &off2, &count2, out2.data()) == PW_OK);
  pw_subbands_destroy(manual);
}

TEST_CASE("scaling function and wavelet functions through the C surface") {
  WaveletGuard w;
  REQUIRE(pw_wavelet_create(2, 1, haar_coeffs().data(), &w.w) == PW_OK);
  pw_samples *phi = nullptr;
  REQUIRE(pw_scaling_function(w.w, 8, 4, 0.0, &phi) == PW_OK);
  CHECK(pw_samples_series(phi) == 1);
  CHECK(pw_samples_level(phi) == 8);
  CHECK(pw_samples_converged(phi) == 1);
  CHECK(pw_samples_iterations(phi) <= 4);
  CHECK(pw_samples_residual(phi) == 0.0);
  size_t len = pw_samples_length(phi);
  std::vector<double> vals(2 * len);
  pw_samples_values(phi, 0, vals.data());
  CHECK(vals[0] == 1.0);

  pw_samples *psi = nullptr;
  REQUIRE(pw_wavelet_functions(w.w, phi, &psi) == PW_OK);
  CHECK(pw_samples_series(psi) == 1);
  std::vector<double> pv(2 * pw_samples_length(psi));
  pw_samples_values(psi, 0, pv.data());
  CHECK(pv[0] == 1.0); // +1 on the first half
  pw_samples_destroy(psi);
  pw_samples_destroy(phi);
}

TEST_CASE("error paths surface the right codes") {
  WaveletGuard w;
  std::vector<double> junk(8, 0.3);
  REQUIRE(pw_wavelet_create(2, 1, junk.data(), &w.w) == PW_OK);
  pw_phi *p = nullptr;
  pw_status st = pw_coordinates(w.w, 1, 0.0, &p);
  CHECK(st != PW_OK); // determinant of a constant-0.3 matrix vanishes
  CHECK(p == nullptr);
}
