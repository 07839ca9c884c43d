#include "parawave.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "parawave/cascade.hpp"
#include "parawave/errors.hpp"
#include "parawave/parametrization.hpp"
#include "parawave/primitive.hpp"
#include "parawave/rng.hpp"
#include "parawave/transform.hpp"
#include "parawave/wavelet_matrix.hpp"

using namespace parawave;

struct pw_phi {
  PhiParams params;
};
struct pw_wavelet {
  WaveletMatrix matrix;
};
struct pw_factorization {
  PrimitiveFactorization fact;
  int m = 0;
  double residual = 0;
};
struct pw_subbands {
  SubbandCoeffs coeffs;
};
struct pw_samples {
  std::vector<FunctionSamples> series;
  int iterations = 0;
  double residual = 0;
  bool converged = true;
};

namespace {

thread_local std::string g_last_error;

pw_status status_of(const Error &e) {
  switch (e.code()) {
  case ErrorCode::invalid_argument: return PW_ERR_INVALID_ARGUMENT;
  case ErrorCode::dimension_mismatch: return PW_ERR_DIMENSION_MISMATCH;
  case ErrorCode::grid_too_small: return PW_ERR_GRID_TOO_SMALL;
  case ErrorCode::not_monomial: return PW_ERR_NOT_MONOMIAL;
  case ErrorCode::singular_input: return PW_ERR_SINGULAR;
  case ErrorCode::not_paraunitary: return PW_ERR_NOT_PARAUNITARY;
  case ErrorCode::not_unitary: return PW_ERR_NOT_UNITARY;
  case ErrorCode::not_unit: return PW_ERR_NOT_UNIT;
  case ErrorCode::no_convergence: return PW_ERR_NO_CONVERGENCE;
  case ErrorCode::structure_violation: return PW_ERR_STRUCTURE_VIOLATION;
  case ErrorCode::degenerate_degree: return PW_ERR_DEGENERATE_DEGREE;
  case ErrorCode::inconsistent: return PW_ERR_INCONSISTENT;
  case ErrorCode::degree_stuck: return PW_ERR_DEGREE_STUCK;
  case ErrorCode::negative_powers: return PW_ERR_NEGATIVE_POWERS;
  }
  return PW_ERR_INTERNAL;
}

template <typename F> pw_status guarded(F &&fn) {
  try {
    fn();
    return PW_OK;
  } catch (const Error &e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return PW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PW_ERR_INTERNAL;
  }
}

std::vector<cplx> unpack(const double *data, size_t count) {
  std::vector<cplx> out(count);
  for (size_t i = 0; i < count; ++i)
    out[i] = cplx{data[2 * i], data[2 * i + 1]};
  return out;
}

void pack(const std::vector<cplx> &in, double *out) {
  for (size_t i = 0; i < in.size(); ++i) {
    out[2 * i] = in[i].real();
    out[2 * i + 1] = in[i].imag();
  }
}

} // namespace

extern "C" {

const char *pw_status_name(pw_status s) {
  switch (s) {
  case PW_OK: return "ok";
  case PW_ERR_INVALID_ARGUMENT: return "invalid argument";
  case PW_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
  case PW_ERR_GRID_TOO_SMALL: return "grid too small";
  case PW_ERR_NOT_MONOMIAL: return "determinant not a monomial";
  case PW_ERR_SINGULAR: return "singular input";
  case PW_ERR_NOT_PARAUNITARY: return "not paraunitary";
  case PW_ERR_NOT_UNITARY: return "not unitary";
  case PW_ERR_NOT_UNIT: return "not a unit vector";
  case PW_ERR_NO_CONVERGENCE: return "no convergence";
  case PW_ERR_STRUCTURE_VIOLATION: return "structure violation";
  case PW_ERR_DEGENERATE_DEGREE: return "degenerate degree";
  case PW_ERR_INCONSISTENT: return "inconsistent system";
  case PW_ERR_DEGREE_STUCK: return "degree reduction stuck";
  case PW_ERR_NEGATIVE_POWERS: return "negative powers";
  case PW_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char *pw_last_error(void) { return g_last_error.c_str(); }

pw_status pw_phi_create(int m, int g, const double *coeffs, pw_phi **out) {
  return guarded([&] {
    if (!coeffs || !out)
      throw InvalidArgument("pw_phi_create: null pointer");
    *out = new pw_phi{PhiParams(m, g, unpack(coeffs, static_cast<size_t>(m - 1) * g))};
  });
}

pw_status pw_phi_random(int m, int g, uint64_t seed, double scale, pw_phi **out) {
  return guarded([&] {
    if (!out)
      throw InvalidArgument("pw_phi_random: null pointer");
    *out = new pw_phi{random_phi(m, g, seed, scale)};
  });
}

void pw_phi_destroy(pw_phi *p) { delete p; }
int pw_phi_rank(const pw_phi *p) { return p->params.rank(); }
int pw_phi_order(const pw_phi *p) { return p->params.order(); }
void pw_phi_coeffs(const pw_phi *p, double *out) { pack(p->params.coeffs(), out); }

pw_status pw_wavelet_create(int m, int genus, const double *coeffs,
                            pw_wavelet **out) {
  return guarded([&] {
    if (!coeffs || !out)
      throw InvalidArgument("pw_wavelet_create: null pointer");
    *out = new pw_wavelet{
        WaveletMatrix(m, genus, unpack(coeffs, static_cast<size_t>(m) * m * genus))};
  });
}

void pw_wavelet_destroy(pw_wavelet *w) { delete w; }
int pw_wavelet_rank(const pw_wavelet *w) { return w->matrix.rank(); }
int pw_wavelet_genus(const pw_wavelet *w) { return w->matrix.genus(); }
void pw_wavelet_coeffs(const pw_wavelet *w, double *out) {
  pack(w->matrix.coeffs(), out);
}

pw_status pw_wavelet_validate(const pw_wavelet *w, pw_validation *out) {
  return guarded([&] {
    if (!w || !out)
      throw InvalidArgument("pw_wavelet_validate: null pointer");
    ValidationReport rep = validate(w->matrix);
    out->quad_residual = rep.quad_residual;
    out->linear_residual = rep.linear_residual;
    out->degree = rep.degree;
    out->det_const_re = rep.det_const.real();
    out->det_const_im = rep.det_const.imag();
    out->det_residual = rep.det_residual;
  });
}

pw_status pw_wavelet_degree(const pw_wavelet *w, int *out) {
  return guarded([&] {
    if (!w || !out)
      throw InvalidArgument("pw_wavelet_degree: null pointer");
    *out = degree(w->matrix);
  });
}

pw_status pw_construct(const pw_phi *p, double tol, pw_wavelet **out) {
  return guarded([&] {
    if (!p || !out)
      throw InvalidArgument("pw_construct: null pointer");
    ConstructOptions opts;
    if (tol > 0)
      opts.tol = tol;
    *out = new pw_wavelet{phi_to_wavelet(p->params, opts)};
  });
}

pw_status pw_coordinates(const pw_wavelet *w, int undo_prefix, double tol,
                         pw_phi **out) {
  return guarded([&] {
    if (!w || !out)
      throw InvalidArgument("pw_coordinates: null pointer");
    CoordinateOptions opts;
    opts.undo_prefix = undo_prefix != 0;
    if (tol > 0)
      opts.tol = tol;
    *out = new pw_phi{wavelet_to_phi(w->matrix, opts)};
  });
}

pw_status pw_factor(const pw_wavelet *w, double tol, pw_factorization **out) {
  return guarded([&] {
    if (!w || !out)
      throw InvalidArgument("pw_factor: null pointer");
    const int m = w->matrix.rank();
    LaurentMatrix a = cplx(1.0 / std::sqrt(static_cast<double>(m)), 0.0) *
                      to_polyphase(w->matrix);
    PrimitiveFactorization f = extract_factors(a, tol > 0 ? tol : 1e-9);
    LaurentMatrix diff = synthesize(f) - a;
    auto handle = new pw_factorization{std::move(f), m, diff.max_abs_coeff()};
    *out = handle;
  });
}

void pw_factorization_destroy(pw_factorization *f) { delete f; }
int pw_factorization_count(const pw_factorization *f) {
  return static_cast<int>(f->fact.factors.size());
}
int pw_factorization_rank(const pw_factorization *f) { return f->m; }
void pw_factorization_vector(const pw_factorization *f, int i, double *out) {
  pack(f->fact.factors[static_cast<size_t>(i)].v, out);
}
void pw_factorization_tail(const pw_factorization *f, double *out) {
  pack(f->fact.tail_unitary.eval(cplx{1.0, 0.0}), out);
}
double pw_factorization_residual(const pw_factorization *f) { return f->residual; }

pw_status pw_analyze(const pw_wavelet *w, int64_t offset, const double *samples,
                     size_t count, pw_subbands **out) {
  return guarded([&] {
    if (!w || !out || (!samples && count > 0))
      throw InvalidArgument("pw_analyze: null pointer");
    Signal f;
    f.offset = offset;
    f.samples = unpack(samples, count);
    *out = new pw_subbands{analyze(f, w->matrix)};
  });
}

void pw_subbands_destroy(pw_subbands *s) { delete s; }
int pw_subbands_count(const pw_subbands *s) { return s->coeffs.m; }
int64_t pw_subbands_offset(const pw_subbands *s, int r) {
  return s->coeffs.offsets[static_cast<size_t>(r)];
}
size_t pw_subbands_length(const pw_subbands *s, int r) {
  return s->coeffs.coeffs[static_cast<size_t>(r)].size();
}
void pw_subbands_coeffs(const pw_subbands *s, int r, double *out) {
  pack(s->coeffs.coeffs[static_cast<size_t>(r)], out);
}

pw_status pw_subbands_create(int m, pw_subbands **out) {
  return guarded([&] {
    if (!out || m < 2)
      throw InvalidArgument("pw_subbands_create: bad arguments");
    auto s = new pw_subbands{};
    s->coeffs.m = m;
    s->coeffs.offsets.assign(static_cast<size_t>(m), 0);
    s->coeffs.coeffs.resize(static_cast<size_t>(m));
    *out = s;
  });
}

pw_status pw_subbands_set(pw_subbands *s, int r, int64_t offset,
                          const double *coeffs, size_t count) {
  return guarded([&] {
    if (!s || r < 0 || r >= s->coeffs.m || (!coeffs && count > 0))
      throw InvalidArgument("pw_subbands_set: bad arguments");
    s->coeffs.offsets[static_cast<size_t>(r)] = offset;
    s->coeffs.coeffs[static_cast<size_t>(r)] = unpack(coeffs, count);
  });
}

pw_status pw_synthesize(const pw_subbands *s, const pw_wavelet *w,
                        int64_t *offset, size_t *count, double *samples) {
  return guarded([&] {
    if (!s || !w || !offset || !count)
      throw InvalidArgument("pw_synthesize: null pointer");
    Signal f = synthesize_signal(s->coeffs, w->matrix);
    if (!samples) {
      *offset = f.offset;
      *count = f.samples.size();
      return;
    }
    if (*count < f.samples.size())
      throw InvalidArgument("pw_synthesize: buffer too small");
    *offset = f.offset;
    *count = f.samples.size();
    pack(f.samples, samples);
  });
}

pw_status pw_scaling_function(const pw_wavelet *w, int level, int maxiter,
                              double tol, pw_samples **out) {
  return guarded([&] {
    if (!w || !out)
      throw InvalidArgument("pw_scaling_function: null pointer");
    CascadeResult res = scaling_function(w->matrix, level, maxiter,
                                         tol > 0 ? tol : 1e-7);
    auto h = new pw_samples{};
    h->series.push_back(std::move(res.phi));
    h->iterations = res.iterations;
    h->residual = res.final_change;
    h->converged = res.converged;
    *out = h;
  });
}

pw_status pw_wavelet_functions(const pw_wavelet *w, const pw_samples *phi,
                               pw_samples **out) {
  return guarded([&] {
    if (!w || !phi || !out || phi->series.empty())
      throw InvalidArgument("pw_wavelet_functions: bad arguments");
    auto h = new pw_samples{};
    h->series = wavelet_functions(w->matrix, phi->series.front());
    *out = h;
  });
}

void pw_samples_destroy(pw_samples *s) { delete s; }
int pw_samples_series(const pw_samples *s) {
  return static_cast<int>(s->series.size());
}
int pw_samples_level(const pw_samples *s) { return s->series.front().level; }
int64_t pw_samples_start(const pw_samples *s) { return s->series.front().start; }
size_t pw_samples_length(const pw_samples *s) {
  return s->series.front().values.size();
}
void pw_samples_values(const pw_samples *s, int series, double *out) {
  pack(s->series[static_cast<size_t>(series)].values, out);
}
int pw_samples_iterations(const pw_samples *s) { return s->iterations; }
double pw_samples_residual(const pw_samples *s) { return s->residual; }
int pw_samples_converged(const pw_samples *s) { return s->converged ? 1 : 0; }

} // extern "C"
