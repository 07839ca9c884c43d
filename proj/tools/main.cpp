// parawave command line tool. All library calls go through the C interface
// in parawave.h; JSON/CSV serialization and process concerns live here.
//
// Exit codes: 0 success, 1 residuals above tolerance, 2 malformed input.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/utsname.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "parawave.h"

using json = nlohmann::ordered_json;

namespace {

constexpr double kDefaultTol = 1e-9;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string &msg) {
  throw CliError{code, msg};
}

void check(pw_status st, const std::string &what) {
  if (st != PW_OK)
    fail(1, what + ": " + pw_status_name(st) + " (" + pw_last_error() + ")");
}

// ---- handle wrappers ------------------------------------------------------

struct PhiDeleter {
  void operator()(pw_phi *p) const { pw_phi_destroy(p); }
};
struct WaveletDeleter {
  void operator()(pw_wavelet *w) const { pw_wavelet_destroy(w); }
};
struct SubbandsDeleter {
  void operator()(pw_subbands *s) const { pw_subbands_destroy(s); }
};
struct SamplesDeleter {
  void operator()(pw_samples *s) const { pw_samples_destroy(s); }
};
struct FactorizationDeleter {
  void operator()(pw_factorization *f) const { pw_factorization_destroy(f); }
};

using PhiPtr = std::unique_ptr<pw_phi, PhiDeleter>;
using WaveletPtr = std::unique_ptr<pw_wavelet, WaveletDeleter>;
using SubbandsPtr = std::unique_ptr<pw_subbands, SubbandsDeleter>;
using SamplesPtr = std::unique_ptr<pw_samples, SamplesDeleter>;
using FactorizationPtr = std::unique_ptr<pw_factorization, FactorizationDeleter>;

// ---- JSON (de)serialization ------------------------------------------------

json complex_pair(double re, double im) { return json::array({re, im}); }

json pairs_row(const std::vector<double> &flat, size_t begin, size_t count) {
  json row = json::array();
  for (size_t i = 0; i < count; ++i)
    row.push_back(complex_pair(flat[2 * (begin + i)], flat[2 * (begin + i) + 1]));
  return row;
}

json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(2, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const std::exception &e) {
    fail(2, path + ": " + e.what());
  }
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(2, "cannot open " + path + " for writing");
  out << text;
  if (!out)
    fail(2, "write failed: " + path);
}

std::vector<double> parse_pair_rows(const json &rows, size_t expect_rows,
                                    size_t expect_cols, const std::string &what) {
  if (!rows.is_array() || rows.size() != expect_rows)
    fail(2, what + ": expected " + std::to_string(expect_rows) + " rows");
  std::vector<double> flat;
  flat.reserve(2 * expect_rows * expect_cols);
  for (const json &row : rows) {
    if (!row.is_array() || row.size() != expect_cols)
      fail(2, what + ": expected rows of " + std::to_string(expect_cols) +
                  " [re, im] pairs");
    for (const json &p : row) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        fail(2, what + ": complex entries must be [re, im] numbers");
      flat.push_back(p[0].get<double>());
      flat.push_back(p[1].get<double>());
    }
  }
  return flat;
}

json wavelet_to_json(const pw_wavelet *w) {
  const int m = pw_wavelet_rank(w);
  const int genus = pw_wavelet_genus(w);
  const size_t taps = size_t(m) * genus;
  std::vector<double> flat(2 * size_t(m) * taps);
  pw_wavelet_coeffs(w, flat.data());
  json rows = json::array();
  for (int r = 0; r < m; ++r)
    rows.push_back(pairs_row(flat, size_t(r) * taps, taps));
  return json{{"m", m}, {"genus", genus}, {"rows", rows}};
}

WaveletPtr wavelet_from_json(const json &j, const std::string &what) {
  if (!j.is_object() || !j.contains("m") || !j.contains("genus") || !j.contains("rows"))
    fail(2, what + ": expected {m, genus, rows}");
  if (!j["m"].is_number_integer() || !j["genus"].is_number_integer())
    fail(2, what + ": m and genus must be integers");
  const int m = j["m"].get<int>();
  const int genus = j["genus"].get<int>();
  if (m < 2 || genus < 1)
    fail(2, what + ": need m >= 2 and genus >= 1");
  std::vector<double> flat =
      parse_pair_rows(j["rows"], size_t(m), size_t(m) * genus, what);
  pw_wavelet *w = nullptr;
  pw_status st = pw_wavelet_create(m, genus, flat.data(), &w);
  if (st != PW_OK)
    fail(2, what + ": " + pw_last_error());
  return WaveletPtr(w);
}

json phi_to_json(const pw_phi *p) {
  const int m = pw_phi_rank(p);
  const int g = pw_phi_order(p);
  std::vector<double> flat(2 * size_t(m - 1) * g);
  pw_phi_coeffs(p, flat.data());
  json rows = json::array();
  for (int r = 0; r < m - 1; ++r)
    rows.push_back(pairs_row(flat, size_t(r) * g, size_t(g)));
  return json{{"m", m}, {"g", g}, {"phi", rows}};
}

PhiPtr phi_from_json(const json &j, const std::string &what) {
  if (!j.is_object() || !j.contains("m") || !j.contains("g") || !j.contains("phi"))
    fail(2, what + ": expected {m, g, phi}");
  if (!j["m"].is_number_integer() || !j["g"].is_number_integer())
    fail(2, what + ": m and g must be integers");
  const int m = j["m"].get<int>();
  const int g = j["g"].get<int>();
  if (m < 2 || g < 0)
    fail(2, what + ": need m >= 2 and g >= 0");
  std::vector<double> flat = parse_pair_rows(j["phi"], size_t(m - 1), size_t(g), what);
  pw_phi *p = nullptr;
  pw_status st = pw_phi_create(m, g, flat.data(), &p);
  if (st != PW_OK)
    fail(2, what + ": " + pw_last_error());
  return PhiPtr(p);
}

json validation_to_json(const pw_validation &rep, double tol) {
  bool ok = rep.quad_residual <= tol && rep.linear_residual <= tol &&
            rep.det_residual <= tol;
  return json{{"quad_residual", rep.quad_residual},
              {"linear_residual", rep.linear_residual},
              {"degree", rep.degree},
              {"det_const", complex_pair(rep.det_const_re, rep.det_const_im)},
              {"det_residual", rep.det_residual},
              {"tol", tol},
              {"ok", ok}};
}

// ---- CSV ------------------------------------------------------------------

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ','))
    out.push_back(field);
  return out;
}

double parse_double_field(const std::string &s, const std::string &what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos != s.size())
      fail(2, what + ": bad number '" + s + "'");
    return v;
  } catch (const CliError &) {
    throw;
  } catch (const std::exception &) {
    fail(2, what + ": bad number '" + s + "'");
  }
}

long long parse_int_field(const std::string &s, const std::string &what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
      fail(2, what + ": bad integer '" + s + "'");
    return v;
  } catch (const CliError &) {
    throw;
  } catch (const std::exception &) {
    fail(2, what + ": bad integer '" + s + "'");
  }
}

std::string strip(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// signal CSV: header "n,re,im", one sample per line; gaps read as zeros
struct LoadedSignal {
  int64_t offset = 0;
  std::vector<double> interleaved;
};

LoadedSignal load_signal_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(2, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || strip(line) != "n,re,im")
    fail(2, path + ": first line must be the header 'n,re,im'");
  std::vector<std::pair<long long, std::pair<double, double>>> rows;
  while (std::getline(in, line)) {
    if (strip(line).empty())
      continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3)
      fail(2, path + ": expected 3 fields per line");
    long long n = parse_int_field(strip(fields[0]), path);
    double re = parse_double_field(strip(fields[1]), path);
    double im = parse_double_field(strip(fields[2]), path);
    rows.emplace_back(n, std::make_pair(re, im));
  }
  LoadedSignal out;
  if (rows.empty())
    return out;
  std::sort(rows.begin(), rows.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  out.offset = rows.front().first;
  const long long span = rows.back().first - rows.front().first + 1;
  out.interleaved.assign(size_t(span) * 2, 0.0);
  for (const auto &[n, v] : rows) {
    size_t i = size_t(n - out.offset);
    out.interleaved[2 * i] = v.first;
    out.interleaved[2 * i + 1] = v.second;
  }
  return out;
}

void write_signal_csv(const std::string &path, int64_t offset,
                      const std::vector<double> &interleaved) {
  std::string text = "n,re,im\n";
  for (size_t i = 0; 2 * i < interleaved.size(); ++i) {
    text += std::to_string(offset + int64_t(i));
    text += ',';
    text += format_double(interleaved[2 * i]);
    text += ',';
    text += format_double(interleaved[2 * i + 1]);
    text += '\n';
  }
  write_text_file(path, text);
}

// subband CSV: header "r,k,re,im"
void write_subbands_csv(const std::string &path, const pw_subbands *s) {
  std::string text = "r,k,re,im\n";
  for (int r = 0; r < pw_subbands_count(s); ++r) {
    const size_t len = pw_subbands_length(s, r);
    std::vector<double> flat(2 * len);
    pw_subbands_coeffs(s, r, flat.data());
    const int64_t off = pw_subbands_offset(s, r);
    for (size_t i = 0; i < len; ++i) {
      text += std::to_string(r);
      text += ',';
      text += std::to_string(off + int64_t(i));
      text += ',';
      text += format_double(flat[2 * i]);
      text += ',';
      text += format_double(flat[2 * i + 1]);
      text += '\n';
    }
  }
  write_text_file(path, text);
}

SubbandsPtr load_subbands_csv(const std::string &path, int m) {
  std::ifstream in(path);
  if (!in)
    fail(2, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || strip(line) != "r,k,re,im")
    fail(2, path + ": first line must be the header 'r,k,re,im'");
  std::vector<std::vector<std::pair<long long, std::pair<double, double>>>> rows(
      static_cast<size_t>(m));
  while (std::getline(in, line)) {
    if (strip(line).empty())
      continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 4)
      fail(2, path + ": expected 4 fields per line");
    long long r = parse_int_field(strip(fields[0]), path);
    long long k = parse_int_field(strip(fields[1]), path);
    if (r < 0 || r >= m)
      fail(2, path + ": subband index out of range");
    double re = parse_double_field(strip(fields[2]), path);
    double im = parse_double_field(strip(fields[3]), path);
    rows[size_t(r)].emplace_back(k, std::make_pair(re, im));
  }
  pw_subbands *raw = nullptr;
  check(pw_subbands_create(m, &raw), "subbands");
  SubbandsPtr s(raw);
  for (int r = 0; r < m; ++r) {
    auto &v = rows[size_t(r)];
    if (v.empty())
      continue;
    std::sort(v.begin(), v.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    const long long klo = v.front().first;
    const long long span = v.back().first - klo + 1;
    std::vector<double> flat(size_t(span) * 2, 0.0);
    for (const auto &[k, val] : v) {
      flat[2 * size_t(k - klo)] = val.first;
      flat[2 * size_t(k - klo) + 1] = val.second;
    }
    check(pw_subbands_set(s.get(), r, klo, flat.data(), size_t(span)),
          "subbands");
  }
  return s;
}

// ---- subcommand implementations --------------------------------------------

int threads_from_env() {
  const char *env = std::getenv("PARAWAVE_THREADS");
  int n = 0;
  if (env && *env)
    n = std::atoi(env);
  if (n <= 0)
    n = int(std::thread::hardware_concurrency());
  return std::max(1, n);
}

struct GenArgs {
  int m = 2;
  int g = 0;
  std::optional<uint64_t> seed;
  std::string phi_file;
  double scale = 1.0;
  double tol = kDefaultTol;
  int count = 1;
  std::string out;
};

int run_gen(const GenArgs &args) {
  if (!args.phi_file.empty() && args.count != 1)
    fail(2, "--count requires --seed generation");

  struct Result {
    json wavelet;
    json report;
    bool ok;
  };
  auto one = [&](uint64_t seed) -> Result {
    PhiPtr phi;
    if (!args.phi_file.empty()) {
      phi = phi_from_json(load_json_file(args.phi_file), args.phi_file);
      if (pw_phi_rank(phi.get()) != args.m && args.m != 2)
        fail(2, "--m disagrees with the coordinate file");
    } else {
      pw_phi *p = nullptr;
      check(pw_phi_random(args.m, args.g, seed, args.scale, &p), "random phi");
      phi = PhiPtr(p);
    }
    pw_wavelet *w = nullptr;
    check(pw_construct(phi.get(), 0.0, &w), "construct");
    WaveletPtr wavelet(w);
    pw_validation rep{};
    check(pw_wavelet_validate(wavelet.get(), &rep), "validate");
    bool ok = rep.quad_residual <= args.tol && rep.linear_residual <= args.tol &&
              rep.det_residual <= args.tol;
    return {wavelet_to_json(wavelet.get()), validation_to_json(rep, args.tol), ok};
  };

  bool all_ok = true;
  if (args.count == 1) {
    Result r = one(args.seed.value_or(0));
    write_text_file(args.out, r.wavelet.dump(2) + "\n");
    std::cout << r.report.dump(2) << "\n";
    all_ok = r.ok;
  } else {
    // independent tasks, deterministic per-index seeds, output in index order
    std::vector<Result> results(size_t(args.count));
    const int workers = std::min(threads_from_env(), args.count);
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t)
      futs.push_back(std::async(std::launch::async, [&] {
        for (int i = next.fetch_add(1); i < args.count; i = next.fetch_add(1))
          results[size_t(i)] = one(args.seed.value_or(0) + uint64_t(i));
      }));
    for (auto &f : futs)
      f.get();
    json matrices = json::array();
    json reports = json::array();
    for (const Result &r : results) {
      matrices.push_back(r.wavelet);
      reports.push_back(r.report);
      all_ok = all_ok && r.ok;
    }
    write_text_file(args.out, matrices.dump(2) + "\n");
    std::cout << reports.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_verify(const std::string &in, double tol) {
  WaveletPtr w = wavelet_from_json(load_json_file(in), in);
  pw_validation rep{};
  check(pw_wavelet_validate(w.get(), &rep), "validate");
  json report = validation_to_json(rep, tol);
  std::cout << report.dump(2) << "\n";
  return report["ok"].get<bool>() ? 0 : 1;
}

int run_coords(const std::string &in, const std::string &out, bool undo_prefix,
               double tol) {
  WaveletPtr w = wavelet_from_json(load_json_file(in), in);
  pw_phi *p = nullptr;
  check(pw_coordinates(w.get(), undo_prefix ? 1 : 0, tol, &p), "coordinates");
  PhiPtr phi(p);
  write_text_file(out, phi_to_json(phi.get()).dump(2) + "\n");
  return 0;
}

int run_factor(const std::string &in, const std::string &out, double tol) {
  WaveletPtr w = wavelet_from_json(load_json_file(in), in);
  pw_factorization *f = nullptr;
  check(pw_factor(w.get(), tol, &f), "factor");
  FactorizationPtr fact(f);
  const int m = pw_factorization_rank(f);
  const int count = pw_factorization_count(f);
  json factors = json::array();
  for (int i = 0; i < count; ++i) {
    std::vector<double> v(2 * size_t(m));
    pw_factorization_vector(f, i, v.data());
    factors.push_back(pairs_row(v, 0, size_t(m)));
  }
  std::vector<double> tail(2 * size_t(m) * m);
  pw_factorization_tail(f, tail.data());
  json tail_rows = json::array();
  for (int r = 0; r < m; ++r)
    tail_rows.push_back(pairs_row(tail, size_t(r) * m, size_t(m)));
  json doc{{"m", m},
           {"count", count},
           {"factors", factors},
           {"tail_unitary", tail_rows},
           {"resynthesis_residual", pw_factorization_residual(f)}};
  std::cout << doc.dump(2) << "\n";
  if (!out.empty())
    write_text_file(out, doc.dump(2) + "\n");
  return 0;
}

int run_transform(const std::string &mode, const std::string &wm,
                  const std::string &signal, const std::string &out) {
  WaveletPtr w = wavelet_from_json(load_json_file(wm), wm);
  if (mode == "analyze") {
    LoadedSignal f = load_signal_csv(signal);
    pw_subbands *s = nullptr;
    check(pw_analyze(w.get(), f.offset, f.interleaved.data(),
                     f.interleaved.size() / 2, &s),
          "analyze");
    SubbandsPtr sub(s);
    write_subbands_csv(out, sub.get());
    return 0;
  }
  SubbandsPtr sub = load_subbands_csv(signal, pw_wavelet_rank(w.get()));
  int64_t offset = 0;
  size_t count = 0;
  check(pw_synthesize(sub.get(), w.get(), &offset, &count, nullptr), "synthesize");
  std::vector<double> samples(2 * count);
  check(pw_synthesize(sub.get(), w.get(), &offset, &count, samples.data()),
        "synthesize");
  write_signal_csv(out, offset, samples);
  return 0;
}

int run_cascade(const std::string &wm, int level, int maxiter, double tol,
                bool wavelets, const std::string &out) {
  WaveletPtr w = wavelet_from_json(load_json_file(wm), wm);
  pw_samples *phi_raw = nullptr;
  check(pw_scaling_function(w.get(), level, maxiter, tol, &phi_raw), "cascade");
  SamplesPtr phi(phi_raw);
  SamplesPtr psi;
  if (wavelets) {
    pw_samples *p = nullptr;
    check(pw_wavelet_functions(w.get(), phi.get(), &p), "wavelet functions");
    psi = SamplesPtr(p);
  }

  const int m = pw_wavelet_rank(w.get());
  const int lvl = pw_samples_level(phi.get());
  const int64_t start = pw_samples_start(phi.get());
  const size_t len = pw_samples_length(phi.get());
  std::vector<double> phiv(2 * len);
  pw_samples_values(phi.get(), 0, phiv.data());
  std::vector<std::vector<double>> psiv;
  if (wavelets) {
    for (int r = 0; r + 1 < m; ++r) {
      std::vector<double> v(2 * len);
      pw_samples_values(psi.get(), r, v.data());
      psiv.push_back(std::move(v));
    }
  }

  std::string header = "x,phi_re,phi_im";
  for (size_t r = 0; r < psiv.size(); ++r)
    header += ",psi" + std::to_string(r + 1) + "_re,psi" + std::to_string(r + 1) + "_im";
  std::string text = header + "\n";
  const double step = std::pow(double(m), -lvl);
  for (size_t i = 0; i < len; ++i) {
    double x = (double(start) + double(i)) * step;
    text += format_double(x);
    text += ',';
    text += format_double(phiv[2 * i]);
    text += ',';
    text += format_double(phiv[2 * i + 1]);
    for (const auto &v : psiv) {
      text += ',';
      text += format_double(v[2 * i]);
      text += ',';
      text += format_double(v[2 * i + 1]);
    }
    text += '\n';
  }
  write_text_file(out, text);

  json info{{"level", lvl},
            {"samples", len},
            {"iterations", pw_samples_iterations(phi.get())},
            {"final_change", pw_samples_residual(phi.get())},
            {"converged", pw_samples_converged(phi.get()) != 0}};
  std::cout << info.dump(2) << "\n";
  return 0;
}

int run_bench(int m, int g, int reps, uint64_t seed) {
  using clock = std::chrono::steady_clock;
  std::vector<double> times;
  times.reserve(size_t(reps));
  for (int i = 0; i < reps; ++i) {
    pw_phi *p = nullptr;
    check(pw_phi_random(m, g, seed + uint64_t(i), 1.0, &p), "random phi");
    PhiPtr phi(p);
    auto t0 = clock::now();
    pw_wavelet *w = nullptr;
    check(pw_construct(phi.get(), 0.0, &w), "construct");
    auto t1 = clock::now();
    pw_wavelet_destroy(w);
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted.size() % 2 == 1
                      ? sorted[sorted.size() / 2]
                      : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);

  json machine{{"hardware_concurrency", std::thread::hardware_concurrency()}};
#if defined(__unix__) || defined(__APPLE__)
  utsname uts{};
  if (uname(&uts) == 0) {
    machine["os"] = uts.sysname;
    machine["arch"] = uts.machine;
  }
#endif
  json doc{{"m", m},
           {"g", g},
           {"reps", reps},
           {"seed", seed},
           {"times_seconds", times},
           {"median_seconds", median},
           {"min_seconds", sorted.front()},
           {"machine", machine}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"compact wavelet matrix construction via Wiener-Hopf coordinates"};
  app.require_subcommand(1);

  GenArgs gen;
  uint64_t gen_seed = 0;
  CLI::App *cgen = app.add_subcommand("gen", "construct a wavelet matrix");
  cgen->add_option("--m", gen.m, "rank (number of filter bank channels)")
      ->check(CLI::Range(2, 1000));
  cgen->add_option("--g", gen.g, "degree (genus - 1)")->check(CLI::Range(0, 10000));
  auto *seed_opt = cgen->add_option("--seed", gen_seed, "random coordinate seed");
  auto *phi_opt = cgen->add_option("--phi", gen.phi_file, "coordinate JSON file");
  seed_opt->excludes(phi_opt);
  cgen->add_option("--scale", gen.scale, "radius of the coefficient disk");
  cgen->add_option("--tol", gen.tol, "validation tolerance");
  cgen->add_option("--count", gen.count, "number of matrices (seeded mode)")
      ->check(CLI::Range(1, 1 << 20));
  cgen->add_option("--out", gen.out, "output wavelet matrix JSON")->required();

  std::string verify_in;
  double verify_tol = kDefaultTol;
  CLI::App *cverify = app.add_subcommand("verify", "validate a wavelet matrix file");
  cverify->add_option("--in", verify_in, "wavelet matrix JSON")->required();
  cverify->add_option("--tol", verify_tol, "tolerance");

  std::string coords_in, coords_out;
  bool no_undo = false;
  double coords_tol = 1e-8;
  CLI::App *ccoords =
      app.add_subcommand("coords", "recover the Wiener-Hopf coordinates");
  ccoords->add_option("--in", coords_in, "wavelet matrix JSON")->required();
  ccoords->add_option("--out", coords_out, "coordinate JSON output")->required();
  ccoords->add_flag("--no-undo-prefix", no_undo,
                    "skip removing the canonical constant prefix");
  ccoords->add_option("--tol", coords_tol, "consistency tolerance");

  std::string factor_in, factor_out;
  double factor_tol = kDefaultTol;
  CLI::App *cfactor =
      app.add_subcommand("factor", "factor into primitive degree-1 terms");
  cfactor->add_option("--in", factor_in, "wavelet matrix JSON")->required();
  cfactor->add_option("--out", factor_out, "optional factorization JSON output");
  cfactor->add_option("--tol", factor_tol, "extraction tolerance");

  std::string tr_wm, tr_signal, tr_out;
  CLI::App *ctrans = app.add_subcommand("transform", "subband analysis/synthesis");
  ctrans->require_subcommand(1);
  CLI::App *cana = ctrans->add_subcommand("analyze", "signal -> subband CSV");
  CLI::App *csyn = ctrans->add_subcommand("synth", "subband CSV -> signal");
  for (CLI::App *c : {cana, csyn}) {
    c->add_option("--wm", tr_wm, "wavelet matrix JSON")->required();
    c->add_option("--signal", tr_signal, "input CSV")->required();
    c->add_option("--out", tr_out, "output CSV")->required();
  }

  std::string cas_wm, cas_out;
  int cas_level = 0, cas_maxiter = 0;
  double cas_tol = 1e-7;
  bool cas_wavelets = false;
  CLI::App *ccas = app.add_subcommand("cascade", "scaling function samples");
  ccas->add_option("--wm", cas_wm, "wavelet matrix JSON")->required();
  ccas->add_option("--level", cas_level, "grid level (step m^-level)");
  ccas->add_option("--maxiter", cas_maxiter, "iteration budget");
  ccas->add_option("--tol", cas_tol, "sup-norm stopping tolerance");
  ccas->add_flag("--wavelets", cas_wavelets, "include the wavelet functions");
  ccas->add_option("--out", cas_out, "output CSV")->required();

  int bench_m = 30, bench_g = 50, bench_reps = 10;
  uint64_t bench_seed = 1;
  CLI::App *cbench = app.add_subcommand("bench", "time the construction");
  cbench->add_option("--m", bench_m, "rank");
  cbench->add_option("--g", bench_g, "degree");
  cbench->add_option("--reps", bench_reps, "repetitions")->check(CLI::Range(1, 10000));
  cbench->add_option("--seed", bench_seed, "seed of the first repetition");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cgen->parsed()) {
      if (seed_opt->count())
        gen.seed = gen_seed;
      if (gen.phi_file.empty() && !gen.seed)
        gen.seed = 0;
      return run_gen(gen);
    }
    if (cverify->parsed())
      return run_verify(verify_in, verify_tol);
    if (ccoords->parsed())
      return run_coords(coords_in, coords_out, !no_undo, coords_tol);
    if (cfactor->parsed())
      return run_factor(factor_in, factor_out, factor_tol);
    if (ctrans->parsed())
      return run_transform(cana->parsed() ? "analyze" : "synth", tr_wm, tr_signal,
                           tr_out);
    if (ccas->parsed())
      return run_cascade(cas_wm, cas_level, cas_maxiter, cas_tol, cas_wavelets,
                         cas_out);
    if (cbench->parsed())
      return run_bench(bench_m, bench_g, bench_reps, bench_seed);
  } catch (const CliError &e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
