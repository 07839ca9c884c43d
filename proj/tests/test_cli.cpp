// End-to-end runs of the command line tool: schema round trips, exit codes,
// byte-identical reruns. Spawns the real binary (path injected at build
// time) in a scratch directory.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout only
};

RunResult run_cli(const std::string &args) {
  std::string cmd = std::string(PARAWAVE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_file(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("parawave_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string &name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("gen m=2 g=0 produces Haar and verifies") {
  Scratch tmp;
  std::string out = tmp / "haar.json";
  RunResult gen = run_cli("gen --m 2 --g 0 --seed 1 --out " + out);
  CHECK(gen.exit_code == 0);
  CHECK(gen.output.find("\"ok\": true") != std::string::npos);

  std::string body = read_file(out);
  CHECK(body.find("\"m\": 2") != std::string::npos);
  CHECK(body.find("\"genus\": 1") != std::string::npos);

  RunResult verify = run_cli("verify --in " + out);
  CHECK(verify.exit_code == 0);
}

TEST_CASE("gen is byte-identical for a fixed seed") {
  Scratch tmp;
  std::string a = tmp / "a.json", b = tmp / "b.json";
  RunResult ra = run_cli("gen --m 3 --g 2 --seed 42 --out " + a);
  RunResult rb = run_cli("gen --m 3 --g 2 --seed 42 --out " + b);
  CHECK(ra.exit_code == 0);
  CHECK(rb.exit_code == 0);
  CHECK(ra.output == rb.output);
  CHECK(read_file(a) == read_file(b));

  RunResult rc = run_cli("gen --m 3 --g 2 --seed 43 --out " + b);
  CHECK(rc.exit_code == 0);
  CHECK(read_file(a) != read_file(b));
}

TEST_CASE("coords then gen --phi round trips") {
  Scratch tmp;
  std::string w1 = tmp / "w1.json", phi = tmp / "phi.json", w2 = tmp / "w2.json";
  REQUIRE(run_cli("gen --m 2 --g 3 --seed 7 --out " + w1).exit_code == 0);
  REQUIRE(run_cli("coords --in " + w1 + " --out " + phi).exit_code == 0);
  REQUIRE(run_cli("gen --m 2 --g 3 --phi " + phi + " --out " + w2).exit_code == 0);
  // canonical-form inputs regenerate the same coefficients
  json a = json::parse(read_file(w1));
  json b = json::parse(read_file(w2));
  REQUIRE(a["rows"].size() == b["rows"].size());
  for (size_t r = 0; r < a["rows"].size(); ++r)
    for (size_t j = 0; j < a["rows"][r].size(); ++j)
      for (int part = 0; part < 2; ++part)
        CHECK(std::abs(a["rows"][r][j][part].get<double>() -
                       b["rows"][r][j][part].get<double>()) <= 1e-8);
  RunResult verify = run_cli("verify --in " + w2);
  CHECK(verify.exit_code == 0);
}

TEST_CASE("verify rejects corrupted matrices with exit 1") {
  Scratch tmp;
  std::string out = tmp / "w.json";
  REQUIRE(run_cli("gen --m 2 --g 1 --seed 5 --out " + out).exit_code == 0);
  std::string body = read_file(out);
  // damage one coefficient
  size_t pos = body.find("0.");
  REQUIRE(pos != std::string::npos);
  body.replace(pos, 2, "9.");
  std::ofstream(out, std::ios::binary) << body;
  RunResult verify = run_cli("verify --in " + out);
  CHECK(verify.exit_code == 1);
  CHECK(verify.output.find("\"ok\": false") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  Scratch tmp;
  std::string bad = tmp / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("verify --in " + bad).exit_code == 2);
  CHECK(run_cli("verify --in " + (tmp / "missing.json")).exit_code == 2);

  std::string nothdr = tmp / "sig.csv";
  std::ofstream(nothdr) << "0,1,0\n";
  std::string w = tmp / "w.json";
  REQUIRE(run_cli("gen --m 2 --g 0 --seed 1 --out " + w).exit_code == 0);
  CHECK(run_cli("transform analyze --wm " + w + " --signal " + nothdr +
                " --out " + (tmp / "o.csv"))
            .exit_code == 2);
}

TEST_CASE("transform analyze + synth reconstructs the signal file") {
  Scratch tmp;
  std::string w = tmp / "w.json";
  REQUIRE(run_cli("gen --m 2 --g 1 --seed 11 --out " + w).exit_code == 0);

  std::string sig = tmp / "sig.csv";
  {
    std::ofstream out(sig);
    out << "n,re,im\n";
    for (int n = -3; n < 13; ++n)
      out << n << "," << (0.25 * n) << "," << (n % 3 == 0 ? -1.5 : 0.5) << "\n";
  }
  std::string coeff = tmp / "coeff.csv", back = tmp / "back.csv";
  REQUIRE(run_cli("transform analyze --wm " + w + " --signal " + sig +
                  " --out " + coeff)
              .exit_code == 0);
  std::string chead = read_file(coeff).substr(0, 9);
  CHECK(chead == "r,k,re,im");
  REQUIRE(run_cli("transform synth --wm " + w + " --signal " + coeff +
                  " --out " + back)
              .exit_code == 0);

  // compare as maps n -> value, original window only, 1e-10 tolerance
  auto parse = [](const std::string &text) {
    std::map<long long, std::pair<double, double>> vals;
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);
    while (std::getline(ss, line)) {
      if (line.empty())
        continue;
      long long n;
      double re, im;
      REQUIRE(sscanf(line.c_str(), "%lld,%lf,%lf", &n, &re, &im) == 3);
      vals[n] = {re, im};
    }
    return vals;
  };
  auto orig = parse(read_file(sig));
  auto rec = parse(read_file(back));
  for (const auto &[n, v] : orig) {
    auto it = rec.find(n);
    REQUIRE(it != rec.end());
    CHECK(std::abs(it->second.first - v.first) <= 1e-10);
    CHECK(std::abs(it->second.second - v.second) <= 1e-10);
  }
  // outside the original window the reconstruction is zero
  for (const auto &[n, v] : rec)
    if (!orig.count(n)) {
      CHECK(std::abs(v.first) <= 1e-10);
      CHECK(std::abs(v.second) <= 1e-10);
    }
}

TEST_CASE("cascade writes the expected header and a unit integral") {
  Scratch tmp;
  std::string w = tmp / "w.json";
  REQUIRE(run_cli("gen --m 2 --g 1 --seed 2 --out " + w).exit_code == 0);
  std::string out = tmp / "phi.csv";
  RunResult cas = run_cli("cascade --wm " + w + " --level 9 --wavelets --out " + out);
  CHECK(cas.exit_code == 0);
  std::string text = read_file(out);
  CHECK(text.substr(0, text.find('\n')) == "x,phi_re,phi_im,psi1_re,psi1_im");
  // Riemann sum of the phi column
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  double sum = 0.0;
  size_t rows = 0;
  while (std::getline(ss, line)) {
    double x, re, im, p1r, p1i;
    REQUIRE(sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &x, &re, &im, &p1r, &p1i) == 5);
    sum += re;
    ++rows;
  }
  CHECK(rows > 512);
  CHECK(std::abs(sum / 512.0 - 1.0) <= 1e-6); // step 2^-9
}

TEST_CASE("gen --count writes an ordered array, thread-count independent") {
  Scratch tmp;
  std::string a = tmp / "bulk_a.json", b = tmp / "bulk_b.json";
  ::setenv("PARAWAVE_THREADS", "1", 1);
  RunResult ra = run_cli("gen --m 2 --g 1 --seed 9 --count 6 --out " + a);
  ::setenv("PARAWAVE_THREADS", "4", 1);
  RunResult rb = run_cli("gen --m 2 --g 1 --seed 9 --count 6 --out " + b);
  ::unsetenv("PARAWAVE_THREADS");
  CHECK(ra.exit_code == 0);
  CHECK(rb.exit_code == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(ra.output == rb.output);
  CHECK(read_file(a).substr(0, 1) == "[");
}

TEST_CASE("bench reports timing fields") {
  RunResult bench = run_cli("bench --m 4 --g 3 --reps 3");
  CHECK(bench.exit_code == 0);
  CHECK(bench.output.find("median_seconds") != std::string::npos);
  CHECK(bench.output.find("min_seconds") != std::string::npos);
  CHECK(bench.output.find("times_seconds") != std::string::npos);
  CHECK(bench.output.find("machine") != std::string::npos);
}
