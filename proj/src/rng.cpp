#include "parawave/rng.hpp"

#include <random>

#include "parawave/errors.hpp"

namespace parawave {

PhiParams random_phi(int m, int g, std::uint64_t seed, double scale) {
  if (scale < 0)
    throw InvalidArgument("random_phi: scale must be >= 0");
  std::mt19937_64 engine(seed);
  auto unit = [&engine]() {
    // high 53 bits -> [0, 1); the standard fully specifies the engine, so
    // this is reproducible everywhere, unlike uniform_real_distribution
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };
  std::vector<cplx> coeffs(static_cast<size_t>(m - 1) * g);
  for (cplx &c : coeffs) {
    double re, im;
    do {
      re = 2.0 * unit() - 1.0;
      im = 2.0 * unit() - 1.0;
    } while (re * re + im * im > 1.0);
    c = scale * cplx{re, im};
  }
  return {m, g, std::move(coeffs)};
}

} // namespace parawave
