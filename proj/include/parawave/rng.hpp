#ifndef PARAWAVE_RNG_HPP
#define PARAWAVE_RNG_HPP

#include <cstdint>

#include "parawave/parametrization.hpp"

namespace parawave {

/// Coefficients i.i.d. uniform on the complex disk of the given radius,
/// drawn from mt19937_64 seeded with `seed`: each double uses the high 53
/// bits of one engine output, and points with re^2 + im^2 > 1 are rejected.
/// Bit-exact across platforms for a fixed seed. Fill order is row-major
/// (j, then k).
PhiParams random_phi(int m, int g, std::uint64_t seed, double scale = 1.0);

} // namespace parawave

#endif
