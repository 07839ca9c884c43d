#ifndef PARAWAVE_PRIMITIVE_HPP
#define PARAWAVE_PRIMITIVE_HPP

#include <vector>

#include "parawave/laurent.hpp"

namespace parawave {

/// Degree-1 building block V(z) = I - v v* + v v* z for a unit vector v.
/// The representation is projective: a global phase on v leaves V unchanged.
struct PrimitiveFactor {
  std::vector<cplx> v;
};

/// Ordered product V_1(z) ... V_d(z) * tail of degree-1 factors and a
/// terminal constant unitary.
struct PrimitiveFactorization {
  std::vector<PrimitiveFactor> factors;
  LaurentMatrix tail_unitary;
};

/// V(z) for a unit vector (||v|| within 1e-10 of 1, else NotUnit).
LaurentMatrix make_primitive(std::span<const cplx> v);

/// Multiply the factors left to right and the tail unitary.
LaurentMatrix synthesize(const PrimitiveFactorization &f);

/// Peel degree-1 factors off a paraunitary polynomial matrix (scale 1):
/// at each step v is the dominant left singular vector of the top
/// coefficient block, the factor adjoint is multiplied in, and the freed
/// end coefficients must fall below tol. Throws DegreeStuck when a step
/// fails to reduce the determinant degree.
PrimitiveFactorization extract_factors(const LaurentMatrix &a, double tol = 1e-9);

} // namespace parawave

#endif
