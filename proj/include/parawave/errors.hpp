#ifndef PARAWAVE_ERRORS_HPP
#define PARAWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parawave {

// Error identifiers; mirrored one-to-one by the pw_status codes of the C API.
enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  grid_too_small,
  not_monomial,
  singular_input,
  not_paraunitary,
  not_unitary,
  not_unit,
  no_convergence,
  structure_violation,
  degenerate_degree,
  inconsistent,
  degree_stuck,
  negative_powers,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string &msg)
      : Error(ErrorCode::invalid_argument, msg) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string &msg)
      : Error(ErrorCode::dimension_mismatch, msg) {}
};
struct GridTooSmall : Error {
  explicit GridTooSmall(const std::string &msg)
      : Error(ErrorCode::grid_too_small, msg) {}
};
struct NotMonomial : Error {
  explicit NotMonomial(const std::string &msg)
      : Error(ErrorCode::not_monomial, msg) {}
};
struct SingularInput : Error {
  explicit SingularInput(const std::string &msg)
      : Error(ErrorCode::singular_input, msg) {}
};
struct NotParaunitary : Error {
  explicit NotParaunitary(const std::string &msg)
      : Error(ErrorCode::not_paraunitary, msg) {}
};
struct NotUnitary : Error {
  explicit NotUnitary(const std::string &msg)
      : Error(ErrorCode::not_unitary, msg) {}
};
struct NotUnit : Error {
  explicit NotUnit(const std::string &msg) : Error(ErrorCode::not_unit, msg) {}
};
struct NoConvergence : Error {
  NoConvergence(int iterations, double residual, const std::string &msg)
      : Error(ErrorCode::no_convergence, msg), iterations(iterations),
        residual(residual) {}
  int iterations;
  double residual;
};
struct StructureViolation : Error {
  explicit StructureViolation(const std::string &msg)
      : Error(ErrorCode::structure_violation, msg) {}
};
struct DegenerateDegree : Error {
  explicit DegenerateDegree(const std::string &msg)
      : Error(ErrorCode::degenerate_degree, msg) {}
};
struct Inconsistent : Error {
  Inconsistent(double residual, const std::string &msg)
      : Error(ErrorCode::inconsistent, msg), residual(residual) {}
  double residual;
};
struct DegreeStuck : Error {
  explicit DegreeStuck(const std::string &msg)
      : Error(ErrorCode::degree_stuck, msg) {}
};
struct NegativePowers : Error {
  explicit NegativePowers(const std::string &msg)
      : Error(ErrorCode::negative_powers, msg) {}
};

} // namespace parawave

#endif
