#ifndef FRACWAVE_ERRORS_HPP
#define FRACWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracwave {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NearBoundary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularAtZero : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// thrown when a condition system fails the solvability check
struct DegenerateSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fracwave

#endif
