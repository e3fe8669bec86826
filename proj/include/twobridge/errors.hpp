#pragma once
#include <stdexcept>
#include <string>

namespace tb {

// Thrown by analytic entry points when q = +-1 mod p (torus links).
struct NotHyperbolic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NoGeometricRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbiguousRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A real trace in (-2,2) was met on I1 or I2, or the cusp layout is degenerate.
struct NotGeometric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tb
