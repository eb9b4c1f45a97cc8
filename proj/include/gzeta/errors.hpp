#ifndef GZETA_ERRORS_HPP
#define GZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gzeta {

// Evaluation point sits on a pole or on a branch cut / spectrum.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what, double location = 0.0)
      : std::domain_error(what), location_(location) {}
  double location() const { return location_; }

 private:
  double location_;
};

// Operation is not defined for this model (e.g. dense Laplacian of an
// infinite lattice, closed-form determinant for lattice dimension >= 2).
class unsupported_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds a hard size cap of an exhaustive or dense algorithm.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gzeta

#endif  // GZETA_ERRORS_HPP
