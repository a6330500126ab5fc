#ifndef APTREE_ERRORS_HPP
#define APTREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aptree {

/// Invalid argument outside an operation's domain (t < 0, bad exponents, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A weight/tree could not be validated at construction time.
struct ConstructionError : std::runtime_error {
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive scheme exhausted its subdivision budget without meeting the tolerance.
struct NonConvergenceError : std::runtime_error {
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form piece of an integral is infinite.
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Root finder failed to bracket a solution (mis-declared weight tail).
struct SolverFailureError : std::runtime_error {
  explicit SolverFailureError(const std::string& what) : std::runtime_error(what) {}
};

/// Work-size budget exceeded (discrete tree too large, too many unit blocks).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Test-function construction is vacuous (both comparison regions carry no mass).
struct DegenerateCertificateError : std::runtime_error {
  explicit DegenerateCertificateError(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration document failed validation.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aptree

#endif
