#pragma once

#include <stdexcept>
#include <string>

namespace curvatura {

/// Bad user input: malformed config, out-of-range sizes, invalid arguments.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A principal-curvature vector left the Garding cone: the first elementary
/// symmetric function that failed to be positive is recorded.
struct ConeViolation : std::runtime_error {
  int failing_j;
  double sigma_value;
  ConeViolation(int j, double sigma)
      : std::runtime_error("cone violation: sigma_" + std::to_string(j) +
                           " = " + std::to_string(sigma) + " is not positive"),
        failing_j(j),
        sigma_value(sigma) {}
};

/// Radial coordinate outside (0, inf) or an induced metric that is not
/// positive definite at some node.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateMetricError : std::runtime_error {
  long node;
  explicit DegenerateMetricError(long node_index)
      : std::runtime_error("induced metric not positive definite at node " +
                           std::to_string(node_index)),
        node(node_index) {}
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
};

struct EvalError : std::runtime_error {
  std::string path;  // node path inside the expression tree, e.g. "/0/1"
  EvalError(std::string node_path, const std::string& what)
      : std::runtime_error(what + " (expression node " + node_path + ")"),
        path(std::move(node_path)) {}
};

/// Jacobian assembly could not obtain an admissible perturbed evaluation.
struct LinearizationError : std::runtime_error {
  long node;
  explicit LinearizationError(long node_index)
      : std::runtime_error(
            "finite-difference column at node " + std::to_string(node_index) +
            " left the admissible cone even after step reduction"),
        node(node_index) {}
};

}  // namespace curvatura
