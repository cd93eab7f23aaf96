#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace harmonika {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Raised when an input file or argument does not match the expected schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a mathematical precondition fails (e.g. a non-Hermitian
/// observable). Carries the largest observed violation for diagnostics.
struct PreconditionError : std::runtime_error {
    double max_violation;
    explicit PreconditionError(const std::string& msg, double violation = 0.0)
        : std::runtime_error(msg), max_violation(violation) {}
};

inline constexpr double kDefaultTol = 1e-10;

}  // namespace harmonika
