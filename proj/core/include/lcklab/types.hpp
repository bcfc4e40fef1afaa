#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lcklab {

using Complex = std::complex<double>;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vectors or matrices of incompatible size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A point (or a finite-difference stencil point) outside a chart domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Singular metric, rank-deficient basis, or an otherwise degenerate input.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcklab
