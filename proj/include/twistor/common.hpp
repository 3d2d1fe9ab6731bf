#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace twistor {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Tolerances shared by every module.
namespace tol {
/// Values built by the library must be skew/tangent to this accuracy.
inline constexpr double construction = 1e-12;
/// Values handed in by callers are checked against this accuracy.
inline constexpr double verification = 1e-10;
/// Default central-difference step for fibre vector fields.
inline constexpr double fd_step = 1e-5;
}  // namespace tol

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad names, wrong dimensions, unparsable documents.
class InputError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a mathematical invariant
/// (asymmetric operator, non-tangent vector, J^2 != -Id, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace twistor
