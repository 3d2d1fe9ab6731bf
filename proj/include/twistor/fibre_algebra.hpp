#pragma once

// Linear algebra of the fibre Z(T, g): the manifold of g-compatible complex
// structures on a 2m-dimensional Euclidean space T, embedded in so(g).
//
// Coordinates are always orthonormal, so g is the identity form and an
// endomorphism is stored as the matrix whose c-th column is the image of e_c.

#include "twistor/common.hpp"

#include <functional>
#include <vector>

namespace twistor::fibre {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class EuclideanSpace {
public:
    /// Throws InputError unless dim is even and >= 2.
    explicit EuclideanSpace(int dim);

    int dim() const { return dim_; }
    int half_dim() const { return dim_ / 2; }

private:
    int dim_;
};

class SkewEndomorphism {
public:
    /// Throws ValidationError if entries^T != -entries beyond `tolerance`.
    explicit SkewEndomorphism(Matrix entries, double tolerance = tol::construction);

    static SkewEndomorphism zero(int dim) { return SkewEndomorphism(Matrix::Zero(dim, dim)); }

    const Matrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

private:
    Matrix m_;
};

class OrthogonalComplexStructure {
public:
    /// Throws ValidationError unless J is skew and J*J = -Id within `tolerance`.
    explicit OrthogonalComplexStructure(Matrix entries, double tolerance = tol::verification);

    /// J e_{2i-1} = e_{2i}.
    static OrthogonalComplexStructure standard(int dim);

    const Matrix& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

private:
    Matrix m_;
};

class FibreTangentVector {
public:
    /// Throws ValidationError unless J V + V J = 0 within `tolerance`.
    FibreTangentVector(OrthogonalComplexStructure base, SkewEndomorphism value,
                       double tolerance = tol::verification);

    const OrthogonalComplexStructure& base() const { return base_; }
    const Matrix& matrix() const { return value_.matrix(); }

private:
    OrthogonalComplexStructure base_;
    SkewEndomorphism value_;
};

/// A vector field on Z seen as an so(g)-valued function on so(g).
///
/// `derivative(J, X)` is Y'(J)(X). Fields built with `with_finite_differences`
/// use a central difference of `evaluate` along the straight line J + hX, keeping
/// its skew part.
struct FibreVectorField {
    std::function<Matrix(const Matrix&)> evaluate;
    std::function<Matrix(const Matrix&, const Matrix&)> derivative;

    static FibreVectorField with_finite_differences(std::function<Matrix(const Matrix&)> f,
                                                    double step = tol::fd_step);
};

/// G(a, b) = -1/2 trace(a b).
double inner_G(const SkewEndomorphism& a, const SkewEndomorphism& b);
double inner_G(const Matrix& a, const Matrix& b);

/// The elementary skew map S_ab with S_ab e_c = delta_ac e_b - delta_bc e_a
/// (1-based indices).
Matrix elementary_skew(int dim, int a, int b);

/// {S_ab : a < b} in lexicographic order.
std::vector<SkewEndomorphism> make_S_basis(const EuclideanSpace& space);

/// The G-orthonormal basis {A_rs, B_rs} of T_J Z built from a J-adapted
/// orthonormal frame (J e_{2i-1} = e_{2i}). `frame` holds the frame vectors
/// as columns. Returned as A_12, B_12, A_13, B_13, ... in (r, s) order.
std::vector<FibreTangentVector> make_AB_basis(const OrthogonalComplexStructure& J,
                                              const Matrix& frame);

/// K V = J V.
FibreTangentVector kaehler_K(const FibreTangentVector& V);

/// (D_X Y)_J = 1/2 (Y'(J)(X) + J Y'(J)(X) J).
FibreTangentVector fibre_levi_civita(const FibreVectorField& Y, const FibreTangentVector& X);

/// Coefficients of a^ over e_i ^ e_j (i < j, lexicographic):
/// the coefficient of e_i ^ e_j is g(a e_i, e_j).
Vector wedge_coefficients(const Matrix& a);

/// Inverse of wedge_coefficients.
SkewEndomorphism from_wedge_coefficients(const Vector& coeffs, int dim);

/// Coefficients of the decomposable 2-vector x ^ y.
Vector decomposable(const Vector& x, const Vector& y);

}  // namespace twistor::fibre
