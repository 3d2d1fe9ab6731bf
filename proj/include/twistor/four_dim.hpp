#pragma once

// Dimension-four specifics: 2-vectors in the basis
// (s1+, s2+, s3+, s1-, s2-, s3-), Hodge star, the cross product on each
// half, and the identification of Z+/- with spheres of radius sqrt(2).

#include "twistor/common.hpp"

#include <array>
#include <utility>

namespace twistor {

enum class Orientation : int { Plus = 1, Minus = -1 };

inline int sign_of(Orientation o) { return static_cast<int>(o); }
inline char symbol_of(Orientation o) { return o == Orientation::Plus ? '+' : '-'; }

/// Element of Lambda^2 R^4 in the global ordered basis
/// (s1+, s2+, s3+, s1-, s2-, s3-). The basis is orthonormal, so the
/// Lambda^2 inner product is the coefficient dot product.
struct TwoVector {
    Vec6 coeffs = Vec6::Zero();

    TwoVector() = default;
    explicit TwoVector(const Vec6& c) : coeffs(c) {}

    static TwoVector basis(int index);
    static TwoVector s_plus(int i) { return basis(i - 1); }
    static TwoVector s_minus(int i) { return basis(i + 2); }
    /// Embeds a 3-vector of coordinates into the given half.
    static TwoVector from_half(const Vec3& v, Orientation half);

    Vec3 plus() const { return coeffs.head<3>(); }
    Vec3 minus() const { return coeffs.tail<3>(); }
    Vec3 half(Orientation o) const { return o == Orientation::Plus ? plus() : minus(); }

    double dot(const TwoVector& o) const { return coeffs.dot(o.coeffs); }
    double norm() const { return coeffs.norm(); }

    TwoVector operator+(const TwoVector& o) const { return TwoVector(coeffs + o.coeffs); }
    TwoVector operator-(const TwoVector& o) const { return TwoVector(coeffs - o.coeffs); }
    TwoVector operator-() const { return TwoVector(-coeffs); }
    friend TwoVector operator*(double a, const TwoVector& v) { return TwoVector(a * v.coeffs); }
};

/// Columns are s1+, ..., s3- written over e12, e13, e14, e23, e24, e34.
const Mat6& s_basis_in_elementary();

/// phi^ for a skew 4x4 matrix: g(phi^, x ^ y) = g(phi x, y).
TwoVector wedge(const Mat4& skew);
/// The skew endomorphism K_sigma corresponding to sigma.
Mat4 endo(const TwoVector& sigma);
/// x ^ y.
TwoVector wedge(const Vec4& x, const Vec4& y);

/// Lambda^2 inner product g(x1 ^ x2, x3 ^ x4) = g(x1,x3)g(x2,x4) - g(x1,x4)g(x2,x3),
/// evaluated directly from the four vectors.
double wedge_inner(const Vec4& x1, const Vec4& x2, const Vec4& x3, const Vec4& x4);

TwoVector hodge_star(const TwoVector& sigma);

/// (sigma+, sigma-) with *sigma+- = +-sigma+-.
std::pair<TwoVector, TwoVector> split_pm(const TwoVector& sigma);

/// True when the opposite half of sigma vanishes within `tolerance`.
bool is_pure(const TwoVector& sigma, Orientation half, double tolerance = tol::verification);

/// Cross product on (Lambda^2_half, g) oriented by (s1, s2, s3).
/// Throws ValidationError if either argument has a component in the other half.
TwoVector cross(const TwoVector& sigma, const TwoVector& tau, Orientation half);

/// A compatible complex structure on oriented R^4 together with the
/// component Z+ or Z- it belongs to.
class OrientedComplexStructure4 {
public:
    /// Throws ValidationError unless J is an orthogonal complex structure whose
    /// 2-vector lies in the `sign` half with norm sqrt(2).
    OrientedComplexStructure4(const Mat4& J, Orientation sign);

    const Mat4& matrix() const { return J_; }
    Orientation sign() const { return sign_; }
    TwoVector two_vector() const { return wedge(J_); }

private:
    Mat4 J_;
    Orientation sign_;
};

/// J = endo(sqrt(2) u) for a unit u in the given half.
OrientedComplexStructure4 sphere_to_J(const TwoVector& u, Orientation sign);
/// J^ / sqrt(2).
TwoVector J_to_sphere(const OrientedComplexStructure4& J);

/// Endomorphisms of (u2, u3) completing J^/sqrt(2) to an oriented orthonormal
/// triad of the half containing J. The completion rotates (s1, s2, s3) by the
/// Rodrigues rotation taking s1 to J^/sqrt(2); the antipode uses the rotation
/// by pi about s2.
std::array<Mat4, 2> vertical_basis(const OrientedComplexStructure4& J);

/// Orientation-reversing isometry of R^4 (e4 -> -e4) acting on 2-vectors.
/// It exchanges the halves: s1+ <-> s1-, s2+ <-> s2-, s3+ <-> -s3-.
const Mat6& orientation_reversal();

}  // namespace twistor
