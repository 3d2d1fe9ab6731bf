#include "twistor/four_dim.hpp"

#include "twistor/fibre_algebra.hpp"

#include <cmath>
#include <string>

namespace twistor {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Mat6 build_s_basis()
{
    // elementary order: e12, e13, e14, e23, e24, e34
    Mat6 m = Mat6::Zero();
    for (int k = 0; k < 2; ++k) {
        const double sgn = k == 0 ? 1.0 : -1.0;
        const int c = 3 * k;
        m(0, c + 0) = kInvSqrt2;  // s1 = (e12 +- e34)/sqrt2
        m(5, c + 0) = sgn * kInvSqrt2;
        m(1, c + 1) = kInvSqrt2;  // s2 = (e13 +- e42)/sqrt2 = (e13 -+ e24)/sqrt2
        m(4, c + 1) = -sgn * kInvSqrt2;
        m(2, c + 2) = kInvSqrt2;  // s3 = (e14 +- e23)/sqrt2
        m(3, c + 2) = sgn * kInvSqrt2;
    }
    return m;
}

Mat6 build_orientation_reversal()
{
    Mat4 f = Mat4::Identity();
    f(3, 3) = -1.0;
    Mat6 r;
    for (int k = 0; k < 6; ++k) {
        r.col(k) = wedge(Mat4(f * endo(TwoVector::basis(k)) * f)).coeffs;
    }
    return r;
}

Mat3 skew3(const Vec3& k)
{
    Mat3 m;
    m << 0, -k(2), k(1), k(2), 0, -k(0), -k(1), k(0), 0;
    return m;
}

}  // namespace

TwoVector TwoVector::basis(int index)
{
    if (index < 0 || index > 5) {
        throw InputError("two-vector basis index out of range");
    }
    TwoVector v;
    v.coeffs(index) = 1.0;
    return v;
}

TwoVector TwoVector::from_half(const Vec3& v, Orientation half)
{
    TwoVector out;
    if (half == Orientation::Plus) {
        out.coeffs.head<3>() = v;
    } else {
        out.coeffs.tail<3>() = v;
    }
    return out;
}

const Mat6& s_basis_in_elementary()
{
    static const Mat6 m = build_s_basis();
    return m;
}

TwoVector wedge(const Mat4& skew)
{
    const Vec6 elementary = fibre::wedge_coefficients(skew);
    return TwoVector(s_basis_in_elementary().transpose() * elementary);
}

Mat4 endo(const TwoVector& sigma)
{
    const Vec6 elementary = s_basis_in_elementary() * sigma.coeffs;
    Mat4 a = Mat4::Zero();
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            a(j, i) = elementary(k);
            a(i, j) = -elementary(k);
            ++k;
        }
    }
    return a;
}

TwoVector wedge(const Vec4& x, const Vec4& y)
{
    Vec6 elementary;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            elementary(k++) = x(i) * y(j) - x(j) * y(i);
        }
    }
    return TwoVector(s_basis_in_elementary().transpose() * elementary);
}

double wedge_inner(const Vec4& x1, const Vec4& x2, const Vec4& x3, const Vec4& x4)
{
    return x1.dot(x3) * x2.dot(x4) - x1.dot(x4) * x2.dot(x3);
}

TwoVector hodge_star(const TwoVector& sigma)
{
    TwoVector out = sigma;
    out.coeffs.tail<3>() *= -1.0;
    return out;
}

std::pair<TwoVector, TwoVector> split_pm(const TwoVector& sigma)
{
    return {TwoVector::from_half(sigma.plus(), Orientation::Plus),
            TwoVector::from_half(sigma.minus(), Orientation::Minus)};
}

bool is_pure(const TwoVector& sigma, Orientation half, double tolerance)
{
    const Vec3 other = half == Orientation::Plus ? sigma.minus() : sigma.plus();
    return other.cwiseAbs().maxCoeff() <= tolerance;
}

TwoVector cross(const TwoVector& sigma, const TwoVector& tau, Orientation half)
{
    if (!is_pure(sigma, half) || !is_pure(tau, half)) {
        throw ValidationError(std::string("cross product needs both arguments in Lambda^2") +
                              symbol_of(half));
    }
    return TwoVector::from_half(sigma.half(half).cross(tau.half(half)), half);
}

OrientedComplexStructure4::OrientedComplexStructure4(const Mat4& J, Orientation sign)
    : J_(J), sign_(sign)
{
    // Validates skewness and J^2 = -Id.
    fibre::OrthogonalComplexStructure check(fibre::Matrix(J), tol::verification);
    const TwoVector w = wedge(J);
    if (!is_pure(w, sign)) {
        throw ValidationError(std::string("complex structure does not lie in Z") + symbol_of(sign));
    }
    if (std::abs(w.norm() - std::sqrt(2.0)) > tol::verification) {
        throw ValidationError("|J^| != sqrt(2)");
    }
}

OrientedComplexStructure4 sphere_to_J(const TwoVector& u, Orientation sign)
{
    if (!is_pure(u, sign)) {
        throw ValidationError(std::string("sphere point must lie in Lambda^2") + symbol_of(sign));
    }
    if (std::abs(u.norm() - 1.0) > tol::verification) {
        throw ValidationError("sphere point must be a unit 2-vector, |u| = " +
                              std::to_string(u.norm()));
    }
    return OrientedComplexStructure4(endo(std::sqrt(2.0) * u), sign);
}

TwoVector J_to_sphere(const OrientedComplexStructure4& J)
{
    return kInvSqrt2 * J.two_vector();
}

std::array<Mat4, 2> vertical_basis(const OrientedComplexStructure4& J)
{
    const Orientation half = J.sign();
    const Vec3 u = J_to_sphere(J).half(half).normalized();
    const Vec3 e1 = Vec3::UnitX();

    Mat3 rot;
    const double c = e1.dot(u);
    if (1.0 + c < 1e-12) {
        // rotation by pi about s2
        rot = Vec3(-1.0, 1.0, -1.0).asDiagonal();
    } else {
        const Mat3 k = skew3(e1.cross(u));
        rot = Mat3::Identity() + k + k * k / (1.0 + c);
    }
    return {endo(TwoVector::from_half(rot.col(1), half)),
            endo(TwoVector::from_half(rot.col(2), half))};
}

const Mat6& orientation_reversal()
{
    static const Mat6 r = build_orientation_reversal();
    return r;
}

}  // namespace twistor
