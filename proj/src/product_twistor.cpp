#include "twistor/product_twistor.hpp"

#include "twistor/fibre_algebra.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace twistor {

namespace {

double G(const Mat4& a, const Mat4& b) { return -0.5 * a.cwiseProduct(b.transpose()).sum(); }

void require_vertical(const Mat4& J, const Mat4& V, const char* which)
{
    const double skew = (V + V.transpose()).cwiseAbs().maxCoeff();
    if (skew > tol::verification) {
        throw ValidationError(std::string(which) + " is not skew-symmetric");
    }
    const double defect = (J * V + V * J).cwiseAbs().maxCoeff();
    if (defect > tol::verification) {
        throw ValidationError(std::string(which) + " does not anticommute with its complex "
                              "structure (|JV + VJ| = " + std::to_string(defect) + ")");
    }
}

// (alpha, beta) with K_n (V1, V2) = (alpha J1 V1, beta J2 V2).
std::pair<double, double> fibre_signs(int n)
{
    switch (n) {
    case 1: return {1.0, 1.0};
    case 2: return {1.0, -1.0};
    case 3: return {-1.0, 1.0};
    default: return {-1.0, -1.0};
    }
}

}  // namespace

VerticalVector::VerticalVector(const ProductTwistorPoint& p, const Mat4& V1, const Mat4& V2)
    : V1_(V1), V2_(V2)
{
    require_vertical(p.J1.matrix(), V1_, "V1");
    require_vertical(p.J2.matrix(), V2_, "V2");
}

void Params::validate() const
{
    if (!(t1 > 0.0) || !(t2 > 0.0)) {
        throw InputError("t1 and t2 must be positive");
    }
    if (n < 1 || n > 4) {
        throw InputError("n must be one of 1, 2, 3, 4; got " + std::to_string(n));
    }
}

std::string to_string(NijenhuisReading reading)
{
    return reading == NijenhuisReading::SignOnFirstTerm ? "sign-on-first-term"
                                                        : "sign-on-both-terms";
}

AlmostHermitianStructure::AlmostHermitianStructure(ProductTwistorPoint point, CurvatureOperator R,
                                                   Params params)
    : p_(std::move(point)), R_(std::move(R)), t_(params)
{
    t_.validate();
}

void AlmostHermitianStructure::require_tangent(const GTangent& A) const
{
    require_vertical(p_.J1.matrix(), A.vertical.V1(), "V1");
    require_vertical(p_.J2.matrix(), A.vertical.V2(), "V2");
}

VerticalVector AlmostHermitianStructure::make_vertical(const Mat4& V1, const Mat4& V2) const
{
    return VerticalVector(p_, V1, V2);
}

FrameAtPoint AlmostHermitianStructure::frame() const
{
    FrameAtPoint f;
    for (int i = 0; i < 4; ++i) {
        f[i] = GTangent::horizontal_lift(Vec4::Unit(i));
    }
    const auto u = vertical_basis(p_.J1);
    const auto w = vertical_basis(p_.J2);
    const double a = 1.0 / std::sqrt(t_.t1);
    const double b = 1.0 / std::sqrt(t_.t2);
    f[4] = GTangent::vertical_only(make_vertical(a * u[0], Mat4::Zero()));
    f[5] = GTangent::vertical_only(make_vertical(a * u[1], Mat4::Zero()));
    f[6] = GTangent::vertical_only(make_vertical(Mat4::Zero(), b * w[0]));
    f[7] = GTangent::vertical_only(make_vertical(Mat4::Zero(), b * w[1]));
    return f;
}

double AlmostHermitianStructure::metric(const GTangent& A, const GTangent& B) const
{
    require_tangent(A);
    require_tangent(B);
    return A.horizontal.dot(B.horizontal) + t_.t1 * G(A.vertical.V1(), B.vertical.V1()) +
           t_.t2 * G(A.vertical.V2(), B.vertical.V2());
}

GTangent AlmostHermitianStructure::J(const GTangent& A) const
{
    require_tangent(A);
    const auto [alpha, beta] = fibre_signs(t_.n);
    const Mat4& j1 = p_.J1.matrix();
    const Mat4& j2 = p_.J2.matrix();
    return {j1 * A.horizontal,
            make_vertical(alpha * j1 * A.vertical.V1(), beta * j2 * A.vertical.V2())};
}

double AlmostHermitianStructure::omega(const GTangent& A, const GTangent& B) const
{
    return metric(J(A), B);
}

TwoVector AlmostHermitianStructure::rotated(const VerticalVector& V) const
{
    return t_.t1 * wedge(Mat4(p_.J1.matrix() * V.V1())) +
           t_.t2 * wedge(Mat4(p_.J2.matrix() * V.V2()));
}

TwoVector AlmostHermitianStructure::signed_sum(const VerticalVector& V,
                                               const SignTable& signs) const
{
    return (signs(t_.n) * t_.t1) * wedge(V.V1()) + t_.t2 * wedge(V.V2());
}

double AlmostHermitianStructure::D_vhh(const VerticalVector& V, const Vec4& X,
                                       const Vec4& Y) const
{
    const Mat4& j1 = p_.J1.matrix();
    const Vec4 j1x = j1 * X;
    const Vec4 j1y = j1 * Y;
    return Y.dot(V.V1() * X) - R_.pair(rotated(V), wedge(X, j1y) + wedge(j1x, Y));
}

double AlmostHermitianStructure::D_hhv(const Vec4& Z, const Vec4& X, const VerticalVector& V,
                                       const SignTable& signs) const
{
    const Vec4 j1x = p_.J1.matrix() * X;
    return minus_one_pow_n() * R_.pair(signed_sum(V, signs), wedge(Z, X)) +
           R_.pair(rotated(V), wedge(Z, j1x));
}

double AlmostHermitianStructure::d_hhv(const Vec4& X, const Vec4& Y,
                                       const VerticalVector& V) const
{
    return Y.dot(V.V1() * X) + 2.0 * minus_one_pow_n() * R_.pair(signed_sum(V, {}), wedge(X, Y));
}

double AlmostHermitianStructure::cov_deriv_omega(const GTangent& A, const GTangent& B,
                                                 const GTangent& C) const
{
    require_tangent(A);
    require_tangent(B);
    require_tangent(C);
    // hor/hor/hor and every pattern with two vertical slots vanish.
    return D_hhv(A.horizontal, B.horizontal, C.vertical) -
           D_hhv(A.horizontal, C.horizontal, B.vertical) +
           D_vhh(A.vertical, B.horizontal, C.horizontal);
}

double AlmostHermitianStructure::ext_deriv_omega(const GTangent& A, const GTangent& B,
                                                 const GTangent& C) const
{
    require_tangent(A);
    require_tangent(B);
    require_tangent(C);
    return d_hhv(A.horizontal, B.horizontal, C.vertical) +
           d_hhv(B.horizontal, C.horizontal, A.vertical) +
           d_hhv(C.horizontal, A.horizontal, B.vertical);
}

double AlmostHermitianStructure::codiff_omega(const GTangent& A) const
{
    require_tangent(A);
    return -2.0 * R_.pair(rotated(A.vertical), p_.J1.two_vector());
}

double AlmostHermitianStructure::codiff_frame_trace(const GTangent& A) const
{
    double sum = 0.0;
    for (const GTangent& e : frame()) {
        sum += cov_deriv_omega(e, e, A);
    }
    return -sum;
}

double AlmostHermitianStructure::nijenhuis(const GTangent& A, const GTangent& B,
                                           const GTangent& C) const
{
    const GTangent JA = J(A);
    const GTangent JB = J(B);
    return cov_deriv_omega(A, JB, C) - cov_deriv_omega(B, JA, C) + cov_deriv_omega(JA, B, C) -
           cov_deriv_omega(JB, A, C);
}

double AlmostHermitianStructure::nijenhuis_closed_form(const GTangent& A, const GTangent& B,
                                                       const GTangent& C,
                                                       NijenhuisReading reading,
                                                       const SignTable& signs) const
{
    require_tangent(A);
    require_tangent(B);
    require_tangent(C);
    const Mat4& j1 = p_.J1.matrix();

    // H(N(X^h, Y^h), V)
    auto hh_v = [&](const Vec4& X, const Vec4& Y, const VerticalVector& V) {
        const Vec4 j1x = j1 * X;
        const Vec4 j1y = j1 * Y;
        const double first = R_.pair(signed_sum(V, signs), wedge(X, j1y) + wedge(j1x, Y));
        const double second = R_.pair(rotated(V), wedge(X, Y) - wedge(j1x, j1y));
        const double sgn = minus_one_pow_n();
        if (reading == NijenhuisReading::SignOnFirstTerm) {
            return 2.0 * sgn * first - 2.0 * second;
        }
        return 2.0 * sgn * (first - second);
    };
    // H(N(X^h, V), Y^h)
    auto hv_h = [&](const Vec4& X, const VerticalVector& V, const Vec4& Y) {
        if (t_.n <= 2) {
            return 0.0;
        }
        return 2.0 * Y.dot(j1 * V.V1() * X);
    };

    return hh_v(A.horizontal, B.horizontal, C.vertical) +
           hv_h(A.horizontal, B.vertical, C.horizontal) -
           hv_h(B.horizontal, A.vertical, C.horizontal);
}

LeviCivitaHH AlmostHermitianStructure::lc_horizontal(const Vec4& X, const Vec4& Y) const
{
    const Mat4 r = curvature_endo(R_, X, Y);
    const Mat4& j1 = p_.J1.matrix();
    const Mat4& j2 = p_.J2.matrix();
    return {0.5 * (r * j1 - j1 * r), 0.5 * (r * j2 - j2 * r)};
}

double AlmostHermitianStructure::lc_vertical_horizontal(const VerticalVector& V, const Vec4& X,
                                                        const Vec4& Y) const
{
    require_tangent(GTangent::vertical_only(V));
    return -R_.pair(rotated(V), wedge(X, Y));
}

SingleTwistorStructure::SingleTwistorStructure(OrientedComplexStructure4 J, CurvatureOperator R,
                                               double t, int k)
    : J_(std::move(J)), R_(std::move(R)), t_(t), alpha_(k == 1 ? 1.0 : -1.0)
{
    if (!(t > 0.0)) {
        throw InputError("t must be positive");
    }
    if (k != 1 && k != 2) {
        throw InputError("single twistor structure index must be 1 or 2");
    }
}

double SingleTwistorStructure::metric(const Tangent& A, const Tangent& B) const
{
    return A.horizontal.dot(B.horizontal) + t_ * G(A.vertical, B.vertical);
}

double SingleTwistorStructure::D_vhh(const Mat4& V, const Vec4& X, const Vec4& Y) const
{
    const Mat4& j = J_.matrix();
    const TwoVector jv = wedge(Mat4(j * V));
    return Y.dot(V * X) - t_ * R_.pair(jv, wedge(X, Vec4(j * Y)) + wedge(Vec4(j * X), Y));
}

double SingleTwistorStructure::D_hhv(const Vec4& Z, const Vec4& X, const Mat4& V) const
{
    const Mat4& j = J_.matrix();
    return -alpha_ * t_ * R_.pair(wedge(V), wedge(Z, X)) +
           t_ * R_.pair(wedge(Mat4(j * V)), wedge(Z, Vec4(j * X)));
}

double SingleTwistorStructure::d_hhv(const Vec4& X, const Vec4& Y, const Mat4& V) const
{
    return Y.dot(V * X) - 2.0 * alpha_ * t_ * R_.pair(wedge(V), wedge(X, Y));
}

double SingleTwistorStructure::cov_deriv_omega(const Tangent& A, const Tangent& B,
                                               const Tangent& C) const
{
    return D_hhv(A.horizontal, B.horizontal, C.vertical) -
           D_hhv(A.horizontal, C.horizontal, B.vertical) +
           D_vhh(A.vertical, B.horizontal, C.horizontal);
}

double SingleTwistorStructure::ext_deriv_omega(const Tangent& A, const Tangent& B,
                                               const Tangent& C) const
{
    return d_hhv(A.horizontal, B.horizontal, C.vertical) +
           d_hhv(B.horizontal, C.horizontal, A.vertical) +
           d_hhv(C.horizontal, A.horizontal, B.vertical);
}

double SingleTwistorStructure::codiff_omega(const Tangent& A) const
{
    const Mat4& j = J_.matrix();
    return -2.0 * t_ * R_.pair(wedge(Mat4(j * A.vertical)), J_.two_vector());
}

double restriction_check(const AlmostHermitianStructure& s, RestrictionKind kind,
                         const GTangent& A, const GTangent& B, const GTangent& C)
{
    for (const GTangent* arg : {&A, &B, &C}) {
        if (arg->vertical.V2().cwiseAbs().maxCoeff() != 0.0) {
            throw ValidationError("restriction_check takes first-factor vertical parts only");
        }
    }
    const Params& t = s.params();
    const SingleTwistorStructure single(s.point().J1, s.curvature(), t.t1, t.n <= 2 ? 1 : 2);
    auto down = [](const GTangent& a) {
        return SingleTwistorStructure::Tangent{a.horizontal, a.vertical.V1()};
    };

    switch (kind) {
    case RestrictionKind::Metric:
        return std::abs(single.metric(down(A), down(B)) - s.metric(A, B));
    case RestrictionKind::CovariantDerivative:
        return std::abs(single.cov_deriv_omega(down(A), down(B), down(C)) -
                        s.cov_deriv_omega(A, B, C));
    case RestrictionKind::ExteriorDerivative:
        return std::abs(single.ext_deriv_omega(down(A), down(B), down(C)) -
                        s.ext_deriv_omega(A, B, C));
    case RestrictionKind::Codifferential:
        return std::abs(single.codiff_omega(down(A)) - s.codiff_omega(A));
    }
    return 0.0;
}

}  // namespace twistor
