#pragma once

// The almost Hermitian structures (H_t, J^n), n = 1..4, on the product
// twistor space, evaluated pointwise from a curvature operator.
//
// Connection formulas are taken in a normal frame at the base point, so the
// (nabla_X Y)^h terms vanish; every tensor below is pointwise.

#include "twistor/curvature.hpp"
#include "twistor/twistor_point.hpp"

#include <array>
#include <string>

namespace twistor {

struct Params {
    double t1 = 1.0;
    double t2 = 1.0;
    int n = 1;

    /// Throws InputError unless t1, t2 > 0 and n in {1, 2, 3, 4}.
    void validate() const;
};

/// Sign of the t1-term in the hor/hor/ver derivative formulas:
/// +1 for n = 1, 4 and -1 for n = 2, 3.
struct SignTable {
    std::array<int, 4> sigma{+1, -1, -1, +1};

    int operator()(int n) const { return sigma.at(n - 1); }
};

/// How the printed closed form of H(N(X^h, Y^h), V) is parenthesized.
enum class NijenhuisReading {
    /// 2(-1)^n g(R(..), X^J1Y + J1X^Y) - 2 g(R(..), X^Y - J1X^J1Y)
    SignOnFirstTerm,
    /// 2(-1)^n [ g(R(..), X^J1Y + J1X^Y) - g(R(..), X^Y - J1X^J1Y) ]
    SignOnBothTerms,
};

std::string to_string(NijenhuisReading reading);

/// Horizontal lifts of e1..e4 followed by (u2/sqrt t1, 0), (u3/sqrt t1, 0),
/// (0, u2'/sqrt t2), (0, u3'/sqrt t2). H_t-orthonormal.
using FrameAtPoint = std::array<GTangent, 8>;

/// Connection data of the Levi-Civita connection of H_t.
struct LeviCivitaHH {
    /// Vertical part of D_{X^h} Y^h: 1/2 R(X,Y)J = 1/2 ([R(X,Y), J1], [R(X,Y), J2]).
    Mat4 vertical1;
    Mat4 vertical2;
};

class AlmostHermitianStructure {
public:
    /// Throws InputError for invalid params.
    AlmostHermitianStructure(ProductTwistorPoint point, CurvatureOperator R, Params params);

    const ProductTwistorPoint& point() const { return p_; }
    const CurvatureOperator& curvature() const { return R_; }
    const Params& params() const { return t_; }

    /// Throws ValidationError unless the vertical part of A is vertical at the point.
    void require_tangent(const GTangent& A) const;
    VerticalVector make_vertical(const Mat4& V1, const Mat4& V2) const;

    FrameAtPoint frame() const;

    /// H_t(A, B) = g(X, Y) + t1 G(V1, W1) + t2 G(V2, W2).
    double metric(const GTangent& A, const GTangent& B) const;
    /// J^n A.
    GTangent J(const GTangent& A) const;
    /// Omega(A, B) = H_t(J^n A, B).
    double omega(const GTangent& A, const GTangent& B) const;

    /// (D_A Omega)(B, C).
    double cov_deriv_omega(const GTangent& A, const GTangent& B, const GTangent& C) const;
    /// d Omega(A, B, C) from its closed form.
    double ext_deriv_omega(const GTangent& A, const GTangent& B, const GTangent& C) const;
    /// delta Omega(A) from its closed form.
    double codiff_omega(const GTangent& A) const;
    /// -sum_a (D_{E_a} Omega)(E_a, A) over frame().
    double codiff_frame_trace(const GTangent& A) const;

    /// H_t(N(A, B), C) through the covariant derivative of Omega.
    double nijenhuis(const GTangent& A, const GTangent& B, const GTangent& C) const;
    /// H_t(N(A, B), C) from the component closed forms.
    double nijenhuis_closed_form(const GTangent& A, const GTangent& B, const GTangent& C,
                                 NijenhuisReading reading = NijenhuisReading::SignOnFirstTerm,
                                 const SignTable& signs = {}) const;

    LeviCivitaHH lc_horizontal(const Vec4& X, const Vec4& Y) const;
    /// H_t(D_V X^h, Y^h) = H_t(D_{X^h} V, Y^h).
    double lc_vertical_horizontal(const VerticalVector& V, const Vec4& X, const Vec4& Y) const;

    // Component formulas, exposed for tests and the restriction identities.

    /// (D_{V} Omega)(X^h, Y^h).
    double D_vhh(const VerticalVector& V, const Vec4& X, const Vec4& Y) const;
    /// (D_{Z^h} Omega)(X^h, V).
    double D_hhv(const Vec4& Z, const Vec4& X, const VerticalVector& V,
                 const SignTable& signs = {}) const;
    /// d Omega(X^h, Y^h, V).
    double d_hhv(const Vec4& X, const Vec4& Y, const VerticalVector& V) const;

private:
    /// t1 (J1 V1)^ + t2 (J2 V2)^.
    TwoVector rotated(const VerticalVector& V) const;
    /// sigma(n) t1 V1^ + t2 V2^.
    TwoVector signed_sum(const VerticalVector& V, const SignTable& signs) const;
    double minus_one_pow_n() const { return t_.n % 2 == 0 ? 1.0 : -1.0; }

    ProductTwistorPoint p_;
    CurvatureOperator R_;
    Params t_;
};

/// The single twistor space (Z, h_t, J_k), k = 1 (Atiyah-Hitchin-Singer) or
/// k = 2 (Eells-Salamon), with vertical action +J (k = 1) or -J (k = 2).
class SingleTwistorStructure {
public:
    SingleTwistorStructure(OrientedComplexStructure4 J, CurvatureOperator R, double t, int k);

    /// Tangent vector X^h + V at J.
    struct Tangent {
        Vec4 horizontal = Vec4::Zero();
        Mat4 vertical = Mat4::Zero();
    };

    double metric(const Tangent& A, const Tangent& B) const;
    double cov_deriv_omega(const Tangent& A, const Tangent& B, const Tangent& C) const;
    double ext_deriv_omega(const Tangent& A, const Tangent& B, const Tangent& C) const;
    double codiff_omega(const Tangent& A) const;

private:
    double D_vhh(const Mat4& V, const Vec4& X, const Vec4& Y) const;
    double D_hhv(const Vec4& Z, const Vec4& X, const Mat4& V) const;
    double d_hhv(const Vec4& X, const Vec4& Y, const Mat4& V) const;

    OrientedComplexStructure4 J_;
    CurvatureOperator R_;
    double t_;
    double alpha_;
};

/// Which restriction identity to evaluate.
enum class RestrictionKind { Metric, CovariantDerivative, ExteriorDerivative, Codifferential };

/// |single-twistor value - product value| on first-factor arguments: the
/// product structure with n in {1,2} is compared with J_1 and n in {3,4}
/// with J_2, both at J1 with parameter t1. Unused trailing arguments are
/// ignored. Throws ValidationError if any argument has a second-factor
/// vertical part.
double restriction_check(const AlmostHermitianStructure& s, RestrictionKind kind,
                         const GTangent& A, const GTangent& B = {}, const GTangent& C = {});

}  // namespace twistor
