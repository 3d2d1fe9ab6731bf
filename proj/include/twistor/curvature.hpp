#pragma once

// Algebraic curvature operators on Lambda^2 R^4 and their block form
//   R = (s/12) Id + B + W+ + W-
// in the basis (s1+, s2+, s3+, s1-, s2-, s3-).

#include "twistor/twistor_point.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace twistor {

/// Symmetric operator on Lambda^2 R^4.
class CurvatureOperator {
public:
    CurvatureOperator() : m_(Mat6::Zero()) {}
    /// Throws ValidationError if |R - R^T| > 1e-12.
    explicit CurvatureOperator(const Mat6& matrix);

    const Mat6& matrix() const { return m_; }
    TwoVector apply(const TwoVector& sigma) const { return TwoVector(m_ * sigma.coeffs); }
    /// g(R sigma, tau).
    double pair(const TwoVector& sigma, const TwoVector& tau) const
    {
        return tau.coeffs.dot(m_ * sigma.coeffs);
    }

private:
    Mat6 m_;
};

/// B is the block sending Lambda^2+ to Lambda^2- (rows: minus, columns: plus);
/// the reverse block is B^T.
struct CurvatureBlocks {
    double s = 0.0;
    Mat3 B = Mat3::Zero();
    Mat3 Wplus = Mat3::Zero();
    Mat3 Wminus = Mat3::Zero();
    /// Both Weyl blocks are traceless.
    bool strict = true;
};

/// s := 2 trace(R); W+- := diagonal blocks minus (s/12) Id.
/// Operators with a non-traceless Weyl part come back with strict = false.
CurvatureBlocks decompose(const CurvatureOperator& R);

/// Throws ValidationError if a Weyl block is asymmetric. `strict` is
/// recomputed from the block traces and ignored on input.
CurvatureOperator compose(const CurvatureBlocks& blocks);

/// Recomputes the strict flag from the traces.
bool weyl_traceless(const Mat3& Wplus, const Mat3& Wminus);

struct ModelParams {
    double s = 0.0;
    Mat3 B = Mat3::Zero();
    Mat3 Wminus = Mat3::Zero();
};

/// Built-in model names, in the order `models` lists them.
const std::vector<std::string>& model_names();

/// Blocks of a named model:
///   flat, constant_curvature(s), asd_ricci_flat(W-), einstein_asd(s, W-),
///   asd_general(s, B, W-), kaehler_witness(s), w1_witness(s), w2_witness(s < 0).
/// The witnesses annihilate Lambda^2- (W- = -(s/12) Id) and are non-strict.
CurvatureBlocks model_blocks(const std::string& name, const ModelParams& params);
CurvatureOperator model(const std::string& name, const ModelParams& params);

/// Conjugation by the orientation reversal e4 -> -e4; swaps the roles of
/// W+ and W-.
CurvatureOperator reverse_orientation(const CurvatureOperator& R);

/// The skew map R(X, Y) with g(R(X,Y) Z, T) = g(R(X ^ Y), Z ^ T).
Mat4 curvature_endo(const CurvatureOperator& R, const Vec4& X, const Vec4& Y);

/// H_t(R(X,Y)J, V) = 2 g(R(t1 (J1 V1)^ + t2 (J2 V2)^) X, Y).
double coupling(const CurvatureOperator& R, const Vec4& X, const Vec4& Y,
                const ProductTwistorPoint& p, const VerticalVector& V, double t1, double t2);

// JSON documents: {"matrix": [[6x6]]} or
// {"blocks": {"s": .., "B": [[3x3]], "Wplus": [[3x3]], "Wminus": [[3x3]]}}.

/// Throws InputError naming the offending field for malformed documents and
/// ValidationError for asymmetric matrices.
CurvatureOperator curvature_from_json(const nlohmann::json& doc);
/// Emits both the "matrix" and "blocks" forms, plus "strict".
nlohmann::json curvature_to_json(const CurvatureOperator& R);

}  // namespace twistor
