#pragma once

// Points and tangent vectors of the product twistor space over a single
// tangent space of an oriented Riemannian 4-manifold.

#include "twistor/four_dim.hpp"

#include <string>

namespace twistor {

/// A pair (J1, J2) of compatible complex structures on T_pM.
struct ProductTwistorPoint {
    OrientedComplexStructure4 J1;
    OrientedComplexStructure4 J2;

    /// "++", "+-", "-+" or "--".
    std::string component() const
    {
        return {symbol_of(J1.sign()), symbol_of(J2.sign())};
    }
};

/// A vertical vector (V1, V2): V1 anticommutes with J1, V2 with J2.
class VerticalVector {
public:
    VerticalVector() : V1_(Mat4::Zero()), V2_(Mat4::Zero()) {}
    /// Throws ValidationError unless both parts are skew and anticommute with
    /// the corresponding factor of `p` within 1e-10.
    VerticalVector(const ProductTwistorPoint& p, const Mat4& V1, const Mat4& V2);

    const Mat4& V1() const { return V1_; }
    const Mat4& V2() const { return V2_; }

    VerticalVector operator+(const VerticalVector& o) const { return {V1_ + o.V1_, V2_ + o.V2_}; }
    VerticalVector operator-(const VerticalVector& o) const { return {V1_ - o.V1_, V2_ - o.V2_}; }
    friend VerticalVector operator*(double a, const VerticalVector& v)
    {
        return {a * v.V1_, a * v.V2_};
    }

private:
    VerticalVector(const Mat4& V1, const Mat4& V2) : V1_(V1), V2_(V2) {}

    Mat4 V1_;
    Mat4 V2_;
};

/// X^h + V.
struct GTangent {
    Vec4 horizontal = Vec4::Zero();
    VerticalVector vertical;

    static GTangent horizontal_lift(const Vec4& x) { return {x, VerticalVector()}; }
    static GTangent vertical_only(const VerticalVector& v) { return {Vec4::Zero(), v}; }

    GTangent operator+(const GTangent& o) const
    {
        return {horizontal + o.horizontal, vertical + o.vertical};
    }
    GTangent operator-(const GTangent& o) const
    {
        return {horizontal - o.horizontal, vertical - o.vertical};
    }
    friend GTangent operator*(double a, const GTangent& v)
    {
        return {a * v.horizontal, a * v.vertical};
    }
};

}  // namespace twistor
