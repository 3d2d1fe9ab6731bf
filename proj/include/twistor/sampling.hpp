#pragma once

// Seeded random draws of points, tangent vectors and curvature data.

#include "twistor/product_twistor.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>

namespace twistor {

using Rng = std::mt19937_64;

/// "++", "+-", "-+", "--" -> (sign of J1, sign of J2). Throws InputError.
std::pair<Orientation, Orientation> parse_component(const std::string& component);

/// Uniform point of the unit sphere of Lambda^2_half.
TwoVector random_unit_two_vector(Rng& rng, Orientation half);

ProductTwistorPoint random_point(Rng& rng, const std::string& component);

/// Standard-normal coefficients over the H_t-orthonormal frame.
GTangent random_tangent(Rng& rng, const FrameAtPoint& frame);

/// Standard-normal symmetric 3x3 matrix, optionally projected to trace zero.
Mat3 random_symmetric(Rng& rng, bool traceless);
Mat3 random_matrix(Rng& rng);

/// Random symmetric 6x6 operator with traceless Weyl blocks.
CurvatureOperator random_strict_operator(Rng& rng);

/// Random vertical vector at p in terms of the vertical basis of each factor.
VerticalVector random_vertical(Rng& rng, const ProductTwistorPoint& p);

}  // namespace twistor
