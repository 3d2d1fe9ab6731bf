#include "twistor/sampling.hpp"

namespace twistor {

std::pair<Orientation, Orientation> parse_component(const std::string& component)
{
    auto sign = [&](char c) {
        if (c == '+') {
            return Orientation::Plus;
        }
        if (c == '-') {
            return Orientation::Minus;
        }
        throw InputError("component must be one of ++, +-, -+, --; got '" + component + "'");
    };
    if (component.size() != 2) {
        throw InputError("component must be one of ++, +-, -+, --; got '" + component + "'");
    }
    return {sign(component[0]), sign(component[1])};
}

TwoVector random_unit_two_vector(Rng& rng, Orientation half)
{
    std::normal_distribution<double> normal;
    Vec3 v;
    do {
        v = Vec3(normal(rng), normal(rng), normal(rng));
    } while (v.norm() < 1e-8);
    return TwoVector::from_half(v.normalized(), half);
}

ProductTwistorPoint random_point(Rng& rng, const std::string& component)
{
    const auto [s1, s2] = parse_component(component);
    auto j1 = sphere_to_J(random_unit_two_vector(rng, s1), s1);
    auto j2 = sphere_to_J(random_unit_two_vector(rng, s2), s2);
    return {j1, j2};
}

GTangent random_tangent(Rng& rng, const FrameAtPoint& frame)
{
    std::normal_distribution<double> normal;
    GTangent out;
    for (const GTangent& e : frame) {
        out = out + normal(rng) * e;
    }
    return out;
}

Mat3 random_matrix(Rng& rng)
{
    std::normal_distribution<double> normal;
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) = normal(rng);
        }
    }
    return m;
}

Mat3 random_symmetric(Rng& rng, bool traceless)
{
    const Mat3 a = random_matrix(rng);
    Mat3 s = 0.5 * (a + a.transpose());
    if (traceless) {
        s -= (s.trace() / 3.0) * Mat3::Identity();
    }
    return s;
}

CurvatureOperator random_strict_operator(Rng& rng)
{
    std::normal_distribution<double> normal;
    CurvatureBlocks b;
    b.s = 12.0 * normal(rng);
    b.B = random_matrix(rng);
    b.Wplus = random_symmetric(rng, true);
    b.Wminus = random_symmetric(rng, true);
    return compose(b);
}

VerticalVector random_vertical(Rng& rng, const ProductTwistorPoint& p)
{
    std::normal_distribution<double> normal;
    const auto u = vertical_basis(p.J1);
    const auto w = vertical_basis(p.J2);
    return VerticalVector(p, normal(rng) * u[0] + normal(rng) * u[1],
                          normal(rng) * w[0] + normal(rng) * w[1]);
}

}  // namespace twistor
