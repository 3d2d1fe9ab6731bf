#include "twistor/four_dim.hpp"
#include "twistor/fibre_algebra.hpp"
#include "twistor/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace twistor;

namespace {

const double r2 = std::sqrt(2.0);

// Elementary 2-vectors in the order e12, e13, e14, e23, e24, e34.
Vec6 elem(int i, int j)
{
    static const int index[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    Vec6 v = Vec6::Zero();
    v(index[i - 1][j - 1]) = i < j ? 1.0 : -1.0;
    return v;
}

TwoVector from_elementary(const Vec6& e) { return TwoVector(s_basis_in_elementary().transpose() * e); }

// Hodge star on elementary 2-vectors from e_i ^ e_j ^ *(e_i ^ e_j) = e1234.
Vec6 star_elementary(const Vec6& e)
{
    Vec6 out = Vec6::Zero();
    out += e(0) * elem(3, 4);
    out += e(1) * elem(4, 2);
    out += e(2) * elem(2, 3);
    out += e(3) * elem(1, 4);
    out += e(4) * elem(3, 1);
    out += e(5) * elem(1, 2);
    return out;
}

Vec4 e(int i) { return Vec4::Unit(i - 1); }

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("s basis matches its defining combinations of elementary 2-vectors")
{
    const Mat6& s = s_basis_in_elementary();
    for (int k = 0; k < 2; ++k) {
        const double sg = k == 0 ? 1.0 : -1.0;
        CHECK((s.col(3 * k + 0) - (elem(1, 2) + sg * elem(3, 4)) / r2).norm() < 1e-15);
        CHECK((s.col(3 * k + 1) - (elem(1, 3) + sg * elem(4, 2)) / r2).norm() < 1e-15);
        CHECK((s.col(3 * k + 2) - (elem(1, 4) + sg * elem(2, 3)) / r2).norm() < 1e-15);
    }
    CHECK((s.transpose() * s - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Hodge star agrees with the elementary-basis star and squares to Id")
{
    CHECK((s_basis_in_elementary() * hodge_star(from_elementary(elem(1, 2))).coeffs -
           elem(3, 4))
              .norm() < 1e-15);
    CHECK((hodge_star(TwoVector::s_plus(1)) - TwoVector::s_plus(1)).norm() == 0.0);
    CHECK((hodge_star(TwoVector::s_minus(2)) + TwoVector::s_minus(2)).norm() == 0.0);
    for (int k = 0; k < 6; ++k) {
        const TwoVector b = TwoVector::basis(k);
        const Vec6 want = star_elementary(s_basis_in_elementary() * b.coeffs);
        CHECK((s_basis_in_elementary() * hodge_star(b).coeffs - want).norm() < 1e-15);
        CHECK((hodge_star(hodge_star(b)) - b).norm() == 0.0);
    }
}

TEST_CASE("split_pm examples")
{
    const auto [p, m] = split_pm(wedge(e(1), e(2)));
    CHECK((p - (1.0 / r2) * TwoVector::s_plus(1)).norm() < 1e-15);
    CHECK((m - (1.0 / r2) * TwoVector::s_minus(1)).norm() < 1e-15);
    const auto [p3, m3] = split_pm(TwoVector::s_plus(3));
    CHECK((p3 - TwoVector::s_plus(3)).norm() == 0.0);
    CHECK(m3.norm() == 0.0);
    const auto [p0, m0] = split_pm(TwoVector());
    CHECK(p0.norm() + m0.norm() == 0.0);
}

TEST_CASE("cross product on each half")
{
    for (Orientation h : {Orientation::Plus, Orientation::Minus}) {
        auto s = [&](int i) {
            return h == Orientation::Plus ? TwoVector::s_plus(i) : TwoVector::s_minus(i);
        };
        CHECK((cross(s(1), s(2), h) - s(3)).norm() < 1e-15);
        CHECK((cross(s(2), s(3), h) - s(1)).norm() < 1e-15);
        CHECK((cross(s(3), s(1), h) - s(2)).norm() < 1e-15);
        CHECK(cross(s(2), s(2), h).norm() == 0.0);
    }
    CHECK_THROWS_AS(cross(TwoVector::s_plus(1), TwoVector::s_minus(2), Orientation::Plus),
                    ValidationError);
}

TEST_CASE("commutator relation: (+-(1/sqrt2)[K_sigma, K_tau])^ = sigma x tau")
{
    Rng rng(31);
    std::normal_distribution<double> normal;
    for (Orientation h : {Orientation::Plus, Orientation::Minus}) {
        const double sign = h == Orientation::Plus ? 1.0 : -1.0;
        for (int k = 0; k < 100; ++k) {
            const Vec3 a(normal(rng), normal(rng), normal(rng));
            const Vec3 b(normal(rng), normal(rng), normal(rng));
            const TwoVector sigma = TwoVector::from_half(a, h);
            const TwoVector tau = TwoVector::from_half(b, h);
            const Mat4 ks = endo(sigma);
            const Mat4 kt = endo(tau);
            const TwoVector lhs = wedge(Mat4(sign / r2 * (ks * kt - kt * ks)));
            // independent oracle: the 3d cross product of the coefficients
            CHECK((lhs - TwoVector::from_half(a.cross(b), h)).norm() < 1e-10);
            CHECK((cross(sigma, tau, h) - TwoVector::from_half(a.cross(b), h)).norm() < 1e-12);
        }
    }
}

TEST_CASE("sphere_to_J examples and round trip")
{
    const auto Jp = sphere_to_J(TwoVector::s_plus(1), Orientation::Plus).matrix();
    CHECK((Jp * e(1) - e(2)).norm() < 1e-15);
    CHECK((Jp * e(3) - e(4)).norm() < 1e-15);
    const auto Jm = sphere_to_J(TwoVector::s_minus(1), Orientation::Minus).matrix();
    CHECK((Jm * e(1) - e(2)).norm() < 1e-15);
    CHECK((Jm * e(3) + e(4)).norm() < 1e-15);

    Rng rng(37);
    for (Orientation h : {Orientation::Plus, Orientation::Minus}) {
        for (int k = 0; k < 100; ++k) {
            const TwoVector u = random_unit_two_vector(rng, h);
            const auto J = sphere_to_J(u, h);
            CHECK(max_abs(J.matrix() * J.matrix() + Mat4::Identity()) < 1e-12);
            CHECK(max_abs(J.matrix().transpose() * J.matrix() - Mat4::Identity()) < 1e-12);
            CHECK((J_to_sphere(J) - u).norm() < 1e-12);
        }
    }
    CHECK_THROWS_AS(sphere_to_J(2.0 * TwoVector::s_plus(1), Orientation::Plus), ValidationError);
    CHECK_THROWS_AS(sphere_to_J(TwoVector::s_plus(1), Orientation::Minus), ValidationError);
}

TEST_CASE("vertical basis completes J to an oriented orthonormal triad")
{
    const auto J = sphere_to_J(TwoVector::s_plus(1), Orientation::Plus);
    const auto v = vertical_basis(J);
    CHECK(max_abs(v[0] - endo(TwoVector::s_plus(2))) < 1e-15);
    CHECK(max_abs(v[1] - endo(TwoVector::s_plus(3))) < 1e-15);

    const auto antipode = sphere_to_J(-TwoVector::s_minus(1), Orientation::Minus);
    const auto va = vertical_basis(antipode);
    CHECK(max_abs(antipode.matrix() * va[0] + va[0] * antipode.matrix()) < 1e-12);

    Rng rng(41);
    for (Orientation h : {Orientation::Plus, Orientation::Minus}) {
        for (int k = 0; k < 100; ++k) {
            const auto Jr = sphere_to_J(random_unit_two_vector(rng, h), h);
            const auto w = vertical_basis(Jr);
            const Mat4& j = Jr.matrix();
            for (const Mat4& x : w) {
                CHECK(max_abs(j * x + x * j) < 1e-12);
                CHECK(is_pure(wedge(x), h));
            }
            CHECK(fibre::inner_G(fibre::Matrix(w[0]), fibre::Matrix(w[0])) ==
                  doctest::Approx(1.0).epsilon(1e-12));
            CHECK(fibre::inner_G(fibre::Matrix(w[1]), fibre::Matrix(w[1])) ==
                  doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(fibre::inner_G(fibre::Matrix(w[0]), fibre::Matrix(w[1]))) < 1e-12);
            // oriented: u1 x u2 = u3
            CHECK((cross(J_to_sphere(Jr), wedge(w[0]), h) - wedge(w[1])).norm() < 1e-12);
        }
    }
}

TEST_CASE("(K V)^ = +-(1/sqrt2) J^ x V^")
{
    Rng rng(43);
    for (Orientation h : {Orientation::Plus, Orientation::Minus}) {
        const double sign = h == Orientation::Plus ? 1.0 : -1.0;
        for (int k = 0; k < 100; ++k) {
            const auto J = sphere_to_J(random_unit_two_vector(rng, h), h);
            const auto w = vertical_basis(J);
            std::normal_distribution<double> normal;
            const Mat4 V = normal(rng) * w[0] + normal(rng) * w[1];
            const TwoVector lhs = wedge(Mat4(J.matrix() * V));
            const TwoVector rhs = (sign / r2) * cross(J.two_vector(), wedge(V), h);
            CHECK((lhs - rhs).norm() < 1e-10);
        }
    }
}

TEST_CASE("X^J1Y + J1X^Y and X^Y - J1X^J1Y are self-dual for J1 in Z+")
{
    Rng rng(47);
    std::normal_distribution<double> normal;
    for (int k = 0; k < 200; ++k) {
        const Mat4 J = sphere_to_J(random_unit_two_vector(rng, Orientation::Plus),
                                   Orientation::Plus)
                           .matrix();
        const Vec4 X(normal(rng), normal(rng), normal(rng), normal(rng));
        const Vec4 Y(normal(rng), normal(rng), normal(rng), normal(rng));
        CHECK(split_pm(wedge(X, Vec4(J * Y)) + wedge(Vec4(J * X), Y)).second.norm() < 1e-12);
        CHECK(split_pm(wedge(X, Y) - wedge(Vec4(J * X), Vec4(J * Y))).second.norm() < 1e-12);
    }
}

TEST_CASE("quaternionic relations in each half")
{
    for (int sign : {1, -1}) {
        auto K = [&](int i) {
            return endo(sign > 0 ? TwoVector::s_plus(i) : TwoVector::s_minus(i));
        };
        for (int i = 1; i <= 3; ++i) {
            CHECK(max_abs(2.0 * K(i) * K(i) + Mat4::Identity()) < 1e-15);
            for (int j = i + 1; j <= 3; ++j) {
                CHECK(max_abs(K(i) * K(j) + K(j) * K(i)) < 1e-15);
            }
        }
        // endomorphisms of opposite halves commute
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const Mat4 a = endo(TwoVector::s_plus(i));
                const Mat4 b = endo(TwoVector::s_minus(j));
                CHECK(max_abs(a * b - b * a) < 1e-15);
            }
        }
    }
}

TEST_CASE("wedge of vectors: pairing, isometry, Gram determinant")
{
    Rng rng(53);
    std::normal_distribution<double> normal;
    auto v4 = [&] { return Vec4(normal(rng), normal(rng), normal(rng), normal(rng)); };
    for (int k = 0; k < 200; ++k) {
        const Vec4 x1 = v4(), x2 = v4(), x3 = v4(), x4 = v4();
        CHECK(wedge(x1, x2).dot(wedge(x3, x4)) ==
              doctest::Approx(wedge_inner(x1, x2, x3, x4)).epsilon(1e-12));
        Mat4 a;
        for (int i = 0; i < 16; ++i) {
            a.data()[i] = normal(rng);
        }
        a = (a - a.transpose()).eval();
        CHECK(wedge(a).dot(wedge(x1, x2)) == doctest::Approx(x2.dot(a * x1)).epsilon(1e-12));
        CHECK(wedge(a).coeffs.squaredNorm() ==
              doctest::Approx(fibre::inner_G(fibre::Matrix(a), fibre::Matrix(a))).epsilon(1e-12));
        CHECK(max_abs(endo(wedge(a)) - a) < 1e-14);
    }
}

TEST_CASE("orientation reversal exchanges the halves")
{
    const Mat6& f = orientation_reversal();
    CHECK((f * f.transpose() - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((f * TwoVector::s_plus(1).coeffs - TwoVector::s_minus(1).coeffs).norm() < 1e-15);
    CHECK((f * TwoVector::s_plus(2).coeffs - TwoVector::s_minus(2).coeffs).norm() < 1e-15);
    CHECK((f * TwoVector::s_plus(3).coeffs + TwoVector::s_minus(3).coeffs).norm() < 1e-15);
}
