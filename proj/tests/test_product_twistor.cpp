#include "twistor/product_twistor.hpp"
#include "twistor/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace twistor;

namespace {

const double r2 = std::sqrt(2.0);

Vec4 e(int i) { return Vec4::Unit(i - 1); }

ProductTwistorPoint standard_point()
{
    return {sphere_to_J(TwoVector::s_plus(1), Orientation::Plus),
            sphere_to_J(TwoVector::s_plus(1), Orientation::Plus)};
}

GTangent h(const Vec4& x) { return GTangent::horizontal_lift(x); }

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

struct Draw {
    std::unique_ptr<AlmostHermitianStructure> s;
    FrameAtPoint f;
};

Draw draw(Rng& rng, const std::string& component, int n)
{
    std::uniform_real_distribution<double> t(0.2, 2.0);
    auto s = std::make_unique<AlmostHermitianStructure>(random_point(rng, component),
                                                        random_strict_operator(rng),
                                                        Params{t(rng), t(rng), n});
    const FrameAtPoint f = s->frame();
    return {std::move(s), f};
}

}  // namespace

TEST_CASE("Params validation")
{
    CHECK_THROWS_AS((Params{0.0, 1.0, 1}.validate()), InputError);
    CHECK_THROWS_AS((Params{1.0, -1.0, 1}.validate()), InputError);
    CHECK_THROWS_AS((Params{1.0, 1.0, 5}.validate()), InputError);
    CHECK_NOTHROW((Params{1.0, 1.0, 4}.validate()));
}

TEST_CASE("metric examples")
{
    const ProductTwistorPoint p = standard_point();
    const AlmostHermitianStructure s(p, CurvatureOperator(), Params{3.0, 1.0, 1});
    CHECK(s.metric(h(e(1)), h(e(1))) == 1.0);
    const VerticalVector V = s.make_vertical(endo(TwoVector::s_plus(2)), Mat4::Zero());
    CHECK(s.metric(GTangent::vertical_only(V), GTangent::vertical_only(V)) ==
          doctest::Approx(3.0));
    CHECK(s.metric(h(e(2)), GTangent::vertical_only(V)) == 0.0);
    CHECK_THROWS_AS(s.make_vertical(endo(TwoVector::s_plus(1)), Mat4::Zero()), ValidationError);
}

TEST_CASE("J^n examples")
{
    const ProductTwistorPoint p = standard_point();
    const Mat4 V1 = endo(TwoVector::s_plus(2));
    const Mat4 V2 = endo(TwoVector::s_plus(3));
    const Mat4& j1 = p.J1.matrix();
    const Mat4& j2 = p.J2.matrix();

    const AlmostHermitianStructure s1(p, CurvatureOperator(), Params{1, 1, 1});
    CHECK((s1.J(h(e(1))).horizontal - j1 * e(1)).norm() == 0.0);

    const AlmostHermitianStructure s3(p, CurvatureOperator(), Params{1, 1, 3});
    const GTangent JA = s3.J(GTangent::vertical_only(s3.make_vertical(V1, V2)));
    CHECK(JA.horizontal.norm() == 0.0);
    CHECK(max_abs(JA.vertical.V1() + j1 * V1) < 1e-15);
    CHECK(max_abs(JA.vertical.V2() - j2 * V2) < 1e-15);
}

TEST_CASE("J^n is an H_t-orthogonal complex structure and Omega is a 2-form")
{
    Rng rng(19);
    for (const char* c : {"++", "+-", "-+", "--"}) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 0; k < 25; ++k) {
                const Draw d = draw(rng, c, n);
                const auto& s = *d.s;
                const GTangent A = random_tangent(rng, d.f);
                const GTangent B = random_tangent(rng, d.f);
                const GTangent JJA = s.J(s.J(A));
                CHECK((JJA.horizontal + A.horizontal).norm() < 1e-12);
                CHECK(max_abs(JJA.vertical.V1() + A.vertical.V1()) < 1e-12);
                CHECK(max_abs(JJA.vertical.V2() + A.vertical.V2()) < 1e-12);
                CHECK(s.metric(s.J(A), s.J(B)) ==
                      doctest::Approx(s.metric(A, B)).epsilon(1e-10));
                CHECK(std::abs(s.omega(A, A)) < 1e-12);
                CHECK(s.omega(A, B) == doctest::Approx(-s.omega(B, A)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("frame is H_t-orthonormal")
{
    Rng rng(23);
    for (int k = 0; k < 20; ++k) {
        const Draw d = draw(rng, k % 2 ? "+-" : "-+", 1 + k % 4);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                CHECK(d.s->metric(d.f[i], d.f[j]) ==
                      doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("omega example")
{
    const ProductTwistorPoint p = standard_point();
    const AlmostHermitianStructure s(p, CurvatureOperator(), Params{1, 1, 2});
    CHECK(s.omega(h(e(1)), h(p.J1.matrix() * e(1))) == doctest::Approx(1.0));
}

TEST_CASE("D Omega and d Omega: flat example and horizontal triples")
{
    const ProductTwistorPoint p = standard_point();
    const Mat4 V1 = endo(TwoVector::s_plus(2));
    // g(V1 e1, e3) read off the matrix
    const double want = e(3).dot(V1 * e(1));
    CHECK(want == doctest::Approx(1.0 / r2));
    for (int n = 1; n <= 4; ++n) {
        const AlmostHermitianStructure s(p, CurvatureOperator(), Params{1, 1, n});
        const GTangent A = GTangent::vertical_only(s.make_vertical(V1, Mat4::Zero()));
        CHECK(s.cov_deriv_omega(A, h(e(1)), h(e(3))) == doctest::Approx(want).epsilon(1e-12));
        CHECK(s.ext_deriv_omega(A, h(e(1)), h(e(3))) == doctest::Approx(want).epsilon(1e-12));
    }

    Rng rng(29);
    std::normal_distribution<double> normal;
    auto v4 = [&] { return Vec4(normal(rng), normal(rng), normal(rng), normal(rng)); };
    for (int k = 0; k < 50; ++k) {
        const Draw d = draw(rng, "+-", 1 + k % 4);
        const GTangent X = h(v4()), Y = h(v4()), Z = h(v4());
        CHECK(std::abs(d.s->cov_deriv_omega(X, Y, Z)) < 1e-12);
        CHECK(std::abs(d.s->ext_deriv_omega(X, Y, Z)) < 1e-12);
        CHECK(std::abs(d.s->codiff_omega(X)) < 1e-12);
        CHECK(std::abs(d.s->nijenhuis(X, Y, Z)) < 1e-12);
    }
}

TEST_CASE("codifferential examples")
{
    Rng rng(31);
    for (int k = 0; k < 20; ++k) {
        const ProductTwistorPoint p = random_point(rng, k % 2 ? "+-" : "++");
        const VerticalVector V = random_vertical(rng, p);
        const Params t{0.7, 1.3, 1 + k % 4};
        const AlmostHermitianStructure flat(p, CurvatureOperator(), t);
        CHECK(flat.codiff_omega(GTangent::vertical_only(V)) == 0.0);

        // R = Id: (J1 V1)^ is orthogonal to J1^, so only the second factor can contribute
        const AlmostHermitianStructure id(p, CurvatureOperator(Mat6::Identity()), t);
        const GTangent A1 = GTangent::vertical_only(id.make_vertical(V.V1(), Mat4::Zero()));
        CHECK(std::abs(id.codiff_omega(A1)) < 1e-12);
        CHECK(std::abs(id.codiff_frame_trace(A1)) < 1e-12);

        const AlmostHermitianStructure s(p, random_strict_operator(rng), t);
        const GTangent A = GTangent::vertical_only(V);
        CHECK(s.codiff_omega(A) == doctest::Approx(s.codiff_frame_trace(A)).epsilon(1e-10));
    }
}

TEST_CASE("Nijenhuis example for n = 3")
{
    const ProductTwistorPoint p = standard_point();
    const Mat4 V1 = endo(TwoVector::s_plus(2));
    const AlmostHermitianStructure s(p, CurvatureOperator(), Params{1, 1, 3});
    const GTangent V = GTangent::vertical_only(s.make_vertical(V1, Mat4::Zero()));
    const double want = 2.0 * e(4).dot(p.J1.matrix() * V1 * e(1));
    CHECK(std::abs(want) > 0.5);
    CHECK(s.nijenhuis(h(e(1)), V, h(e(4))) == doctest::Approx(want).epsilon(1e-12));
    CHECK(s.nijenhuis_closed_form(h(e(1)), V, h(e(4))) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("Nijenhuis tensor vanishes on pairs of vertical vectors")
{
    Rng rng(37);
    for (int k = 0; k < 40; ++k) {
        const Draw d = draw(rng, k % 2 ? "++" : "+-", 1 + k % 4);
        const auto& s = *d.s;
        const GTangent U = GTangent::vertical_only(random_vertical(rng, s.point()));
        const GTangent W = GTangent::vertical_only(random_vertical(rng, s.point()));
        const GTangent C = random_tangent(rng, d.f);
        CHECK(std::abs(s.nijenhuis(U, W, C)) < 1e-10);
    }
}

TEST_CASE("Levi-Civita components vanish for R = 0")
{
    Rng rng(41);
    const ProductTwistorPoint p = random_point(rng, "-+");
    const AlmostHermitianStructure s(p, CurvatureOperator(), Params{0.5, 2.0, 2});
    const LeviCivitaHH lc = s.lc_horizontal(e(1), e(3));
    CHECK(max_abs(lc.vertical1) == 0.0);
    CHECK(max_abs(lc.vertical2) == 0.0);
    CHECK(s.lc_vertical_horizontal(random_vertical(rng, p), e(2), e(4)) == 0.0);
}

TEST_CASE("restriction identities and errors")
{
    Rng rng(43);
    for (int n = 1; n <= 4; ++n) {
        const Draw d = draw(rng, "+-", n);
        const GTangent A = d.f[0] + d.f[4];
        const GTangent B = d.f[1] - 0.5 * d.f[5];
        const GTangent C = d.f[2] + d.f[3];
        for (RestrictionKind kind :
             {RestrictionKind::Metric, RestrictionKind::CovariantDerivative,
              RestrictionKind::ExteriorDerivative, RestrictionKind::Codifferential}) {
            CHECK(restriction_check(*d.s, kind, A, B, C) < 1e-12);
        }
        CHECK_THROWS_AS(restriction_check(*d.s, RestrictionKind::Metric, d.f[6], B, C),
                        ValidationError);
    }
}

TEST_CASE("tangent validation")
{
    Rng rng(47);
    const Draw d = draw(rng, "++", 1);
    GTangent bad;
    CHECK_THROWS_AS(d.s->make_vertical(Mat4::Identity(), Mat4::Zero()), ValidationError);
    CHECK_NOTHROW(d.s->require_tangent(bad));
}
