#include "twistor/fibre_algebra.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace twistor;
using namespace twistor::fibre;

namespace {

std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

Matrix normal_matrix(std::mt19937_64& rng, int dim)
{
    std::normal_distribution<double> normal;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = normal(rng);
        }
    }
    return a;
}

Matrix skew(std::mt19937_64& rng, int dim)
{
    const Matrix a = normal_matrix(rng, dim);
    return a - a.transpose();
}

Matrix orthogonal(std::mt19937_64& rng, int dim)
{
    Eigen::HouseholderQR<Matrix> qr(normal_matrix(rng, dim));
    return qr.householderQ();
}

OrthogonalComplexStructure random_J(std::mt19937_64& rng, int dim)
{
    const Matrix q = orthogonal(rng, dim);
    return OrthogonalComplexStructure(q * OrthogonalComplexStructure::standard(dim).matrix() *
                                      q.transpose());
}

Matrix tangent_part(const Matrix& J, const Matrix& a) { return 0.5 * (a + J * a * J); }

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("inner_G values on elementary skew maps")
{
    const Matrix s12 = elementary_skew(4, 1, 2);
    const Matrix s34 = elementary_skew(4, 3, 4);
    CHECK(inner_G(s12, s12) == doctest::Approx(1.0));
    CHECK(inner_G(s12, s34) == doctest::Approx(0.0));
    CHECK(inner_G(Matrix(Matrix::Zero(4, 4)), s34) == 0.0);
    CHECK_THROWS_AS(inner_G(s12, elementary_skew(6, 1, 2)), InputError);
}

TEST_CASE("inner_G is -1/2 trace(ab), symmetric and positive on skew maps")
{
    auto rng = rng_for(11);
    for (int k = 0; k < 50; ++k) {
        const Matrix a = skew(rng, 6);
        const Matrix b = skew(rng, 6);
        CHECK(inner_G(a, b) == doctest::Approx(-0.5 * (a * b).trace()).epsilon(1e-12));
        CHECK(inner_G(a, b) == doctest::Approx(inner_G(b, a)).epsilon(1e-12));
        CHECK(inner_G(a, a) > 0.0);
    }
}

TEST_CASE("elementary skew map acts as S_ab e_c = delta_ac e_b - delta_bc e_a")
{
    const Matrix s = elementary_skew(2, 1, 2);
    CHECK(s(1, 0) == 1.0);  // S_12 e_1 = e_2
    CHECK(s(0, 1) == -1.0);  // S_12 e_2 = -e_1
    CHECK(s(0, 0) == 0.0);
}

TEST_CASE("S basis sizes and G-orthonormality")
{
    CHECK(make_S_basis(EuclideanSpace(2)).size() == 1);
    CHECK(make_S_basis(EuclideanSpace(4)).size() == 6);
    CHECK(make_S_basis(EuclideanSpace(6)).size() == 15);
    for (int dim : {2, 4, 6, 8}) {
        const auto basis = make_S_basis(EuclideanSpace(dim));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                CHECK(inner_G(basis[i], basis[j]) ==
                      doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("EuclideanSpace rejects odd or tiny dimensions")
{
    CHECK_THROWS_AS(EuclideanSpace(3), InputError);
    CHECK_THROWS_AS(EuclideanSpace(0), InputError);
    CHECK_NOTHROW(EuclideanSpace(2));
}

TEST_CASE("constructors reject values that break their invariants")
{
    Matrix a = Matrix::Zero(4, 4);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(SkewEndomorphism{a}, ValidationError);
    CHECK_THROWS_AS(OrthogonalComplexStructure(Matrix(Matrix::Zero(4, 4))), ValidationError);
    const auto J = OrthogonalComplexStructure::standard(4);
    CHECK_THROWS_AS(FibreTangentVector(J, SkewEndomorphism(J.matrix())), ValidationError);
}

TEST_CASE("AB basis: sizes, tangency, orthonormality, B = K A")
{
    CHECK(make_AB_basis(OrthogonalComplexStructure::standard(2), Matrix::Identity(2, 2)).empty());

    const auto J4 = OrthogonalComplexStructure::standard(4);
    const auto basis4 = make_AB_basis(J4, Matrix::Identity(4, 4));
    REQUIRE(basis4.size() == 2);
    CHECK(max_abs(kaehler_K(basis4[0]).matrix() - basis4[1].matrix()) < 1e-14);

    auto rng = rng_for(5);
    for (int m : {2, 3, 4}) {
        const int dim = 2 * m;
        const Matrix q = orthogonal(rng, dim);
        const OrthogonalComplexStructure J(
            q * OrthogonalComplexStructure::standard(dim).matrix() * q.transpose());
        const auto basis = make_AB_basis(J, q);
        REQUIRE(static_cast<int>(basis.size()) == m * m - m);

        Matrix gram(basis.size(), basis.size());
        Matrix flat(dim * dim, basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(max_abs(J.matrix() * basis[i].matrix() + basis[i].matrix() * J.matrix()) <
                  1e-12);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                gram(i, j) = inner_G(basis[i].matrix(), basis[j].matrix());
            }
            flat.col(i) = basis[i].matrix().reshaped();
        }
        CHECK(max_abs(gram - Matrix::Identity(basis.size(), basis.size())) < 1e-12);

        // the tangent space {V skew : JV + VJ = 0} has dimension m^2 - m
        Eigen::FullPivLU<Matrix> lu(flat);
        CHECK(lu.rank() == m * m - m);
        for (std::size_t i = 0; i + 1 < basis.size(); i += 2) {
            CHECK(max_abs(J.matrix() * basis[i].matrix() - basis[i + 1].matrix()) < 1e-12);
        }
    }
}

TEST_CASE("AB basis rejects frames that are not J-adapted or not orthonormal")
{
    const auto J = OrthogonalComplexStructure::standard(4);
    Matrix swapped = Matrix::Identity(4, 4);
    swapped.col(0).swap(swapped.col(2));
    CHECK_THROWS_WITH_AS(make_AB_basis(J, swapped), doctest::Contains("J e"), ValidationError);
    CHECK_THROWS_AS(make_AB_basis(J, Matrix(2.0 * Matrix::Identity(4, 4))), ValidationError);
}

TEST_CASE("K is an almost complex structure on the tangent space")
{
    auto rng = rng_for(7);
    const auto J = OrthogonalComplexStructure::standard(4);
    const FibreTangentVector zero(J, SkewEndomorphism::zero(4));
    CHECK(max_abs(kaehler_K(zero).matrix()) == 0.0);
    for (int dim : {4, 6}) {
        for (int k = 0; k < 100; ++k) {
            const auto Jr = random_J(rng, dim);
            const FibreTangentVector V(Jr,
                                       SkewEndomorphism(tangent_part(Jr.matrix(), skew(rng, dim))));
            const auto KV = kaehler_K(V);
            CHECK(max_abs(kaehler_K(KV).matrix() + V.matrix()) < 1e-12);
            CHECK(inner_G(KV.matrix(), KV.matrix()) ==
                  doctest::Approx(inner_G(V.matrix(), V.matrix())).epsilon(1e-12));
        }
    }
}

TEST_CASE("fibre Levi-Civita: constant field gives zero")
{
    const auto J = OrthogonalComplexStructure::standard(4);
    const auto X = make_AB_basis(J, Matrix::Identity(4, 4))[0];
    FibreVectorField Y;
    Y.evaluate = [](const Matrix&) { return Matrix(Matrix::Zero(4, 4)); };
    Y.derivative = [](const Matrix&, const Matrix&) { return Matrix(Matrix::Zero(4, 4)); };
    CHECK(max_abs(fibre_levi_civita(Y, X).matrix()) == 0.0);
}

// The covariant derivative of a tangent field along a curve inside Z is the
// tangential part of its ordinary derivative. The curve
//   c(h) = exp(h xi) J exp(-h xi), xi = J X / 2,
// stays in Z and has c'(0) = X.
TEST_CASE("fibre Levi-Civita matches differentiation along a curve in Z")
{
    auto rng = rng_for(13);
    for (int dim : {4, 6}) {
        for (int k = 0; k < 20; ++k) {
            const auto J = random_J(rng, dim);
            const Matrix& j = J.matrix();
            const FibreTangentVector X(J, SkewEndomorphism(tangent_part(j, skew(rng, dim))));
            const Matrix Q = skew(rng, dim);
            auto Y = [Q](const Matrix& L) -> Matrix { return 0.5 * (Q + L * Q * L); };

            const Matrix xi = 0.5 * j * X.matrix();
            auto curve = [&](double h) -> Matrix {
                const Matrix e = (h * xi).exp();
                return e * j * e.transpose();
            };
            const double h = 1e-4;
            const Matrix dY = (Y(curve(h)) - Y(curve(-h))) / (2.0 * h);
            const Matrix oracle = tangent_part(j, dY);

            const auto got =
                fibre_levi_civita(FibreVectorField::with_finite_differences(Y), X).matrix();
            CHECK(max_abs(got - oracle) < 1e-6);
        }
    }
}

TEST_CASE("fibre Kaehler: D K = 0 with finite-difference fields")
{
    auto rng = rng_for(17);
    for (int dim : {4, 6}) {
        for (int k = 0; k < 20; ++k) {
            const auto J = random_J(rng, dim);
            const Matrix& j = J.matrix();
            const FibreTangentVector X(J, SkewEndomorphism(tangent_part(j, skew(rng, dim))));
            const Matrix W0 = skew(rng, dim);
            const Matrix W1 = skew(rng, dim);
            auto Y = [=](const Matrix& L) -> Matrix {
                return tangent_part(L, W0 + L * W1 * L.transpose());
            };
            auto KY = [=](const Matrix& L) -> Matrix { return L * Y(L); };
            const auto DY = fibre_levi_civita(FibreVectorField::with_finite_differences(Y), X);
            const auto DKY = fibre_levi_civita(FibreVectorField::with_finite_differences(KY), X);
            CHECK(max_abs(DKY.matrix() - kaehler_K(DY).matrix()) < 1e-6);
        }
    }
}

TEST_CASE("wedge coefficients: S_12 maps to e1 ^ e2 and zero to zero")
{
    const Vector c = wedge_coefficients(elementary_skew(4, 1, 2));
    Vector expected = Vector::Zero(6);
    expected(0) = 1.0;
    CHECK(max_abs(c - expected) == 0.0);
    CHECK(max_abs(wedge_coefficients(Matrix::Zero(4, 4))) == 0.0);
}

TEST_CASE("wedge coefficients: defining pairing, isometry, round trip, equivariance")
{
    auto rng = rng_for(19);
    std::normal_distribution<double> normal;
    for (int dim : {4, 6}) {
        for (int k = 0; k < 100; ++k) {
            const Matrix a = skew(rng, dim);
            const Vector c = wedge_coefficients(a);
            Vector x(dim);
            Vector y(dim);
            for (int i = 0; i < dim; ++i) {
                x(i) = normal(rng);
                y(i) = normal(rng);
            }
            CHECK(c.dot(decomposable(x, y)) == doctest::Approx(y.dot(a * x)).epsilon(1e-12));
            CHECK(c.squaredNorm() == doctest::Approx(inner_G(a, a)).epsilon(1e-12));
            CHECK(max_abs(from_wedge_coefficients(c, dim).matrix() - a) < 1e-14);

            // (q a q^-1)^ = Lambda^2 q (a^): on decomposables (qx) ^ (qy)
            const Matrix q = orthogonal(rng, dim);
            const Vector cq = wedge_coefficients(q * a * q.transpose());
            CHECK(cq.dot(decomposable(q * x, q * y)) ==
                  doctest::Approx(c.dot(decomposable(x, y))).epsilon(1e-10));
        }
    }
}

TEST_CASE("wedge metric on decomposables is the Gram determinant")
{
    auto rng = rng_for(23);
    std::normal_distribution<double> normal;
    for (int k = 0; k < 200; ++k) {
        Vector x[4];
        for (auto& v : x) {
            v.resize(4);
            for (int i = 0; i < 4; ++i) {
                v(i) = normal(rng);
            }
        }
        const double lhs = decomposable(x[0], x[1]).dot(decomposable(x[2], x[3]));
        const double rhs = x[0].dot(x[2]) * x[1].dot(x[3]) - x[0].dot(x[3]) * x[1].dot(x[2]);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("operations preserve skewness, tangency and J^2 = -Id")
{
    auto rng = rng_for(29);
    for (int k = 0; k < 1000; ++k) {
        const int dim = (k % 3 + 2) * 2;
        const auto J = random_J(rng, dim);
        const Matrix& j = J.matrix();
        CHECK(max_abs(j * j + Matrix::Identity(dim, dim)) < 1e-10);
        const FibreTangentVector V(J, SkewEndomorphism(tangent_part(j, skew(rng, dim))));
        const auto KV = kaehler_K(V);
        CHECK(max_abs(KV.matrix() + KV.matrix().transpose()) < 1e-12);
        CHECK(max_abs(j * KV.matrix() + KV.matrix() * j) < 1e-10);
    }
}
