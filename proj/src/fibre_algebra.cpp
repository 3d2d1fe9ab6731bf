#include "twistor/fibre_algebra.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace twistor::fibre {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("dimension mismatch: " + std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()));
    }
}

void require_square(const Matrix& m)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InputError("endomorphism matrix must be square and non-empty");
    }
}

int pair_count(int dim) { return dim * (dim - 1) / 2; }

}  // namespace

EuclideanSpace::EuclideanSpace(int dim) : dim_(dim)
{
    if (dim < 2 || dim % 2 != 0) {
        throw InputError("Euclidean space dimension must be even and >= 2, got " +
                         std::to_string(dim));
    }
}

SkewEndomorphism::SkewEndomorphism(Matrix entries, double tolerance) : m_(std::move(entries))
{
    require_square(m_);
    const double defect = (m_ + m_.transpose()).cwiseAbs().maxCoeff();
    if (defect > tolerance) {
        throw ValidationError("matrix is not skew-symmetric (max |a + a^T| = " +
                              std::to_string(defect) + ")");
    }
}

OrthogonalComplexStructure::OrthogonalComplexStructure(Matrix entries, double tolerance)
    : m_(std::move(entries))
{
    require_square(m_);
    if (m_.rows() % 2 != 0) {
        throw InputError("complex structure needs even dimension");
    }
    const double skew_defect = (m_ + m_.transpose()).cwiseAbs().maxCoeff();
    if (skew_defect > tolerance) {
        throw ValidationError("complex structure is not skew (max |J + J^T| = " +
                              std::to_string(skew_defect) + ")");
    }
    const Matrix sq = m_ * m_ + Matrix::Identity(m_.rows(), m_.cols());
    const double sq_defect = sq.cwiseAbs().maxCoeff();
    if (sq_defect > tolerance) {
        throw ValidationError("J*J != -Id (max defect " + std::to_string(sq_defect) + ")");
    }
}

OrthogonalComplexStructure OrthogonalComplexStructure::standard(int dim)
{
    EuclideanSpace space(dim);
    Matrix j = Matrix::Zero(dim, dim);
    for (int i = 1; i <= space.half_dim(); ++i) {
        j += elementary_skew(dim, 2 * i - 1, 2 * i);
    }
    return OrthogonalComplexStructure(std::move(j));
}

FibreTangentVector::FibreTangentVector(OrthogonalComplexStructure base, SkewEndomorphism value,
                                       double tolerance)
    : base_(std::move(base)), value_(std::move(value))
{
    require_same_dim(base_.matrix(), value_.matrix());
    const Matrix& j = base_.matrix();
    const Matrix& v = value_.matrix();
    const double defect = (j * v + v * j).cwiseAbs().maxCoeff();
    if (defect > tolerance) {
        throw ValidationError("vector is not tangent to Z at J (max |JV + VJ| = " +
                              std::to_string(defect) + ")");
    }
}

FibreVectorField FibreVectorField::with_finite_differences(std::function<Matrix(const Matrix&)> f,
                                                           double step)
{
    FibreVectorField field;
    field.evaluate = f;
    field.derivative = [f = std::move(f), step](const Matrix& j, const Matrix& dir) -> Matrix {
        const Matrix d = (f(j + step * dir) - f(j - step * dir)) / (2.0 * step);
        // rounding in f is amplified by 1/step; the exact derivative is skew
        return 0.5 * (d - d.transpose());
    };
    return field;
}

double inner_G(const Matrix& a, const Matrix& b)
{
    require_same_dim(a, b);
    // trace(a b) without forming the product
    return -0.5 * a.cwiseProduct(b.transpose()).sum();
}

double inner_G(const SkewEndomorphism& a, const SkewEndomorphism& b)
{
    return inner_G(a.matrix(), b.matrix());
}

Matrix elementary_skew(int dim, int a, int b)
{
    if (a < 1 || b < 1 || a > dim || b > dim) {
        throw InputError("S_ab index out of range");
    }
    Matrix s = Matrix::Zero(dim, dim);
    // S_ab e_a = e_b, S_ab e_b = -e_a
    s(b - 1, a - 1) += 1.0;
    s(a - 1, b - 1) -= 1.0;
    return s;
}

std::vector<SkewEndomorphism> make_S_basis(const EuclideanSpace& space)
{
    const int n = space.dim();
    std::vector<SkewEndomorphism> basis;
    basis.reserve(pair_count(n));
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            basis.emplace_back(elementary_skew(n, a, b));
        }
    }
    return basis;
}

std::vector<FibreTangentVector> make_AB_basis(const OrthogonalComplexStructure& J,
                                              const Matrix& frame)
{
    const int n = J.dim();
    const int m = n / 2;
    if (frame.rows() != n || frame.cols() != n) {
        throw InputError("adapted frame must be a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix of column vectors");
    }
    const double ortho_defect =
        (frame.transpose() * frame - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho_defect > tol::verification) {
        throw ValidationError("frame is not orthonormal: e_i . e_j != delta_ij (defect " +
                              std::to_string(ortho_defect) + ")");
    }
    for (int i = 0; i < m; ++i) {
        const double d = (J.matrix() * frame.col(2 * i) - frame.col(2 * i + 1)).cwiseAbs().maxCoeff();
        if (d > tol::verification) {
            throw ValidationError("frame is not J-adapted: J e_" + std::to_string(2 * i + 1) +
                                  " != e_" + std::to_string(2 * i + 2));
        }
    }

    // S_ab built on the frame: S_ab e_c = delta_ac e_b - delta_bc e_a.
    auto frame_skew = [&](int a, int b) -> Matrix {
        const auto ea = frame.col(a - 1);
        const auto eb = frame.col(b - 1);
        return eb * ea.transpose() - ea * eb.transpose();
    };

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<FibreTangentVector> out;
    out.reserve(m * (m - 1));
    for (int r = 1; r < m; ++r) {
        for (int s = r + 1; s <= m; ++s) {
            Matrix a = inv_sqrt2 * (frame_skew(2 * r - 1, 2 * s - 1) - frame_skew(2 * r, 2 * s));
            Matrix b = inv_sqrt2 * (frame_skew(2 * r - 1, 2 * s) + frame_skew(2 * r, 2 * s - 1));
            out.emplace_back(J, SkewEndomorphism(std::move(a)));
            out.emplace_back(J, SkewEndomorphism(std::move(b)));
        }
    }
    return out;
}

FibreTangentVector kaehler_K(const FibreTangentVector& V)
{
    const Matrix& j = V.base().matrix();
    return FibreTangentVector(V.base(), SkewEndomorphism(j * V.matrix(), tol::verification));
}

FibreTangentVector fibre_levi_civita(const FibreVectorField& Y, const FibreTangentVector& X)
{
    const Matrix& j = X.base().matrix();
    const Matrix dy = Y.derivative(j, X.matrix());
    Matrix out = 0.5 * (dy + j * dy * j);
    return FibreTangentVector(X.base(), SkewEndomorphism(std::move(out), tol::verification));
}

Vector wedge_coefficients(const Matrix& a)
{
    require_square(a);
    const int n = static_cast<int>(a.rows());
    Vector c(pair_count(n));
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            c(k++) = a(j, i);
        }
    }
    return c;
}

SkewEndomorphism from_wedge_coefficients(const Vector& coeffs, int dim)
{
    if (coeffs.size() != pair_count(dim)) {
        throw InputError("expected " + std::to_string(pair_count(dim)) +
                         " wedge coefficients for dimension " + std::to_string(dim));
    }
    Matrix a = Matrix::Zero(dim, dim);
    int k = 0;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            a(j, i) = coeffs(k);
            a(i, j) = -coeffs(k);
            ++k;
        }
    }
    return SkewEndomorphism(std::move(a));
}

Vector decomposable(const Vector& x, const Vector& y)
{
    if (x.size() != y.size()) {
        throw InputError("decomposable: vectors of different dimension");
    }
    const int n = static_cast<int>(x.size());
    Vector c(pair_count(n));
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            c(k++) = x(i) * y(j) - x(j) * y(i);
        }
    }
    return c;
}

}  // namespace twistor::fibre
