#include "twistor/oracles.hpp"

#include "twistor/fibre_algebra.hpp"
#include "twistor/sampling.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <sstream>

namespace twistor {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kFiniteDifferenceTol = 1e-6;

struct Tracker {
    OracleResult result;

    void update(double residual, const std::string& witness)
    {
        ++result.trials;
        if (residual > result.max_residual || result.witness.empty()) {
            result.max_residual = std::max(result.max_residual, residual);
            result.witness = witness;
        }
    }
};

Tracker start(const char* name, double tolerance)
{
    Tracker t;
    t.result.name = name;
    t.result.tolerance = tolerance;
    return t;
}

Mat6 random_symmetric6(Rng& rng)
{
    std::normal_distribution<double> normal;
    Mat6 m;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            m(i, j) = normal(rng);
        }
    }
    return 0.5 * (m + m.transpose());
}

Vec4 random_vec4(Rng& rng)
{
    std::normal_distribution<double> normal;
    return Vec4(normal(rng), normal(rng), normal(rng), normal(rng));
}

Mat4 random_skew4(Rng& rng)
{
    std::normal_distribution<double> normal;
    Mat4 a;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            a(i, j) = normal(rng);
        }
    }
    return a - a.transpose();
}

double random_t(Rng& rng) { return std::uniform_real_distribution<double>(0.2, 2.0)(rng); }

struct Config {
    std::unique_ptr<AlmostHermitianStructure> s;
    std::string witness;
};

// One random (point, R, t) for a fixed component and n.
Config random_config(Rng& rng, const std::string& component, int n, std::uint64_t seed, int trial)
{
    const ProductTwistorPoint p = random_point(rng, component);
    const CurvatureOperator R(random_symmetric6(rng));
    const double t1 = random_t(rng);
    const double t2 = random_t(rng);
    std::ostringstream w;
    w << "seed=" << seed << " component=" << component << " n=" << n << " trial=" << trial
      << " t1=" << t1 << " t2=" << t2;
    return {std::make_unique<AlmostHermitianStructure>(p, R, Params{t1, t2, n}), w.str()};
}

double norm(const AlmostHermitianStructure& s, const GTangent& a)
{
    return std::sqrt(s.metric(a, a));
}

// Runs `body` over trials x components x n = 1..4.
template <typename Body>
void over_configs(const OracleOptions& opt, Rng& rng, Body body)
{
    for (const std::string& component : opt.components) {
        for (int n = 1; n <= 4; ++n) {
            for (int k = 0; k < opt.trials; ++k) {
                Config c = random_config(rng, component, n, opt.seed, k);
                body(*c.s, c.witness);
            }
        }
    }
}

fibre::Matrix random_orthogonal(Rng& rng, int dim)
{
    std::normal_distribution<double> normal;
    fibre::Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<fibre::Matrix> qr(a);
    return qr.householderQ();
}

fibre::Matrix random_skew(Rng& rng, int dim)
{
    std::normal_distribution<double> normal;
    fibre::Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = normal(rng);
        }
    }
    return a - a.transpose();
}

}  // namespace

OracleResult check_ext_deriv(const OracleOptions& opt)
{
    Tracker t = start("dΩ = cyclic sum of DΩ", kIdentityTol);
    Rng rng(opt.seed);
    over_configs(opt, rng, [&](const AlmostHermitianStructure& s, const std::string& w) {
        const FrameAtPoint f = s.frame();
        const GTangent A = random_tangent(rng, f);
        const GTangent B = random_tangent(rng, f);
        const GTangent C = random_tangent(rng, f);
        const double cyclic =
            s.cov_deriv_omega(A, B, C) + s.cov_deriv_omega(B, C, A) + s.cov_deriv_omega(C, A, B);
        const double scale = 1.0 + norm(s, A) * norm(s, B) * norm(s, C);
        t.update(std::abs(s.ext_deriv_omega(A, B, C) - cyclic) / scale, w);
    });
    return t.result;
}

OracleResult check_codiff(const OracleOptions& opt)
{
    Tracker t = start("δΩ = -trace DΩ", kIdentityTol);
    Rng rng(opt.seed + 1);
    over_configs(opt, rng, [&](const AlmostHermitianStructure& s, const std::string& w) {
        const GTangent A = random_tangent(rng, s.frame());
        const double scale = 1.0 + norm(s, A);
        t.update(std::abs(s.codiff_omega(A) - s.codiff_frame_trace(A)) / scale, w);
    });
    return t.result;
}

OracleResult check_nijenhuis(const OracleOptions& opt)
{
    Tracker t = start("N-identity", kIdentityTol);
    Rng rng(opt.seed + 2);
    over_configs(opt, rng, [&](const AlmostHermitianStructure& s, const std::string& w) {
        const FrameAtPoint f = s.frame();
        const GTangent A = random_tangent(rng, f);
        const GTangent B = random_tangent(rng, f);
        const GTangent C = random_tangent(rng, f);
        const double closed =
            s.nijenhuis_closed_form(A, B, C, NijenhuisReading::SignOnFirstTerm, opt.signs);
        const double scale = 1.0 + norm(s, A) * norm(s, B) * norm(s, C);
        t.update(std::abs(closed - s.nijenhuis(A, B, C)) / scale, w);
    });
    return t.result;
}

OracleResult check_restriction(const OracleOptions& opt)
{
    Tracker t = start("restriction to the first factor", kIdentityTol);
    Rng rng(opt.seed + 3);
    std::normal_distribution<double> normal;
    over_configs(opt, rng, [&](const AlmostHermitianStructure& s, const std::string& w) {
        const FrameAtPoint f = s.frame();
        auto first_factor = [&] {
            GTangent a;
            for (int i = 0; i < 6; ++i) {
                a = a + normal(rng) * f[i];
            }
            return a;
        };
        const GTangent A = first_factor();
        const GTangent B = first_factor();
        const GTangent C = first_factor();
        const double scale = 1.0 + norm(s, A) * norm(s, B) * norm(s, C);
        double worst = 0.0;
        for (RestrictionKind kind :
             {RestrictionKind::Metric, RestrictionKind::CovariantDerivative,
              RestrictionKind::ExteriorDerivative, RestrictionKind::Codifferential}) {
            worst = std::max(worst, restriction_check(s, kind, A, B, C) / scale);
        }
        t.update(worst, w);
    });
    return t.result;
}

OracleResult check_curvature_bracket(const OracleOptions& opt)
{
    Tracker t = start("G(R(X,Y)a, b) = g(R([a,b]^) X, Y)", kIdentityTol);
    Rng rng(opt.seed + 4);
    const int trials = std::max(opt.trials, 1) * 10;
    for (int k = 0; k < trials; ++k) {
        const CurvatureOperator R(random_symmetric6(rng));
        const Mat4 a = random_skew4(rng);
        const Mat4 b = random_skew4(rng);
        const Vec4 X = random_vec4(rng);
        const Vec4 Y = random_vec4(rng);
        const Mat4 r = curvature_endo(R, X, Y);
        const double lhs = fibre::inner_G(fibre::Matrix(r * a - a * r), fibre::Matrix(b));
        const double rhs = R.pair(wedge(Mat4(a * b - b * a)), wedge(X, Y));
        const double scale = 1.0 + a.norm() * b.norm() * X.norm() * Y.norm();
        t.update(std::abs(lhs - rhs) / scale,
                 "seed=" + std::to_string(opt.seed) + " trial=" + std::to_string(k));
    }
    return t.result;
}

OracleResult check_coupling(const OracleOptions& opt)
{
    Tracker t = start("H(R(X,Y)J, V) coupling", kIdentityTol);
    Rng rng(opt.seed + 5);
    over_configs(opt, rng, [&](const AlmostHermitianStructure& s, const std::string& w) {
        const ProductTwistorPoint& p = s.point();
        const VerticalVector V = random_vertical(rng, p);
        const Vec4 X = random_vec4(rng);
        const Vec4 Y = random_vec4(rng);
        const Mat4 r = curvature_endo(s.curvature(), X, Y);
        const Mat4& j1 = p.J1.matrix();
        const Mat4& j2 = p.J2.matrix();
        const Params& tp = s.params();
        const double direct =
            tp.t1 * fibre::inner_G(fibre::Matrix(r * j1 - j1 * r), fibre::Matrix(V.V1())) +
            tp.t2 * fibre::inner_G(fibre::Matrix(r * j2 - j2 * r), fibre::Matrix(V.V2()));
        const double closed = coupling(s.curvature(), X, Y, p, V, tp.t1, tp.t2);
        const double scale =
            1.0 + X.norm() * Y.norm() * norm(s, GTangent::vertical_only(V));
        t.update(std::abs(direct - closed) / scale, w);
    });
    return t.result;
}

OracleResult check_fibre_kaehler(const OracleOptions& opt)
{
    Tracker t = start("fibre DK = 0", kFiniteDifferenceTol);
    Rng rng(opt.seed + 6);
    constexpr int kConfigsPerDim = 20;
    for (int dim : {4, 6}) {
        for (int k = 0; k < kConfigsPerDim; ++k) {
            const fibre::Matrix Q = random_orthogonal(rng, dim);
            const fibre::Matrix J0 = fibre::OrthogonalComplexStructure::standard(dim).matrix();
            const fibre::OrthogonalComplexStructure J(Q * J0 * Q.transpose());
            const fibre::Matrix& j = J.matrix();

            const fibre::Matrix raw = random_skew(rng, dim);
            const fibre::FibreTangentVector X(
                J, fibre::SkewEndomorphism(0.5 * (raw + j * raw * j)));

            // A nonlinear tangent field Y and the field K Y.
            const fibre::Matrix W0 = random_skew(rng, dim);
            const fibre::Matrix W1 = random_skew(rng, dim);
            const fibre::Matrix W2 = random_skew(rng, dim);
            auto Y = [=](const fibre::Matrix& L) -> fibre::Matrix {
                const fibre::Matrix w = W0 + L * W1 * L.transpose() + L * W2 * L;
                return 0.5 * (w + L * w * L);
            };
            auto KY = [=](const fibre::Matrix& L) -> fibre::Matrix { return L * Y(L); };

            const auto DY = fibre::fibre_levi_civita(
                fibre::FibreVectorField::with_finite_differences(Y), X);
            const auto DKY = fibre::fibre_levi_civita(
                fibre::FibreVectorField::with_finite_differences(KY), X);
            const fibre::Matrix residual = DKY.matrix() - j * DY.matrix();
            t.update(residual.cwiseAbs().maxCoeff(), "seed=" + std::to_string(opt.seed) +
                                                         " dim=" + std::to_string(dim) +
                                                         " config=" + std::to_string(k));
        }
    }
    return t.result;
}

std::vector<OracleResult> run_oracles(const OracleOptions& opt)
{
    return {check_ext_deriv(opt),     check_codiff(opt),          check_nijenhuis(opt),
            check_restriction(opt),   check_curvature_bracket(opt), check_coupling(opt),
            check_fibre_kaehler(opt)};
}

}  // namespace twistor
