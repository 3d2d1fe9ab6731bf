#include "twistor/gh_classifier.hpp"

#include "twistor/sampling.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace twistor {

namespace {

constexpr double kBreakThreshold = 1e-3;
constexpr double kPerturbation = 0.1;

std::string num(double v)
{
    std::ostringstream out;
    out << v;
    return out.str();
}

double operator_norm(const Mat6& m)
{
    return Eigen::SelfAdjointEigenSolver<Mat6>(m).eigenvalues().cwiseAbs().maxCoeff();
}

double spectral_norm(const Mat3& m)
{
    return Eigen::JacobiSVD<Mat3>(m).singularValues()(0);
}

double noise_scale(const CurvatureOperator& R)
{
    return kPerturbation * std::max(1.0, operator_norm(R.matrix()));
}

// Operator-norm 0.1 max(1, |R|) changes of one hypothesis at a time.
CurvatureOperator add_wplus_noise(const CurvatureOperator& R, Rng& rng)
{
    CurvatureBlocks b = decompose(R);
    const Mat3 w = random_symmetric(rng, true);
    b.Wplus += (noise_scale(R) / spectral_norm(w)) * w;
    return compose(b);
}

CurvatureOperator add_b_noise(const CurvatureOperator& R, Rng& rng)
{
    CurvatureBlocks b = decompose(R);
    const Mat3 n = random_matrix(rng);
    b.B += (noise_scale(R) / spectral_norm(n)) * n;
    return compose(b);
}

CurvatureOperator shift_s(const CurvatureOperator& R)
{
    CurvatureBlocks b = decompose(R);
    b.s += 12.0 * noise_scale(R);
    return compose(b);
}

struct Suite {
    const SamplingConfig& cfg;
    Rng rng;
    TheoremResult result;

    std::string where(const std::string& model, const std::string& comp, int n, double t1) const
    {
        return model + " on " + comp + ", n=" + std::to_string(n) + ", t1=" + num(t1);
    }

    void record(std::string description, std::string expectation, double value, bool passed,
                bool supplementary = false)
    {
        result.evidence.push_back(
            {std::move(description), std::move(expectation), value, passed, supplementary});
    }

    void attains(const std::string& model, const CurvatureOperator& R, const std::string& comp,
                 int n, double t1, GHClass c, bool supplementary = false)
    {
        const double r = class_residual(c, R, comp, {t1, 1.0, n}, cfg);
        record(to_string(c) + " conditions, " + where(model, comp, n, t1), "<= tol", r,
               r <= cfg.tol, supplementary);
    }

    void misses(const std::string& model, const CurvatureOperator& R, const std::string& comp,
                int n, double t1, GHClass c, double threshold = kBreakThreshold)
    {
        const double r = class_residual(c, R, comp, {t1, 1.0, n}, cfg);
        record(to_string(c) + " conditions, " + where(model, comp, n, t1), "> " + num(threshold),
               r, r > threshold);
    }

    void condition_breaks(const std::string& model, const CurvatureOperator& R,
                          const std::string& comp, int n, double t1, Condition cond)
    {
        const double r = residuals({cond}, R, comp, {t1, 1.0, n}, cfg).at(cond);
        record(to_string(cond) + ", " + where(model, comp, n, t1), "> " + num(kBreakThreshold), r,
               r > kBreakThreshold);
    }

    // W+ noise, B noise and a 10% shift of t1 each break a +- witness.
    void perturbations(const std::string& model, const CurvatureOperator& R, int n, double t1,
                       GHClass c)
    {
        misses(model + " + W+ noise", add_wplus_noise(R, rng), "+-", n, t1, c);
        misses(model + " + B noise", add_b_noise(R, rng), "+-", n, t1, c);
        misses(model, R, "+-", n, 1.1 * t1, c);
        misses(model, R, "+-", n, 0.9 * t1, c);
    }
};

Mat3 random_weyl(Rng& rng) { return random_symmetric(rng, true); }

// J = sqrt2 (s1+, s2+) on ++.
ProductTwistorPoint counterexample_point()
{
    return {sphere_to_J(TwoVector::s_plus(1), Orientation::Plus),
            sphere_to_J(TwoVector::s_plus(2), Orientation::Plus)};
}

double unit_normalized(const AlmostHermitianStructure& s, double value,
                       std::initializer_list<GTangent> args)
{
    double prod = 1.0;
    for (const GTangent& a : args) {
        prod *= std::sqrt(s.metric(a, a));
    }
    return std::abs(value) / (1.0 + prod);
}

// delta Omega at J = sqrt2 (s1+, s2+) along V2 = s3+, where J2 V2 is parallel to J1.
void delta_counterexample(Suite& suite, const std::string& model, const CurvatureOperator& R,
                          int n, double t1)
{
    const AlmostHermitianStructure s(counterexample_point(), R, {t1, 1.0, n});
    const GTangent V =
        GTangent::vertical_only(s.make_vertical(Mat4::Zero(), endo(TwoVector::s_plus(3))));
    const double r = unit_normalized(s, s.codiff_omega(V), {V});
    suite.record("δΩ(V) at J = √2(s1+, s2+), V2 = s3+, " + suite.where(model, "++", n, t1),
                 "> " + num(kBreakThreshold), r, r > kBreakThreshold);
}

using Body = std::function<void(Suite&)>;

struct Theorem {
    const char* id;
    const char* statement;
    Body body;
};

const std::vector<Theorem>& theorems()
{
    static const std::vector<Theorem> list = {
        {"4.2a", "n=1,2 on G++ is never Kähler",
         [](Suite& S) {
             for (int n : {1, 2}) {
                 S.misses("flat", model("flat", {}), "++", n, 1.0, GHClass::K, 0.1);
                 S.misses("constant_curvature(12)", model("constant_curvature", {12.0}), "++",
                          n, 0.5, GHClass::K, 0.1);
                 S.misses("constant_curvature(-12)", model("constant_curvature", {-12.0}), "++",
                          n, 1.0, GHClass::K, 0.1);

                 const CurvatureOperator R = model("constant_curvature", {12.0});
                 const AlmostHermitianStructure s(counterexample_point(), R, {0.5, 1.0, n});
                 const GTangent V = GTangent::vertical_only(
                     s.make_vertical(Mat4::Zero(), endo(TwoVector::s_plus(1))));
                 const GTangent E1 = GTangent::horizontal_lift(Vec4::Unit(0));
                 const GTangent E3 = GTangent::horizontal_lift(Vec4::Unit(2));
                 const double r =
                     unit_normalized(s, s.cov_deriv_omega(V, E1, E3), {V, E1, E3});
                 S.record("(D_V Ω)(E1, E3) at J = √2(s1+, s2+), V2 = s1+, " +
                              S.where("constant_curvature(12)", "++", n, 0.5),
                          "> " + num(kBreakThreshold), r, r > kBreakThreshold);
             }
         }},
        {"4.2b", "n=1,2 on G+- is Kähler iff Einstein, s > 0, anti-self-dual, W- = -(s/12) Id, t1 = 6/s",
         [](Suite& S) {
             for (int n : {1, 2}) {
                 for (double s : {12.0, 6.0}) {
                     const CurvatureOperator R = model("kaehler_witness", {s});
                     const std::string name = "kaehler_witness(" + num(s) + ")";
                     S.attains(name, R, "+-", n, 6.0 / s, GHClass::K);
                     if (s == 12.0) {
                         S.perturbations(name, R, n, 6.0 / s, GHClass::K);
                     }
                 }
                 ModelParams p{12.0};
                 p.Wminus = random_weyl(S.rng);
                 S.misses("einstein_asd(12, traceless W-)", model("einstein_asd", p), "+-", n,
                          0.5, GHClass::K);
             }
         }},
        {"4.3a", "n=1,2 on G++ is W3 iff anti-self-dual and scalar flat",
         [](Suite& S) {
             for (int n : {1, 2}) {
                 const CurvatureOperator flat = model("flat", {});
                 ModelParams p;
                 p.Wminus = random_weyl(S.rng);
                 const CurvatureOperator asd = model("asd_ricci_flat", p);
                 S.attains("flat", flat, "++", n, 1.0, GHClass::W3);
                 S.attains("asd_ricci_flat", asd, "++", n, 0.7, GHClass::W3);
                 S.condition_breaks("flat with s shifted", shift_s(flat), "++", n, 1.0,
                                    Condition::deltaOmega);
                 S.misses("asd_ricci_flat + W+ noise", add_wplus_noise(asd, S.rng), "++", n, 0.7,
                          GHClass::W3);
             }
         }},
        {"4.3b", "n=1,2 on G+- is W3 iff anti-self-dual",
         [](Suite& S) {
             for (int n : {1, 2}) {
                 ModelParams p{12.0 * std::normal_distribution<double>()(S.rng), random_matrix(S.rng),
                               random_weyl(S.rng)};
                 const CurvatureOperator R = model("asd_general", p);
                 S.attains("asd_general", R, "+-", n, 1.0, GHClass::W3);
                 S.attains("einstein_asd (asd_general with B = 0)",
                           model("einstein_asd", {p.s, Mat3::Zero(), p.Wminus}), "+-", n, 1.0,
                           GHClass::W3, true);
                 S.misses("asd_general + W+ noise", add_wplus_noise(R, S.rng), "+-", n, 1.0,
                          GHClass::W3);
             }
         }},
        {"4.4a", "n=3,4 on G++ is W1+W2+W3 iff anti-self-dual and scalar flat",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 const CurvatureOperator flat = model("flat", {});
                 ModelParams p;
                 p.Wminus = random_weyl(S.rng);
                 const CurvatureOperator asd = model("asd_ricci_flat", p);
                 S.attains("flat", flat, "++", n, 1.0, GHClass::W1W2W3);
                 S.attains("asd_ricci_flat", asd, "++", n, 0.7, GHClass::W1W2W3);
                 S.condition_breaks("flat with s shifted", shift_s(flat), "++", n, 1.0,
                                    Condition::deltaOmega);
                 S.misses("asd_ricci_flat + W+ noise", add_wplus_noise(asd, S.rng), "++", n, 0.7,
                          GHClass::W1W2W3);
             }
         }},
        {"4.4b", "n=3,4 on G+- is W1+W2+W3 iff anti-self-dual",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 ModelParams p{12.0 * std::normal_distribution<double>()(S.rng), random_matrix(S.rng),
                               random_weyl(S.rng)};
                 const CurvatureOperator R = model("asd_general", p);
                 S.attains("asd_general", R, "+-", n, 1.0, GHClass::W1W2W3);
                 S.attains("einstein_asd (asd_general with B = 0)",
                           model("einstein_asd", {p.s, Mat3::Zero(), p.Wminus}), "+-", n, 1.0,
                           GHClass::W1W2W3, true);
                 S.condition_breaks("asd_general + W+ noise", add_wplus_noise(R, S.rng), "+-", n,
                                    1.0, Condition::deltaOmega);
             }
         }},
        {"4.5a", "n=3,4 on G++ is W1+W2 iff anti-self-dual and Ricci flat",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 ModelParams p;
                 p.Wminus = random_weyl(S.rng);
                 const CurvatureOperator asd = model("asd_ricci_flat", p);
                 S.attains("flat", model("flat", {}), "++", n, 1.0, GHClass::W1W2);
                 S.attains("asd_ricci_flat", asd, "++", n, 0.7, GHClass::W1W2);
                 S.misses("asd_ricci_flat with s shifted", shift_s(asd), "++", n, 0.7,
                          GHClass::W1W2);
                 S.misses("asd_ricci_flat + W+ noise", add_wplus_noise(asd, S.rng), "++", n, 0.7,
                          GHClass::W1W2);
                 S.misses("asd_ricci_flat + B noise", add_b_noise(asd, S.rng), "++", n, 0.7,
                          GHClass::W1W2);
             }
         }},
        {"4.5b", "n=3,4 on G+- is W1+W2 iff Einstein, anti-self-dual, W- = -(s/12) Id",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 for (double s : {12.0, -12.0}) {
                     const ModelParams p{s, Mat3::Zero(), -(s / 12.0) * Mat3::Identity()};
                     const CurvatureOperator R = model("einstein_asd", p);
                     const std::string name = "einstein_asd(" + num(s) + ", W- = -(s/12) Id)";
                     S.attains(name, R, "+-", n, 0.7, GHClass::W1W2);
                     S.misses(name + " + W+ noise", add_wplus_noise(R, S.rng), "+-", n, 0.7,
                              GHClass::W1W2);
                     S.misses(name + " + B noise", add_b_noise(R, S.rng), "+-", n, 0.7,
                              GHClass::W1W2);
                 }
                 ModelParams p{12.0};
                 p.Wminus = random_weyl(S.rng);
                 S.misses("einstein_asd(12, traceless W-)", model("einstein_asd", p), "+-", n,
                          0.7, GHClass::W1W2);
             }
         }},
        {"4.6a", "n=3,4 on G++ is never W1+W3",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 const CurvatureOperator R = model("constant_curvature", {12.0});
                 S.misses("constant_curvature(12)", R, "++", n, 0.25, GHClass::W1W3);
                 S.misses("flat", model("flat", {}), "++", n, 1.0, GHClass::W1W3);
                 delta_counterexample(S, "constant_curvature(12)", R, n, 0.25);
             }
         }},
        {"4.6b", "n=3,4 on G+- is W1+W3 iff Einstein, s > 0, anti-self-dual, t1 = 3/s",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 for (double s : {12.0, 6.0}) {
                     const CurvatureOperator R = model("constant_curvature", {s});
                     const std::string name = "constant_curvature(" + num(s) + ")";
                     S.attains(name, R, "+-", n, 3.0 / s, GHClass::W1W3);
                     if (s == 12.0) {
                         S.perturbations(name, R, n, 3.0 / s, GHClass::W1W3);
                     }
                 }
             }
         }},
        {"4.7a", "n=3,4 on G++ is never W2+W3",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 const CurvatureOperator R = model("constant_curvature", {-12.0});
                 S.misses("constant_curvature(-12)", R, "++", n, 0.5, GHClass::W2W3);
                 S.misses("flat", model("flat", {}), "++", n, 1.0, GHClass::W2W3);
                 delta_counterexample(S, "constant_curvature(-12)", R, n, 0.5);
             }
         }},
        {"4.7b", "n=3,4 on G+- is W2+W3 iff Einstein, s < 0, anti-self-dual, t1 = -6/s",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 for (double s : {-12.0, -6.0}) {
                     const CurvatureOperator R = model("constant_curvature", {s});
                     const std::string name = "constant_curvature(" + num(s) + ")";
                     S.attains(name, R, "+-", n, -6.0 / s, GHClass::W2W3);
                     if (s == -12.0) {
                         S.perturbations(name, R, n, -6.0 / s, GHClass::W2W3);
                     }
                 }
             }
         }},
        {"4.8a", "n=3,4 on G++ is never W1",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 const CurvatureOperator R = model("w1_witness", {12.0});
                 S.misses("w1_witness(12)", R, "++", n, 0.25, GHClass::W1);
                 S.misses("flat", model("flat", {}), "++", n, 1.0, GHClass::W1);
                 delta_counterexample(S, "w1_witness(12)", R, n, 0.25);
             }
         }},
        {"4.8b", "n=3,4 on G+- is W1 iff Einstein, s > 0, anti-self-dual, W- = -(s/12) Id, t1 = 3/s",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 for (double s : {12.0, 6.0}) {
                     const CurvatureOperator R = model("w1_witness", {s});
                     const std::string name = "w1_witness(" + num(s) + ")";
                     S.attains(name, R, "+-", n, 3.0 / s, GHClass::W1);
                     if (s == 12.0) {
                         S.perturbations(name, R, n, 3.0 / s, GHClass::W1);
                     }
                 }
                 S.misses("constant_curvature(12)", model("constant_curvature", {12.0}), "+-", n,
                          0.25, GHClass::W1);
             }
         }},
        {"4.9a", "n=3,4 on G++ is never W2",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 const CurvatureOperator R = model("w2_witness", {-12.0});
                 S.misses("w2_witness(-12)", R, "++", n, 0.5, GHClass::W2);
                 S.misses("flat", model("flat", {}), "++", n, 1.0, GHClass::W2);
                 delta_counterexample(S, "w2_witness(-12)", R, n, 0.5);
             }
         }},
        {"4.9b", "n=3,4 on G+- is W2 iff Einstein, s < 0, anti-self-dual, W- = -(s/12) Id, t1 = -6/s",
         [](Suite& S) {
             for (int n : {3, 4}) {
                 for (double s : {-12.0, -6.0}) {
                     const CurvatureOperator R = model("w2_witness", {s});
                     const std::string name = "w2_witness(" + num(s) + ")";
                     S.attains(name, R, "+-", n, -6.0 / s, GHClass::W2);
                     if (s == -12.0) {
                         S.perturbations(name, R, n, -6.0 / s, GHClass::W2);
                     }
                 }
                 S.misses("constant_curvature(-12)", model("constant_curvature", {-12.0}), "+-",
                          n, 0.5, GHClass::W2);
             }
         }},
    };
    return list;
}

}  // namespace

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Theorem& t : theorems()) {
            out.emplace_back(t.id);
        }
        return out;
    }();
    return ids;
}

TheoremResult verify_theorem(const std::string& id, const SamplingConfig& cfg)
{
    cfg.validate();
    for (const Theorem& t : theorems()) {
        if (id != t.id) {
            continue;
        }
        Suite suite{cfg, Rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL), {}};
        suite.result.id = t.id;
        suite.result.statement = t.statement;
        t.body(suite);
        suite.result.passed = std::all_of(
            suite.result.evidence.begin(), suite.result.evidence.end(),
            [](const Evidence& e) { return e.passed || e.supplementary; });
        return suite.result;
    }
    throw InputError("unknown theorem id '" + id + "'");
}

nlohmann::ordered_json to_json(const TheoremResult& r)
{
    nlohmann::ordered_json doc;
    doc["id"] = r.id;
    doc["statement"] = r.statement;
    doc["passed"] = r.passed;
    auto rows = nlohmann::ordered_json::array();
    for (const Evidence& e : r.evidence) {
        nlohmann::ordered_json row;
        row["check"] = e.description;
        row["expect"] = e.expectation;
        row["value"] = e.value;
        row["passed"] = e.passed;
        if (e.supplementary) {
            row["supplementary"] = true;
        }
        rows.push_back(std::move(row));
    }
    doc["evidence"] = rows;
    return doc;
}

}  // namespace twistor
