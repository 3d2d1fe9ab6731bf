#include "twistor/gh_classifier.hpp"

#include "twistor/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace twistor {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Tensor = std::array<Mat8, 8>;

constexpr std::array<GHClass, 9> kLattice = {
    GHClass::K,    GHClass::W1,   GHClass::W2,   GHClass::W3,    GHClass::W1W2,
    GHClass::W1W3, GHClass::W2W3, GHClass::W1W2W3, GHClass::OTHER,
};

constexpr std::array<Condition, 8> kConditions = {
    Condition::DOmega,    Condition::W1Cond,     Condition::dOmega,   Condition::N,
    Condition::deltaOmega, Condition::QuasiCond, Condition::W1W3Cond, Condition::W2W3Cond,
};

// Bits W1 = 1, W2 = 2, W3 = 4; OTHER holds the W4 bit as well.
unsigned mask(GHClass c)
{
    switch (c) {
    case GHClass::K: return 0;
    case GHClass::W1: return 1;
    case GHClass::W2: return 2;
    case GHClass::W3: return 4;
    case GHClass::W1W2: return 3;
    case GHClass::W1W3: return 5;
    case GHClass::W2W3: return 6;
    case GHClass::W1W2W3: return 7;
    case GHClass::OTHER: return 15;
    }
    return 15;
}

double tri(const Tensor& T, const Vec8& a, const Vec8& b, const Vec8& c)
{
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (a[i] != 0.0) {
            sum += a[i] * b.dot(T[i] * c);
        }
    }
    return sum;
}

struct Needs {
    bool D = false;
    bool d = false;
    bool N = false;
    bool delta = false;
};

Needs needs_for(const std::vector<Condition>& conds)
{
    Needs n;
    for (Condition c : conds) {
        switch (c) {
        case Condition::dOmega: n.d = true; break;
        case Condition::N: n.N = true; n.D = true; break;
        case Condition::deltaOmega: n.delta = true; break;
        default: n.D = true; break;
        }
    }
    return n;
}

// Frame components of the tensors at one point.
struct PointData {
    Tensor D{};
    Tensor d{};
    Tensor N_first{};
    Tensor N_both{};
    Vec8 delta = Vec8::Zero();
    Mat8 J = Mat8::Zero();
};

PointData evaluate_point(const AlmostHermitianStructure& s, const Needs& needs)
{
    const FrameAtPoint f = s.frame();
    PointData out;
    for (auto* t : {&out.D, &out.d, &out.N_first, &out.N_both}) {
        for (Mat8& m : *t) {
            m.setZero();
        }
    }
    for (int j = 0; j < 8; ++j) {
        const GTangent je = s.J(f[j]);
        for (int i = 0; i < 8; ++i) {
            out.J(i, j) = s.metric(f[i], je);
        }
    }
    auto is_h = [](int i) { return i < 4; };
    const Vec4 zero = Vec4::Zero();
    auto X = [&](int i) { return is_h(i) ? f[i].horizontal : zero; };

    if (needs.D) {
        // Only (h; h, v), (h; v, h) and (v; h, h) survive.
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                for (int k = 4; k < 8; ++k) {
                    const double v = s.D_hhv(X(i), X(j), f[k].vertical);
                    out.D[i](j, k) = v;
                    out.D[i](k, j) = -v;
                }
            }
        }
        for (int i = 4; i < 8; ++i) {
            for (int j = 0; j < 4; ++j) {
                for (int k = 0; k < 4; ++k) {
                    out.D[i](j, k) = s.D_vhh(f[i].vertical, X(j), X(k));
                }
            }
        }
    }
    if (needs.d) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                for (int k = 4; k < 8; ++k) {
                    const double v = s.d_hhv(X(i), X(j), f[k].vertical);
                    // fully antisymmetric placement
                    out.d[i](j, k) = v;
                    out.d[j](k, i) = v;
                    out.d[k](i, j) = v;
                    out.d[j](i, k) = -v;
                    out.d[i](k, j) = -v;
                    out.d[k](j, i) = -v;
                }
            }
        }
    }
    if (needs.N) {
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                for (int k = 0; k < 8; ++k) {
                    const int h = is_h(i) + is_h(j) + is_h(k);
                    if (h != 2) {
                        continue;
                    }
                    out.N_first[i](j, k) = s.nijenhuis_closed_form(
                        f[i], f[j], f[k], NijenhuisReading::SignOnFirstTerm);
                    out.N_both[i](j, k) = s.nijenhuis_closed_form(
                        f[i], f[j], f[k], NijenhuisReading::SignOnBothTerms);
                }
            }
        }
    }
    if (needs.delta) {
        for (int i = 4; i < 8; ++i) {
            out.delta[i] = s.codiff_omega(f[i]);
        }
    }
    return out;
}

struct SampleResult {
    std::map<Condition, double> sup;
    double dev_first = 0.0;
    double dev_both = 0.0;
    double n_first = 0.0;
    double n_both = 0.0;
};

SampleResult run_sample(const CurvatureOperator& R, const std::string& component,
                        const Params& params, const SamplingConfig& cfg,
                        const std::vector<Condition>& conds)
{
    params.validate();
    cfg.validate();
    parse_component(component);

    const Needs needs = needs_for(conds);
    SampleResult out;
    for (Condition c : conds) {
        out.sup[c] = 0.0;
    }
    auto raise = [&](Condition c, double v) {
        auto it = out.sup.find(c);
        if (it != out.sup.end()) {
            it->second = std::max(it->second, v);
        }
    };

    Rng rng(cfg.seed);
    std::normal_distribution<double> normal;
    auto draw = [&] {
        Vec8 v;
        for (int i = 0; i < 8; ++i) {
            v[i] = normal(rng);
        }
        return v;
    };
    const bool w1w3_plus = cfg.w1w3 == W1W3Reading::AsPrinted;

    for (int p = 0; p < cfg.num_points; ++p) {
        const ProductTwistorPoint point = random_point(rng, component);
        const AlmostHermitianStructure s(point, R, params);
        const PointData pd = evaluate_point(s, needs);
        const Tensor& D = pd.D;

        for (int q = 0; q < cfg.num_arg_triples; ++q) {
            const Vec8 a = draw();
            const Vec8 b = draw();
            const Vec8 c = draw();
            const Vec8 ja = pd.J * a;
            const Vec8 jb = pd.J * b;
            const Vec8 jc = pd.J * c;
            const double na = a.norm();
            const double nb = b.norm();
            const double nc = c.norm();
            const double n3 = 1.0 + na * nb * nc;

            if (needs.D) {
                raise(Condition::DOmega, std::abs(tri(D, a, b, c)) / n3);
                raise(Condition::W1Cond, std::abs(tri(D, a, a, b)) / (1.0 + na * na * nb));
                raise(Condition::QuasiCond, std::abs(tri(D, a, b, c) + tri(D, ja, jb, c)) / n3);
                const double w13 = w1w3_plus ? tri(D, a, a, c) + tri(D, ja, ja, c)
                                             : tri(D, a, a, c) - tri(D, ja, ja, c);
                raise(Condition::W1W3Cond, std::abs(w13) / (1.0 + na * na * nc));
                if (cfg.w2w3 == W2W3Reading::Cyclic) {
                    const double cyc = tri(D, a, b, c) - tri(D, ja, jb, c) + tri(D, b, c, a) -
                                       tri(D, jb, jc, a) + tri(D, c, a, b) - tri(D, jc, ja, b);
                    raise(Condition::W2W3Cond, std::abs(cyc) / n3);
                } else {
                    const double cyc = tri(D, a, a, c) - tri(D, ja, ja, c) + tri(D, b, b, a) -
                                       tri(D, jb, jb, a) + tri(D, c, c, b) - tri(D, jc, jc, b);
                    const double scale =
                        1.0 + std::max({na * na * nc, nb * nb * na, nc * nc * nb});
                    raise(Condition::W2W3Cond, std::abs(cyc) / scale);
                }
            }
            if (needs.d) {
                raise(Condition::dOmega, std::abs(tri(pd.d, a, b, c)) / n3);
            }
            if (needs.N) {
                const double first = tri(pd.N_first, a, b, c);
                const double both = tri(pd.N_both, a, b, c);
                const double identity = tri(D, a, jb, c) - tri(D, b, ja, c) + tri(D, ja, b, c) -
                                        tri(D, jb, a, c);
                out.n_first = std::max(out.n_first, std::abs(first) / n3);
                out.n_both = std::max(out.n_both, std::abs(both) / n3);
                out.dev_first = std::max(out.dev_first, std::abs(first - identity) / n3);
                out.dev_both = std::max(out.dev_both, std::abs(both - identity) / n3);
            }
            if (needs.delta) {
                for (const Vec8* v : {&a, &b, &c}) {
                    raise(Condition::deltaOmega, std::abs(pd.delta.dot(*v)) / (1.0 + v->norm()));
                }
            }
        }
    }
    if (needs.N) {
        raise(Condition::N, out.dev_first <= out.dev_both ? out.n_first : out.n_both);
    }
    return out;
}

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(GHClass c)
{
    switch (c) {
    case GHClass::K: return "K";
    case GHClass::W1: return "W1";
    case GHClass::W2: return "W2";
    case GHClass::W3: return "W3";
    case GHClass::W1W2: return "W1W2";
    case GHClass::W1W3: return "W1W3";
    case GHClass::W2W3: return "W2W3";
    case GHClass::W1W2W3: return "W1W2W3";
    case GHClass::OTHER: return "OTHER";
    }
    return "OTHER";
}

GHClass parse_class(const std::string& name)
{
    for (GHClass c : kLattice) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw InputError("unknown Gray-Hervella class '" + name + "'");
}

const std::array<GHClass, 9>& lattice_order() { return kLattice; }

bool lattice_leq(GHClass a, GHClass b) { return (mask(a) & ~mask(b)) == 0; }

std::string to_string(Condition c)
{
    switch (c) {
    case Condition::DOmega: return "DΩ";
    case Condition::W1Cond: return "W1-cond";
    case Condition::dOmega: return "dΩ";
    case Condition::N: return "N";
    case Condition::deltaOmega: return "δΩ";
    case Condition::QuasiCond: return "quasi-cond";
    case Condition::W1W3Cond: return "W1W3-cond";
    case Condition::W2W3Cond: return "W2W3-cond";
    }
    return "";
}

Condition parse_condition(const std::string& name)
{
    for (Condition c : kConditions) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw InputError("unknown condition '" + name + "'");
}

const std::array<Condition, 8>& all_conditions() { return kConditions; }

std::vector<Condition> requirements(GHClass c)
{
    switch (c) {
    case GHClass::K: return {Condition::DOmega};
    case GHClass::W1: return {Condition::W1Cond};
    case GHClass::W2: return {Condition::dOmega};
    case GHClass::W3: return {Condition::N, Condition::deltaOmega};
    case GHClass::W1W2: return {Condition::QuasiCond};
    case GHClass::W1W3: return {Condition::W1W3Cond, Condition::deltaOmega};
    case GHClass::W2W3: return {Condition::W2W3Cond, Condition::deltaOmega};
    case GHClass::W1W2W3: return {Condition::deltaOmega};
    case GHClass::OTHER: return {};
    }
    return {};
}

bool possible_class(GHClass c, int n)
{
    if (n <= 2) {
        return c == GHClass::K || c == GHClass::W3 || c == GHClass::OTHER;
    }
    return c != GHClass::K && c != GHClass::W3;
}

std::string to_string(W2W3Reading r)
{
    return r == W2W3Reading::Cyclic ? "cyclic" : "as-printed";
}

std::string to_string(W1W3Reading r)
{
    return r == W1W3Reading::Standard ? "standard" : "as-printed";
}

void SamplingConfig::validate() const
{
    if (num_points <= 0 || num_arg_triples <= 0) {
        throw InputError("sample counts must be positive");
    }
    if (!(tol > 0.0)) {
        throw InputError("tol must be positive");
    }
}

bool ClassReport::passes(GHClass c) const
{
    for (Condition cond : requirements(c)) {
        if (!(residuals.at(cond) <= config.tol)) {
            return false;
        }
    }
    return true;
}

double residual(Condition cond, const CurvatureOperator& R, const std::string& component,
                const Params& params, const SamplingConfig& cfg)
{
    return run_sample(R, component, params, cfg, {cond}).sup.at(cond);
}

std::map<Condition, double> residuals(const std::vector<Condition>& conds,
                                      const CurvatureOperator& R, const std::string& component,
                                      const Params& params, const SamplingConfig& cfg)
{
    return run_sample(R, component, params, cfg, conds).sup;
}

double class_residual(GHClass c, const CurvatureOperator& R, const std::string& component,
                      const Params& params, const SamplingConfig& cfg)
{
    const std::vector<Condition> conds = requirements(c);
    if (conds.empty()) {
        run_sample(R, component, params, cfg, conds);
        return 0.0;
    }
    double worst = 0.0;
    for (const auto& [cond, value] : run_sample(R, component, params, cfg, conds).sup) {
        worst = std::max(worst, value);
    }
    return worst;
}

ClassReport classify(const CurvatureOperator& R, const std::string& component,
                     const Params& params, const SamplingConfig& cfg)
{
    const std::vector<Condition> conds(kConditions.begin(), kConditions.end());
    const SampleResult sample = run_sample(R, component, params, cfg, conds);

    ClassReport report;
    report.residuals = sample.sup;
    report.component = component;
    report.params = params;
    report.config = cfg;
    report.strict = decompose(R).strict;
    report.nijenhuis.deviation_sign_on_first = sample.dev_first;
    report.nijenhuis.deviation_sign_on_both = sample.dev_both;
    report.nijenhuis.used = sample.dev_first <= sample.dev_both
                                ? NijenhuisReading::SignOnFirstTerm
                                : NijenhuisReading::SignOnBothTerms;

    for (GHClass c : kLattice) {
        if (report.passes(c)) {
            report.detected = c;
            break;
        }
    }

    if (!report.strict) {
        report.flags.push_back("non-strict: Weyl blocks are not traceless");
    }
    for (GHClass c : kLattice) {
        if (lattice_leq(report.detected, c) && !report.passes(c)) {
            report.flags.push_back("lattice-non-monotone: " + to_string(c) + " fails above " +
                                   to_string(report.detected));
        }
    }
    if (report.strict && !possible_class(report.detected, params.n)) {
        report.flags.push_back("corollary-violation: " + to_string(report.detected) +
                               " is not a possible class for n = " + std::to_string(params.n));
    }
    return report;
}

nlohmann::ordered_json to_json(const ClassReport& r)
{
    nlohmann::ordered_json doc;
    doc["component"] = r.component;
    doc["n"] = r.params.n;
    doc["t1"] = r.params.t1;
    doc["t2"] = r.params.t2;
    doc["config"] = {
        {"seed", r.config.seed},
        {"samples", r.config.num_points},
        {"triples", r.config.num_arg_triples},
        {"tol", r.config.tol},
        {"w1w3_reading", to_string(r.config.w1w3)},
        {"w2w3_reading", to_string(r.config.w2w3)},
    };
    nlohmann::ordered_json res;
    for (Condition c : kConditions) {
        res[to_string(c)] = r.residuals.at(c);
    }
    doc["residuals"] = res;
    doc["detected"] = to_string(r.detected);
    auto passing = nlohmann::ordered_json::array();
    for (GHClass c : kLattice) {
        if (r.passes(c)) {
            passing.push_back(to_string(c));
        }
    }
    doc["passing"] = passing;
    doc["strict"] = r.strict;
    doc["flags"] = r.flags;
    doc["notes"] = {
        {"nijenhuis",
         {
             {"reading", to_string(r.nijenhuis.used)},
             {"deviation", {{"sign-on-first-term", r.nijenhuis.deviation_sign_on_first},
                            {"sign-on-both-terms", r.nijenhuis.deviation_sign_on_both}}},
         }},
    };
    return doc;
}

std::string csv_header()
{
    std::string h = "component,n,t1,t2,seed,samples,triples,tol";
    for (Condition c : kConditions) {
        h += "," + to_string(c);
    }
    h += ",detected,strict,flags";
    return h;
}

std::string to_csv_row(const ClassReport& r)
{
    std::ostringstream out;
    out << r.component << ',' << r.params.n << ',' << format_double(r.params.t1) << ','
        << format_double(r.params.t2) << ',' << r.config.seed << ',' << r.config.num_points
        << ',' << r.config.num_arg_triples << ',' << format_double(r.config.tol);
    for (Condition c : kConditions) {
        out << ',' << format_double(r.residuals.at(c));
    }
    std::string flags;
    for (const std::string& f : r.flags) {
        flags += (flags.empty() ? "" : ";") + f;
    }
    out << ',' << to_string(r.detected) << ',' << (r.strict ? "true" : "false") << ",\"" << flags
        << '"';
    return out.str();
}

}  // namespace twistor
