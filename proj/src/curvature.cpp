#include "twistor/curvature.hpp"

#include <cmath>
#include <string>

namespace twistor {

namespace {

constexpr double kSymmetryTol = 1e-12;

double max_asymmetry(const Mat6& m) { return (m - m.transpose()).cwiseAbs().maxCoeff(); }

bool is_zero(const Mat3& m) { return m.cwiseAbs().maxCoeff() == 0.0; }

void require_anticommute(const Mat4& J, const Mat4& V, const char* which)
{
    const double defect = (J * V + V * J).cwiseAbs().maxCoeff();
    if (defect > tol::verification) {
        throw ValidationError(std::string(which) + " is not vertical: |JV + VJ| = " +
                              std::to_string(defect));
    }
}

template <int N>
Eigen::Matrix<double, N, N> read_square(const nlohmann::json& node, const std::string& field)
{
    if (!node.is_array() || node.size() != N) {
        throw InputError("field '" + field + "' must be a " + std::to_string(N) + "x" +
                         std::to_string(N) + " array");
    }
    Eigen::Matrix<double, N, N> m;
    for (int i = 0; i < N; ++i) {
        const auto& row = node[i];
        const std::string row_name = field + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != N) {
            throw InputError("field '" + row_name + "' must be an array of " + std::to_string(N) +
                             " numbers");
        }
        for (int j = 0; j < N; ++j) {
            if (!row[j].is_number()) {
                throw InputError("field '" + row_name + "[" + std::to_string(j) +
                                 "]' must be a number");
            }
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

template <int N>
nlohmann::json write_square(const Eigen::Matrix<double, N, N>& m)
{
    auto out = nlohmann::json::array();
    for (int i = 0; i < N; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < N; ++j) {
            row.push_back(m(i, j));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

CurvatureOperator::CurvatureOperator(const Mat6& matrix) : m_(matrix)
{
    const double defect = max_asymmetry(m_);
    if (defect > kSymmetryTol) {
        throw ValidationError("curvature operator is not symmetric (max |R - R^T| = " +
                              std::to_string(defect) + ")");
    }
}

bool weyl_traceless(const Mat3& Wplus, const Mat3& Wminus)
{
    return std::abs(Wplus.trace()) <= tol::verification &&
           std::abs(Wminus.trace()) <= tol::verification;
}

CurvatureBlocks decompose(const CurvatureOperator& R)
{
    const Mat6& m = R.matrix();
    CurvatureBlocks b;
    b.s = 2.0 * m.trace();
    const Mat3 scalar = (b.s / 12.0) * Mat3::Identity();
    b.Wplus = m.topLeftCorner<3, 3>() - scalar;
    b.Wminus = m.bottomRightCorner<3, 3>() - scalar;
    b.B = m.bottomLeftCorner<3, 3>();
    b.strict = weyl_traceless(b.Wplus, b.Wminus);
    return b;
}

CurvatureOperator compose(const CurvatureBlocks& blocks)
{
    for (const auto* w : {&blocks.Wplus, &blocks.Wminus}) {
        const double defect = (*w - w->transpose()).cwiseAbs().maxCoeff();
        if (defect > kSymmetryTol) {
            throw ValidationError("Weyl block is not symmetric (defect " + std::to_string(defect) +
                                  ")");
        }
    }
    const Mat3 scalar = (blocks.s / 12.0) * Mat3::Identity();
    Mat6 m;
    m.topLeftCorner<3, 3>() = scalar + blocks.Wplus;
    m.bottomRightCorner<3, 3>() = scalar + blocks.Wminus;
    m.bottomLeftCorner<3, 3>() = blocks.B;
    m.topRightCorner<3, 3>() = blocks.B.transpose();
    return CurvatureOperator(m);
}

const std::vector<std::string>& model_names()
{
    static const std::vector<std::string> names = {
        "flat",         "constant_curvature", "asd_ricci_flat", "einstein_asd",
        "asd_general",  "kaehler_witness",    "w1_witness",     "w2_witness",
    };
    return names;
}

CurvatureBlocks model_blocks(const std::string& name, const ModelParams& params)
{
    const bool einstein = name == "constant_curvature" || name == "asd_ricci_flat" ||
                          name == "einstein_asd" || name == "kaehler_witness" ||
                          name == "w1_witness" || name == "w2_witness";
    if (einstein && !is_zero(params.B)) {
        throw InputError("model '" + name + "' is Einstein and takes no B block");
    }

    CurvatureBlocks b;
    if (name == "flat") {
        // all zero
    } else if (name == "constant_curvature") {
        b.s = params.s;
    } else if (name == "asd_ricci_flat") {
        b.Wminus = params.Wminus;
    } else if (name == "einstein_asd") {
        b.s = params.s;
        b.Wminus = params.Wminus;
    } else if (name == "asd_general") {
        b.s = params.s;
        b.B = params.B;
        b.Wminus = params.Wminus;
    } else if (name == "kaehler_witness" || name == "w1_witness" || name == "w2_witness") {
        if (name == "w2_witness" && !(params.s < 0.0)) {
            throw InputError("w2_witness needs negative scalar curvature, got s = " +
                             std::to_string(params.s));
        }
        b.s = params.s;
        b.Wminus = -(params.s / 12.0) * Mat3::Identity();
    } else {
        throw InputError("unknown curvature model '" + name + "'");
    }
    b.strict = weyl_traceless(b.Wplus, b.Wminus);
    return b;
}

CurvatureOperator model(const std::string& name, const ModelParams& params)
{
    return compose(model_blocks(name, params));
}

CurvatureOperator reverse_orientation(const CurvatureOperator& R)
{
    const Mat6& f = orientation_reversal();
    Mat6 m = f * R.matrix() * f.transpose();
    // f is a signed permutation, so m is symmetric up to rounding in the products
    m = 0.5 * (m + m.transpose()).eval();
    return CurvatureOperator(m);
}

Mat4 curvature_endo(const CurvatureOperator& R, const Vec4& X, const Vec4& Y)
{
    return endo(R.apply(wedge(X, Y)));
}

double coupling(const CurvatureOperator& R, const Vec4& X, const Vec4& Y,
                const ProductTwistorPoint& p, const VerticalVector& V, double t1, double t2)
{
    require_anticommute(p.J1.matrix(), V.V1(), "V1");
    require_anticommute(p.J2.matrix(), V.V2(), "V2");
    const TwoVector sigma = t1 * wedge(Mat4(p.J1.matrix() * V.V1())) +
                            t2 * wedge(Mat4(p.J2.matrix() * V.V2()));
    return 2.0 * R.pair(sigma, wedge(X, Y));
}

CurvatureOperator curvature_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object()) {
        throw InputError("curvature document must be a JSON object");
    }
    if (doc.contains("matrix")) {
        return CurvatureOperator(read_square<6>(doc.at("matrix"), "matrix"));
    }
    if (!doc.contains("blocks")) {
        throw InputError("curvature document needs a 'matrix' or 'blocks' field");
    }
    const auto& blocks = doc.at("blocks");
    if (!blocks.is_object()) {
        throw InputError("field 'blocks' must be an object");
    }
    CurvatureBlocks b;
    if (!blocks.contains("s") || !blocks.at("s").is_number()) {
        throw InputError("field 'blocks.s' must be a number");
    }
    b.s = blocks.at("s").get<double>();
    for (auto [key, target] : {std::pair{"B", &b.B}, std::pair{"Wplus", &b.Wplus},
                               std::pair{"Wminus", &b.Wminus}}) {
        if (!blocks.contains(key)) {
            throw InputError(std::string("field 'blocks.") + key + "' is missing");
        }
        *target = read_square<3>(blocks.at(key), std::string("blocks.") + key);
    }
    return compose(b);
}

nlohmann::json curvature_to_json(const CurvatureOperator& R)
{
    const CurvatureBlocks b = decompose(R);
    nlohmann::json doc;
    doc["matrix"] = write_square<6>(R.matrix());
    doc["blocks"] = {
        {"s", b.s},
        {"B", write_square<3>(b.B)},
        {"Wplus", write_square<3>(b.Wplus)},
        {"Wminus", write_square<3>(b.Wminus)},
    };
    doc["strict"] = b.strict;
    return doc;
}

}  // namespace twistor
