#pragma once

// Gray-Hervella classification of (H_t, J^n) on a component of the product
// twistor space by seeded sampling, and the theorem suite.

#include "twistor/product_twistor.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace twistor {

enum class GHClass { K, W1, W2, W3, W1W2, W1W3, W2W3, W1W2W3, OTHER };

std::string to_string(GHClass c);
/// Throws InputError for unknown names.
GHClass parse_class(const std::string& name);

/// K first, OTHER last; every class precedes the classes above it.
const std::array<GHClass, 9>& lattice_order();

/// a <= b in the lattice of direct sums.
bool lattice_leq(GHClass a, GHClass b);

enum class Condition { DOmega, W1Cond, dOmega, N, deltaOmega, QuasiCond, W1W3Cond, W2W3Cond };

/// "DΩ", "W1-cond", "dΩ", "N", "δΩ", "quasi-cond", "W1W3-cond", "W2W3-cond".
std::string to_string(Condition c);
/// Throws InputError for unknown names.
Condition parse_condition(const std::string& name);

const std::array<Condition, 8>& all_conditions();

/// Conditions whose vanishing defines the class. Empty for OTHER.
std::vector<Condition> requirements(GHClass c);

/// Classes that can occur for n in {1,2} (first list) and n in {3,4} (second).
bool possible_class(GHClass c, int n);

enum class W2W3Reading {
    /// S_{A,B,C} {(D_A Omega)(B,C) - (D_{JA} Omega)(JB,C)}
    Cyclic,
    /// S_{A,B,C} {(D_A Omega)(A,C) - (D_{JA} Omega)(JA,C)}
    AsPrinted,
};

enum class W1W3Reading {
    /// (D_A Omega)(A,C) - (D_{JA} Omega)(JA,C)
    Standard,
    /// (D_A Omega)(A,C) + (D_{JA} Omega)(JA,C)
    AsPrinted,
};

std::string to_string(W2W3Reading r);
std::string to_string(W1W3Reading r);

struct SamplingConfig {
    std::uint64_t seed = 0;
    int num_points = 64;
    int num_arg_triples = 32;
    double tol = 1e-9;
    W2W3Reading w2w3 = W2W3Reading::Cyclic;
    W1W3Reading w1w3 = W1W3Reading::Standard;

    /// Throws InputError unless counts and tol are positive.
    void validate() const;
};

struct NijenhuisNote {
    /// The reading that agrees with the identity route on this sample.
    NijenhuisReading used = NijenhuisReading::SignOnFirstTerm;
    /// Sup over the sample of |closed form - identity route|, normalized.
    double deviation_sign_on_first = 0.0;
    double deviation_sign_on_both = 0.0;
};

struct ClassReport {
    std::map<Condition, double> residuals;
    GHClass detected = GHClass::OTHER;
    std::string component;
    Params params;
    SamplingConfig config;
    bool strict = true;
    std::vector<std::string> flags;
    NijenhuisNote nijenhuis;

    bool passes(GHClass c) const;
};

/// Sup of the normalized residual of one condition. Throws InputError for a
/// bad component, params or config.
double residual(Condition cond, const CurvatureOperator& R, const std::string& component,
                const Params& params, const SamplingConfig& cfg);

/// Sups for several conditions over one shared sample.
std::map<Condition, double> residuals(const std::vector<Condition>& conds,
                                      const CurvatureOperator& R, const std::string& component,
                                      const Params& params, const SamplingConfig& cfg);

/// Largest residual among the defining conditions of `c` (0 for OTHER).
double class_residual(GHClass c, const CurvatureOperator& R, const std::string& component,
                      const Params& params, const SamplingConfig& cfg);

ClassReport classify(const CurvatureOperator& R, const std::string& component,
                     const Params& params, const SamplingConfig& cfg);

nlohmann::ordered_json to_json(const ClassReport& report);
std::string csv_header();
std::string to_csv_row(const ClassReport& report);

/// One measured quantity behind a theorem verdict.
struct Evidence {
    std::string description;
    std::string expectation;  // "<= tol" or "> 1e-3"
    double value = 0.0;
    bool passed = false;
    /// Supplementary rows are reported but do not enter the verdict.
    bool supplementary = false;
};

struct TheoremResult {
    std::string id;
    std::string statement;
    bool passed = false;
    std::vector<Evidence> evidence;
};

const std::vector<std::string>& theorem_ids();

/// Throws InputError for unknown ids.
TheoremResult verify_theorem(const std::string& id, const SamplingConfig& cfg);

nlohmann::ordered_json to_json(const TheoremResult& result);

}  // namespace twistor
