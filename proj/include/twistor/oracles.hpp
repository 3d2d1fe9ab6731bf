#pragma once

// Internal-consistency checks: each compares two independent routes to the
// same quantity over seeded random inputs.

#include "twistor/product_twistor.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twistor {

struct OracleResult {
    std::string name;
    int trials = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    /// Inputs of the worst trial, enough to reproduce it.
    std::string witness;

    bool passed() const { return max_residual <= tolerance; }
};

struct OracleOptions {
    std::uint64_t seed = 1;
    /// Trials per (component, n) pair, or per check where no pair applies.
    int trials = 100;
    std::vector<std::string> components{"++", "+-"};
    /// Signs fed to the Nijenhuis closed form. Corrupting them must make the
    /// N-identity check fail.
    SignTable signs{};
};

/// d Omega closed form vs the cyclic sum of D Omega.
OracleResult check_ext_deriv(const OracleOptions& opt);
/// delta Omega closed form vs minus the frame trace of D Omega.
OracleResult check_codiff(const OracleOptions& opt);
/// Nijenhuis closed form vs the D Omega identity.
OracleResult check_nijenhuis(const OracleOptions& opt);
/// Product structure on first-factor arguments vs the single twistor space.
OracleResult check_restriction(const OracleOptions& opt);
/// G([R(X,Y), a], b) = g(R([a,b]^), X ^ Y) on so(4).
OracleResult check_curvature_bracket(const OracleOptions& opt);
/// Coupling H_t(R(X,Y)J, V) vs the commutator action of R(X,Y) on J1, J2.
OracleResult check_coupling(const OracleOptions& opt);
/// Fibre Kaehler property D K = 0 with finite-difference fields, dims 4 and 6.
OracleResult check_fibre_kaehler(const OracleOptions& opt);

/// All of the above, in that order.
std::vector<OracleResult> run_oracles(const OracleOptions& opt);

}  // namespace twistor
