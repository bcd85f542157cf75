#ifndef HITPROB_VERIFY_HPP
#define HITPROB_VERIFY_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "hitprob/solver.hpp"

namespace hitprob {

enum class VerifyScope { All, Degree9, Degree10, Degree23, Invariants };
VerifyScope parse_scope(const std::string& s);

struct Claim {
    std::string id;
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<Claim> claims;
    bool pass() const;
    /// Deterministic modulo the timing fields, which `with_timing` drops.
    nlohmann::json to_json(bool with_timing) const;
};

struct VerifyOptions {
    std::string fixture_dir = "fixtures";
    SolverOptions solver;
};

/// Runs the fixture-backed checks of the published tables for the chosen
/// scope. Throws on missing or corrupt fixture files.
VerificationReport verify_paper(VerifyScope scope, const VerifyOptions& opts);

}  // namespace hitprob

#endif
