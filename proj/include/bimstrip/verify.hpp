#pragma once

#include <string>
#include <vector>

#include "bimstrip/constants.hpp"
#include "bimstrip/types.hpp"

namespace bimstrip {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct VerifyOptions {
    unsigned long long seed = 12345;
    bool with_field = true;          // include the slower far-field / near-tip fits
    int random_configs = 5;          // extra random configs for the identity audits
    int random_points = 200;         // real-axis samples per config
    double lambda_perturbation = 0.0;  // test hook: corrupts lambda post-computation
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

VerifyReport run_verify(const StripConfig& cfg, const FactorizationSettings& settings = {},
                        const VerifyOptions& options = {});

/// Deterministic well-conditioned random configuration (contrasts within
/// +/-0.9, kappa* log-uniform in [1e-2, 1e2], modest physical scales).
StripConfig random_config(unsigned long long seed);

}  // namespace bimstrip
