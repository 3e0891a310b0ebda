#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bimstrip/config_io.hpp"

namespace bimstrip {

struct SweepRecord {
    double mu_star = 0.0;
    double h_star = 0.0;
    double kappa_star = 0.0;
    double alpha_star = 0.0;
    double alpha_i = 0.0;
    double alpha_p = 0.0;
    double ratio_i_p = 0.0;
    double lambda_star = 0.0;
    double gamma_plus_h = 0.0;
    bool ratio_valid = true;  // false when alpha_p sits at zero within tolerance
    std::string diagnostics = "ok";
};

SweepRecord compute_sweep_record(double mu_star, double h_star, double kappa_star,
                                 const FactorizationSettings& settings);

std::string sweep_header(const RunConfig& cfg);
std::string format_sweep_row(const SweepRecord& r);

/// Runs the sweep (kappa* outer, h* middle, mu* inner) with a worker pool and
/// writes CSV rows to `out` in deterministic order. skip_rows resumes an
/// interrupted run by recomputing nothing before that row index.
void run_sweep(const RunConfig& cfg, std::ostream& out, std::size_t skip_rows = 0);

/// File front end: writes the header on a fresh file, or validates the
/// existing header (config hash) and appends the remaining rows.
void run_sweep_to_file(const RunConfig& cfg, const std::string& path);

}  // namespace bimstrip
