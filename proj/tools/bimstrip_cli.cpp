// Command-line front end: constants reports, kernel factorization samples,
// (mu*, h*) x kappa* sweeps, field exports and the self-verification suite.
//
// Exit codes: 0 success, 1 validation error, 2 numeric failure,
// 3 verification failure.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bimstrip/config_io.hpp"
#include "bimstrip/factorize.hpp"
#include "bimstrip/field.hpp"
#include "bimstrip/sweep.hpp"
#include "bimstrip/verify.hpp"
#include "bimstrip/version.hpp"

namespace {

using nlohmann::json;

bimstrip::RunConfig default_config() {
    bimstrip::RunConfig rc;
    rc.strip = bimstrip::StripConfig{1.0, 1.0, 1.0, 1.0, 1.0};
    return rc;
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run_constants_mode(const bimstrip::RunConfig& rc) {
    const bimstrip::StripConfig cfg = rc.resolved_strip();
    const auto ac = bimstrip::compute_constants(cfg, rc.settings);
    const auto jc = bimstrip::junction_coefficients(cfg, ac);
    emit(bimstrip::constants_record(cfg, ac, jc), rc.out_path);
    return 0;
}

int run_factorize_mode(const bimstrip::RunConfig& rc) {
    const bimstrip::StripConfig cfg = rc.resolved_strip();
    const bimstrip::Factorization fact(cfg, rc.settings);
    const auto rep = fact.verify_asymptotics();
    json samples = json::array();
    const double h = cfg.h_total();
    for (int i = 0; i <= 40; ++i) {
        const double x = (0.05 + 0.5 * i) / h;
        const std::complex<double> fp = fact.plus({x, 0.0});
        samples.push_back({{"xi", x},
                           {"plus_re", fp.real()},
                           {"plus_im", fp.imag()},
                           {"xi_star", fact.xi_star(x)}});
    }
    json j{{"lambda", fact.lambda()},
           {"eta", fact.eta()},
           {"alpha", fact.alpha()},
           {"gamma_plus", fact.gamma_plus()},
           {"gamma_minus", fact.gamma_minus()},
           {"strip_half_width", fact.strip_half_width()},
           {"zero_coeff_measured_im", rep.zero_coeff_measured.imag()},
           {"zero_coeff_target_im", rep.zero_coeff_target.imag()},
           {"zero_rel_dev", rep.zero_rel_dev},
           {"inf_coeff_measured_im", rep.inf_coeff_measured.imag()},
           {"inf_coeff_target_im", rep.inf_coeff_target.imag()},
           {"inf_magnitude_ratio", rep.inf_magnitude_ratio},
           {"identity_error", rep.identity_error},
           {"samples", samples}};
    emit(j, rc.out_path);
    return 0;
}

int run_field_mode(const bimstrip::RunConfig& rc) {
    const bimstrip::StripConfig cfg = rc.resolved_strip();
    if (rc.field.points.empty())
        throw std::invalid_argument("field mode needs field.points or field.grid in the config");
    const bimstrip::Factorization fact(cfg, rc.settings);
    const auto sample = bimstrip::invert_field(rc.field.points, cfg, fact, rc.field.settings);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!rc.out_path.empty()) {
        file.open(rc.out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + rc.out_path);
        os = &file;
    }
    *os << "# bimstrip field v" << bimstrip::kVersion << "\n";
    *os << "# contour_offset=" << fmt(sample.contour_offset)
        << " truncation=" << fmt(sample.truncation) << "\n";
    *os << "x,y,value,error\n";
    for (const auto& p : sample.points)
        *os << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(p.value) << ',' << fmt(p.error) << "\n";
    return 0;
}

int run_verify_mode(const bimstrip::RunConfig& rc, double corrupt_lambda, bool quick) {
    const bimstrip::StripConfig cfg = rc.resolved_strip();
    bimstrip::VerifyOptions opt;
    opt.seed = rc.seed;
    opt.lambda_perturbation = corrupt_lambda;
    opt.with_field = !quick;
    const auto rep = bimstrip::run_verify(cfg, rc.settings, opt);
    json checks = json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"deviation", c.deviation},
                          {"tolerance", c.tolerance},
                          {"note", c.note}});
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (deviation " << c.deviation
                  << ", tolerance " << c.tolerance << ")\n";
    }
    emit(json{{"all_pass", rep.all_pass}, {"checks", checks}}, rc.out_path);
    return rep.all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener-Hopf weight-function toolkit for an imperfect-interface strip crack"};
    app.set_version_flag("--version", bimstrip::kVersion);

    std::string config_path, out_path, format;
    int threads = 0;
    long long seed = -1;
    double tol = 0.0;
    double corrupt_lambda = 0.0;
    bool quick = false;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--format", format, "output format: csv|json");
    app.add_option("--threads", threads, "worker threads for sweeps");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--tol", tol, "quadrature tolerance override");

    auto* c_const = app.add_subcommand("constants", "asymptotic constants report");
    auto* c_fact = app.add_subcommand("factorize", "kernel factorization samples and asymptotics");
    auto* c_sweep = app.add_subcommand("sweep", "alpha_I/alpha_P parameter sweep CSV");
    auto* c_field = app.add_subcommand("field", "weight-function field export");
    auto* c_verify = app.add_subcommand("verify", "run the self-verification suite");
    c_verify->add_option("--corrupt-lambda", corrupt_lambda,
                         "test hook: perturb lambda by this relative amount");
    c_verify->add_flag("--quick", quick, "skip the field-reconstruction checks");
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        bimstrip::RunConfig rc =
            config_path.empty() ? default_config() : bimstrip::load_config(config_path);
        if (!out_path.empty()) rc.out_path = out_path;
        if (!format.empty()) rc.format = format;
        if (threads > 0) rc.threads = threads;
        if (seed >= 0) rc.seed = static_cast<unsigned long long>(seed);
        if (tol > 0.0) rc.settings.quad_tol = tol;
        rc.validate();

        if (*c_const) return run_constants_mode(rc);
        if (*c_fact) return run_factorize_mode(rc);
        if (*c_sweep) {
            if (rc.out_path.empty()) {
                std::cout << bimstrip::sweep_header(rc);
                bimstrip::run_sweep(rc, std::cout);
                std::cout << std::flush;
            } else {
                bimstrip::run_sweep_to_file(rc, rc.out_path);
            }
            return 0;
        }
        if (*c_field) return run_field_mode(rc);
        if (*c_verify) return run_verify_mode(rc, corrupt_lambda, quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
