#include "bimstrip/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "bimstrip/version.hpp"

namespace bimstrip {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> axis_values(const SweepAxis& ax) {
    std::vector<double> v(ax.count);
    for (int i = 0; i < ax.count; ++i)
        v[i] = ax.count == 1 ? ax.min : ax.min + (ax.max - ax.min) * i / (ax.count - 1);
    return v;
}

}  // namespace

SweepRecord compute_sweep_record(double mu_star, double h_star, double kappa_star,
                                 const FactorizationSettings& settings) {
    SweepRecord r;
    r.mu_star = mu_star;
    r.h_star = h_star;
    r.kappa_star = kappa_star;
    try {
        DimensionlessParams dp;
        dp.mu_star = mu_star;
        dp.h_star = h_star;
        dp.kappa_star = kappa_star;
        dp.h_total = 1.0;
        dp.lambda_star = lambda_star_closed_form(mu_star, h_star, kappa_star);
        dp.validate();
        r.lambda_star = dp.lambda_star;
        r.alpha_star = alpha_star_integral(dp, settings).alpha_star;
        r.alpha_i = -(r.alpha_star / kPi + 1.0 / r.lambda_star);
        r.alpha_p = alpha_perfect(dp);
        // alpha_P changes sign inside the domain; the ratio is meaningless there
        if (std::fabs(r.alpha_p) < 1e-9) {
            r.ratio_valid = false;
            r.diagnostics = "alpha_p~0";
        } else {
            r.ratio_i_p = r.alpha_i / r.alpha_p;
        }
        const StripConfig cfg = dimensionalize(dp, 1.0, 2.0);
        r.gamma_plus_h = gamma_plus_root(cfg).gamma_plus * cfg.h_total();
    } catch (const std::exception& e) {
        r.diagnostics = std::string("error: ") + e.what();
    }
    return r;
}

std::string sweep_header(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# bimstrip sweep v" << kVersion << "\n";
    os << "# config_hash=" << std::hex << config_hash(cfg) << std::dec << "\n";
    os << "# seed=" << cfg.seed << "\n";
    os << "mu_star,h_star,kappa_star,alpha_star,alpha_i,alpha_p,ratio_i_p,lambda_star,gamma_plus_h,"
          "diagnostics\n";
    return os.str();
}

std::string format_sweep_row(const SweepRecord& r) {
    std::ostringstream os;
    os << fmt(r.mu_star) << ',' << fmt(r.h_star) << ',' << fmt(r.kappa_star) << ','
       << fmt(r.alpha_star) << ',' << fmt(r.alpha_i) << ',' << fmt(r.alpha_p) << ','
       << (r.ratio_valid ? fmt(r.ratio_i_p) : std::string()) << ',' << fmt(r.lambda_star) << ','
       << fmt(r.gamma_plus_h) << ',' << r.diagnostics << '\n';
    return os.str();
}

void run_sweep(const RunConfig& cfg, std::ostream& out, std::size_t skip_rows) {
    cfg.validate();
    const auto mu = axis_values(cfg.sweep.mu_star);
    const auto hs = axis_values(cfg.sweep.h_star);
    const auto& ks = cfg.sweep.kappa_star;

    struct Task {
        double mu, h, k;
    };
    std::vector<Task> tasks;
    for (double k : ks)                       // kappa* outer
        for (double h : hs)                   // h* middle
            for (double m : mu) tasks.push_back({m, h, k});  // mu* inner
    if (skip_rows >= tasks.size()) return;

    std::vector<SweepRecord> records(tasks.size());
    std::atomic<std::size_t> next(skip_rows);
    const int n_threads = std::max(1, cfg.threads);
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            records[i] = compute_sweep_record(tasks[i].mu, tasks[i].h, tasks[i].k, cfg.settings);
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = skip_rows; i < records.size(); ++i) {
        out << format_sweep_row(records[i]);
        out.flush();  // checkpoint granularity: one row
    }
}

void run_sweep_to_file(const RunConfig& cfg, const std::string& path) {
    const std::string header = sweep_header(cfg);
    std::size_t done = 0;
    bool resume = false;
    {
        std::ifstream in(path);
        if (in) {
            std::ostringstream existing_header;
            std::string line;
            std::size_t header_lines = 0;
            while (std::getline(in, line)) {
                if (header_lines < 4) {
                    existing_header << line << '\n';
                    ++header_lines;
                    continue;
                }
                if (!line.empty()) ++done;
            }
            if (header_lines > 0) {
                if (existing_header.str() != header)
                    throw std::invalid_argument(
                        "existing sweep file was produced by a different config; refusing to append");
                resume = true;
            }
        }
    }
    std::ofstream out(path, resume ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (!resume) out << header;
    run_sweep(cfg, out, done);
}

}  // namespace bimstrip
