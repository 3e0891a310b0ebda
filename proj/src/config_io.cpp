#include "bimstrip/config_io.hpp"

#include <cmath>
#include <fstream>

namespace bimstrip {

using nlohmann::json;

namespace {

void fail(const std::string& field, const std::string& why) {
    throw std::invalid_argument("config field '" + field + "': " + why);
}

double get_num(const json& j, const std::string& key, double fallback, bool required = false) {
    if (!j.contains(key)) {
        if (required) fail(key, "missing");
        return fallback;
    }
    if (!j.at(key).is_number()) fail(key, "must be a number");
    return j.at(key).get<double>();
}

SweepAxis parse_axis(const json& j, const std::string& name) {
    SweepAxis ax;
    ax.min = get_num(j, "min", ax.min);
    ax.max = get_num(j, "max", ax.max);
    if (j.contains("count")) {
        if (!j.at("count").is_number_integer() || j.at("count").get<int>() < 1)
            fail(name + ".count", "must be a positive integer");
        ax.count = j.at("count").get<int>();
    }
    if (!(ax.min <= ax.max)) fail(name, "min must not exceed max");
    return ax;
}

}  // namespace

void SweepSpec::validate() const {
    const double lim = 1.0 - margin;
    if (margin < 0.0 || margin >= 1.0) throw std::invalid_argument("sweep.margin out of [0, 1)");
    for (const auto* ax : {&mu_star, &h_star}) {
        if (ax->min < -lim || ax->max > lim)
            throw std::invalid_argument("sweep grid must stay inside (-1, 1) by the margin");
    }
    if (kappa_star.empty()) throw std::invalid_argument("sweep.kappa_star must be non-empty");
    for (double k : kappa_star)
        if (!(k > 0.0) || !std::isfinite(k))
            throw std::invalid_argument("sweep.kappa_star values must be positive");
}

StripConfig RunConfig::resolved_strip() const {
    if (strip) return *strip;
    if (strip_dimensionless)
        return dimensionalize(*strip_dimensionless, strip_dimensionless->h_total, mu_total);
    throw std::invalid_argument("config: no strip specification present");
}

void RunConfig::validate() const {
    if (strip.has_value() == strip_dimensionless.has_value())
        throw std::invalid_argument(
            "config: exactly one of 'strip' and 'strip_dimensionless' must be present");
    if (strip) strip->validate();
    if (strip_dimensionless) strip_dimensionless->validate();
    if (settings.quad_tol <= 0.0 || settings.quad_tol >= 1.0)
        throw std::invalid_argument("settings.quad_tol out of (0, 1)");
    if (settings.beta < 0.0) throw std::invalid_argument("settings.beta must be >= 0");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("output.format must be 'csv' or 'json'");
    sweep.validate();
}

RunConfig parse_config(const json& j) {
    RunConfig rc;
    if (j.contains("strip")) {
        const auto& s = j.at("strip");
        StripConfig cfg;
        cfg.mu1 = get_num(s, "mu1", 0.0, true);
        cfg.mu2 = get_num(s, "mu2", 0.0, true);
        cfg.h1 = get_num(s, "h1", 0.0, true);
        cfg.h2 = get_num(s, "h2", 0.0, true);
        cfg.kappa = get_num(s, "kappa", 0.0, true);
        rc.strip = cfg;
    }
    if (j.contains("strip_dimensionless")) {
        const auto& s = j.at("strip_dimensionless");
        DimensionlessParams dp;
        dp.mu_star = get_num(s, "mu_star", 0.0, true);
        dp.h_star = get_num(s, "h_star", 0.0, true);
        dp.kappa_star = get_num(s, "kappa_star", 0.0, true);
        dp.h_total = get_num(s, "h_total", 1.0);
        dp.lambda_star = lambda_star_closed_form(dp.mu_star, dp.h_star, dp.kappa_star);
        rc.strip_dimensionless = dp;
        rc.mu_total = get_num(s, "mu_total", 2.0);
    }
    if (j.contains("settings")) {
        const auto& s = j.at("settings");
        rc.settings.quad_tol = get_num(s, "quad_tol", rc.settings.quad_tol);
        rc.settings.tail_cutoff = get_num(s, "tail_cutoff", rc.settings.tail_cutoff);
        rc.settings.beta = get_num(s, "beta", rc.settings.beta);
        if (s.contains("tail_correction")) {
            if (!s.at("tail_correction").is_boolean()) fail("settings.tail_correction", "must be a bool");
            rc.settings.tail_correction = s.at("tail_correction").get<bool>();
        }
    }
    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        if (s.contains("mu_star")) rc.sweep.mu_star = parse_axis(s.at("mu_star"), "sweep.mu_star");
        if (s.contains("h_star")) rc.sweep.h_star = parse_axis(s.at("h_star"), "sweep.h_star");
        if (s.contains("kappa_star")) {
            if (!s.at("kappa_star").is_array()) fail("sweep.kappa_star", "must be an array");
            rc.sweep.kappa_star = s.at("kappa_star").get<std::vector<double>>();
        }
        rc.sweep.margin = get_num(s, "margin", rc.sweep.margin);
    }
    if (j.contains("field")) {
        const auto& f = j.at("field");
        if (f.contains("points")) {
            if (!f.at("points").is_array()) fail("field.points", "must be an array of [x, y]");
            for (const auto& p : f.at("points")) {
                if (!p.is_array() || p.size() != 2) fail("field.points", "entries must be [x, y]");
                rc.field.points.push_back({p[0].get<double>(), p[1].get<double>()});
            }
        }
        if (f.contains("grid")) {
            const auto& g = f.at("grid");
            const SweepAxis gx = parse_axis(g.at("x"), "field.grid.x");
            const SweepAxis gy = parse_axis(g.at("y"), "field.grid.y");
            for (int i = 0; i < gx.count; ++i)
                for (int k = 0; k < gy.count; ++k)
                    rc.field.points.push_back(
                        {gx.count == 1 ? gx.min : gx.min + (gx.max - gx.min) * i / (gx.count - 1),
                         gy.count == 1 ? gy.min : gy.min + (gy.max - gy.min) * k / (gy.count - 1)});
        }
        rc.field.settings.beta0 = get_num(f, "beta0", 0.0);
        rc.field.settings.tol = get_num(f, "tol", rc.field.settings.tol);
        rc.field.settings.r_min_factor = get_num(f, "r_min_factor", rc.field.settings.r_min_factor);
        rc.field.settings.cutoff = get_num(f, "cutoff", 0.0);
    }
    if (j.contains("seed")) rc.seed = j.at("seed").get<unsigned long long>();
    if (j.contains("threads")) rc.threads = j.at("threads").get<int>();
    if (j.contains("output")) {
        const auto& o = j.at("output");
        if (o.contains("path")) rc.out_path = o.at("path").get<std::string>();
        if (o.contains("format")) rc.format = o.at("format").get<std::string>();
    }
    rc.validate();
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(const RunConfig& rc) {
    json j;
    if (rc.strip)
        j["strip"] = {{"mu1", rc.strip->mu1},
                      {"mu2", rc.strip->mu2},
                      {"h1", rc.strip->h1},
                      {"h2", rc.strip->h2},
                      {"kappa", rc.strip->kappa}};
    if (rc.strip_dimensionless)
        j["strip_dimensionless"] = {{"mu_star", rc.strip_dimensionless->mu_star},
                                    {"h_star", rc.strip_dimensionless->h_star},
                                    {"kappa_star", rc.strip_dimensionless->kappa_star},
                                    {"h_total", rc.strip_dimensionless->h_total},
                                    {"mu_total", rc.mu_total}};
    j["settings"] = {{"quad_tol", rc.settings.quad_tol},
                     {"tail_cutoff", rc.settings.tail_cutoff},
                     {"beta", rc.settings.beta},
                     {"tail_correction", rc.settings.tail_correction}};
    j["sweep"] = {{"mu_star", {{"min", rc.sweep.mu_star.min}, {"max", rc.sweep.mu_star.max}, {"count", rc.sweep.mu_star.count}}},
                  {"h_star", {{"min", rc.sweep.h_star.min}, {"max", rc.sweep.h_star.max}, {"count", rc.sweep.h_star.count}}},
                  {"kappa_star", rc.sweep.kappa_star},
                  {"margin", rc.sweep.margin}};
    if (!rc.field.points.empty() || rc.field.settings.beta0 > 0.0) {
        json pts = json::array();
        for (const auto& p : rc.field.points) pts.push_back({p[0], p[1]});
        j["field"] = {{"points", pts},
                      {"beta0", rc.field.settings.beta0},
                      {"tol", rc.field.settings.tol},
                      {"r_min_factor", rc.field.settings.r_min_factor},
                      {"cutoff", rc.field.settings.cutoff}};
    }
    j["seed"] = rc.seed;
    j["threads"] = rc.threads;
    j["output"] = {{"path", rc.out_path}, {"format", rc.format}};
    return j;
}

std::uint64_t config_hash(const RunConfig& rc) {
    const std::string s = to_json(rc).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

json constants_record(const StripConfig& cfg, const AsymptoticConstants& ac,
                      const JunctionCoefficients& jc) {
    const DimensionlessParams dp = nondimensionalize(cfg);
    return json{{"mu1", cfg.mu1},
                {"mu2", cfg.mu2},
                {"h1", cfg.h1},
                {"h2", cfg.h2},
                {"kappa", cfg.kappa},
                {"h_total", dp.h_total},
                {"mu_star", dp.mu_star},
                {"h_star", dp.h_star},
                {"kappa_star", dp.kappa_star},
                {"lambda_star", dp.lambda_star},
                {"eta", ac.eta},
                {"lambda", ac.lambda},
                {"alpha", ac.alpha},
                {"alpha_star", ac.alpha_star},
                {"c1", ac.c[0]},
                {"c2", ac.c[1]},
                {"d1", ac.d[0]},
                {"d2", ac.d[1]},
                {"a0", ac.a0},
                {"gamma_plus", ac.gamma_plus},
                {"gamma_minus", ac.gamma_minus},
                {"alpha_imperfect", ac.alpha_imperfect},
                {"alpha_perfect", ac.alpha_perfect},
                {"opening_to_jump", jc.opening_to_jump},
                {"weight2", jc.weight2},
                {"weight3", jc.weight3},
                {"tip_amplitude_factor", jc.tip_amplitude_factor},
                {"alpha_i_normalized", jc.alpha_i_normalized}};
}

}  // namespace bimstrip
