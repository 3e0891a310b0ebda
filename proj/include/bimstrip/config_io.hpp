#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bimstrip/constants.hpp"
#include "bimstrip/field.hpp"
#include "bimstrip/types.hpp"

namespace bimstrip {

struct SweepAxis {
    double min = -0.96;
    double max = 0.96;
    int count = 41;
};

struct SweepSpec {
    SweepAxis mu_star;
    SweepAxis h_star;
    std::vector<double> kappa_star{100.0, 1.0, 0.01};
    double margin = 0.02;  // keep axes at least this far inside (-1, 1)

    void validate() const;
};

struct FieldSpec {
    std::vector<std::array<double, 2>> points;
    FieldSettings settings;
};

struct RunConfig {
    std::optional<StripConfig> strip;
    std::optional<DimensionlessParams> strip_dimensionless;
    double mu_total = 2.0;  // scale used when only the dimensionless strip is given
    FactorizationSettings settings;
    SweepSpec sweep;
    FieldSpec field;
    unsigned long long seed = 12345;
    int threads = 1;
    std::string out_path;
    std::string format = "csv";

    /// Physical configuration from whichever strip representation is present.
    StripConfig resolved_strip() const;
    void validate() const;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& cfg);

/// FNV-1a over the canonical serialized form; pinned into CSV headers so
/// resumed runs can refuse configs that do not match.
std::uint64_t config_hash(const RunConfig& cfg);

nlohmann::json constants_record(const StripConfig& cfg, const AsymptoticConstants& ac,
                                const JunctionCoefficients& jc);

}  // namespace bimstrip
