#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trot/stance_geometry.hpp"
#include "trot/trot_simulator.hpp"
#include "trot/velocity_profile.hpp"

namespace trot {

struct OutputConfig {
    std::string trace_csv_path = "trot_trace.csv";
    std::string summary_json_path = "trot_summary.json";
    std::optional<std::string> svg_path;
};

/// One JSON document drives every workflow. Keys carry their units
/// (stride_m, period_s, ...), unknown keys are rejected, and every module
/// invariant is checked at load. Angles are radians throughout.
struct RunConfig {
    BodyParams body;
    GaitParams gait;
    FootPlan plan_template;
    VelocityProfile::Kind profile_kind = VelocityProfile::Kind::Constant;
    double profile_v0_mps = 0.0;    // resolved at load
    double profile_accel_mps2 = 0.0;
    std::vector<VelocityProfile::Knot> profile_knots; // piecewise only
    SimConfig sim;
    OutputConfig output;

    /// Built-in defaults: a 10 kg body with I = 2 kg m^2, a 0.4 m / 0.7 s
    /// trot on a stance with sin_alpha = 0.8, x1 = 1/6, constant speed.
    static RunConfig defaults();

    /// Parses and fully validates a config document.
    /// Throws ConfigError with the JSON path of the offending field.
    static RunConfig from_json_text(const std::string& text);

    /// Canonical form: defaults filled in, keys sorted, derived speed values
    /// resolved. Idempotent under reparsing, so artifacts embedding it
    /// reproduce byte-identically.
    nlohmann::json to_json() const;

    VelocityProfile make_profile() const;

    /// Template with the COG projection placed x1 * S ahead of the first
    /// support diagonal.
    FootPlan make_initial_plan() const;
};

} // namespace trot
