#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trot/dynamics_oracle.hpp"
#include "trot/stance_geometry.hpp"
#include "trot/velocity_profile.hpp"

namespace trot {

/// Initial-stance fractions to evaluate, with the parameters held fixed.
struct SweepSpec {
    std::vector<double> x1_values;
    BodyParams body;
    GaitParams gait;
    SupportDiagonal diagonal;

    /// x1 values must be nondecreasing and inside [0, 0.5].
    void validate() const;
};

struct SweepRow {
    double x1 = 0.0;
    double theta_exchange_rad = 0.0;
    double roll_rad = 0.0;
    double pitch_rad = 0.0;
    std::optional<std::string> error; // set when this row failed to evaluate
};

struct OptimizationResult {
    double x1_star = 0.0;
    double residual_rad = 0.0; // theta at exchange when starting from x1_star
    bool in_range = false;     // x1_star inside the feasible stance range [0, 0.5]
};

/// The constant-speed optimum of the exchange-time rotation: exactly 1/6,
/// independent of mass, inertia, stride and period.
double optimal_x1_constant();

/// Finds the x1 that zeroes theta(T/2) for an arbitrary velocity profile.
///
/// theta(T/2) is affine in x1 (x1 enters the forcing only through the
/// additive lead term, with slope coeff*S*T^2/8 > 0), so two oracle
/// integrations pin the root and a third verifies the residual. Roots
/// outside [0, 0.5] are reported with in_range = false, not clamped.
OptimizationResult optimal_x1(const GaitParams& gait, const BodyParams& body,
                              const SupportDiagonal& diagonal,
                              const VelocityProfile& profile,
                              std::optional<IntegratorConfig> config = std::nullopt);

/// One row per x1: rotation at exchange plus its roll/pitch decomposition.
/// Constant profiles use the closed form (the x1 = 1/6 row is exactly zero);
/// other profiles go through the integrator.
std::vector<SweepRow> sweep_x1(const SweepSpec& spec, const VelocityProfile& profile,
                               std::optional<IntegratorConfig> config = std::nullopt);

} // namespace trot
