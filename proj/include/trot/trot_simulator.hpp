#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "trot/dynamics_oracle.hpp"
#include "trot/stance_geometry.hpp"
#include "trot/velocity_profile.hpp"

namespace trot {

/// How the scalar rotation state crosses a support exchange.
///
/// ProjectRate keeps the attitude and projects the angular velocity onto the
/// new diagonal (the off-axis component is dropped: the single-axis support
/// assumption admits no other rate). ResetRate zeroes the rate instead, the
/// idealized mode used by the zero-drift invariants.
enum class ExchangeMode { ProjectRate, ResetRate };

enum class Termination { CapReached, ThresholdExceeded };

struct SimConfig {
    int num_periods_max = 100;
    double stability_threshold_rad = 0.2617993877991494; // 15 degrees
    ExchangeMode exchange_mode = ExchangeMode::ProjectRate;
    SupportPhase first_phase = SupportPhase::LfRr;
    std::optional<IntegratorConfig> integrator; // default: step T/2000

    void validate() const;
};

/// One trace point: the in-phase diagonal rotation plus the composed body
/// attitude at global time t.
struct TraceSample {
    double t_s = 0.0;
    double theta_rad = 0.0; // rotation about the current diagonal, this half cycle
    AttitudeState attitude;
    int phase_index = 0; // half-cycle counter, 0-based
};

/// Body state at a support exchange, after the carry-over rule.
struct ExchangeRecord {
    double t_s = 0.0;
    double theta_rad = 0.0; // rotation accumulated over the ending half cycle
    AttitudeState attitude;
    double carried_rate_rad_s = 0.0; // scalar rate handed to the next diagonal
};

struct CycleReport {
    std::vector<TraceSample> trace;
    std::vector<ExchangeRecord> exchanges;
    int stable_period_count = 0;
    Termination termination = Termination::CapReached;
};

/// Full body state between half cycles.
struct BodyState {
    Eigen::Matrix3d attitude = Eigen::Matrix3d::Identity();
    Eigen::Vector3d angular_rate_rad_s = Eigen::Vector3d::Zero();
};

/// State carried into the next half cycle: the attitude survives unchanged,
/// the rate collapses to its component along the new diagonal.
struct CarriedState {
    Eigen::Matrix3d attitude = Eigen::Matrix3d::Identity();
    double axis_rate_rad_s = 0.0;
};

CarriedState exchange_support(const BodyState& state, const SupportDiagonal& new_diag);

/// Runs successive half cycles, alternating the support diagonal, until the
/// attitude threshold is breached or num_periods_max full periods complete.
///
/// Each half cycle repeats the profile's first-half displacement with the
/// stance re-established at the x1 * S lead (steady gait; exact for constant
/// profiles). A stable period is a full period with |roll| and |pitch| both
/// under the threshold throughout.
CycleReport run_trot(const BodyParams& body, const GaitParams& gait, const FootPlan& plan,
                     const VelocityProfile& profile, const SimConfig& config);

} // namespace trot
