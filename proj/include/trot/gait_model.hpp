#pragma once

#include <vector>

#include "trot/errors.hpp"

namespace trot {

inline constexpr double kStandardGravity = 9.80665; // m/s^2

/// Rigid-body parameters of the machine. The inertia is a single scalar
/// about the current support diagonal; leg mass is neglected.
struct BodyParams {
    double mass_kg = 10.0;
    double inertia_kgm2 = 2.0;
    double gravity_mps2 = kStandardGravity;

    void validate() const;
};

/// Trot gait parameters. x1 is the initial COG lead ahead of the support
/// diagonal at stance onset, as a fraction of the stride; the support
/// exchange happens at period_s / 2 (duty factor 0.5).
struct GaitParams {
    double stride_m = 0.4;
    double period_s = 0.7;
    double x1 = 1.0 / 6.0;

    void validate() const;

    double speed_mps() const { return stride_m / period_s; }
    double half_period_s() const { return period_s / 2.0; }
};

/// Kinematic state of the diagonal-axis rotation at one instant.
struct RotationSample {
    double t_s = 0.0;
    double epsilon_rad_s2 = 0.0;
    double omega_rad_s = 0.0;
    double theta_rad = 0.0;
};

/// Angular acceleration produced per meter of COG lead: m * g * sin_alpha / I.
/// Units 1/(m*s^2). Throws DomainError for non-positive inputs.
double tipping_coefficient(const BodyParams& body, double sin_alpha);

/// epsilon(t) = coeff * (x1*S - (S/T)*t).
/// Valid for t in [0, T/2] only; outside that window the single-axis
/// support assumption expires and a RangeError is thrown.
double angular_acceleration(double coeff, const GaitParams& gait, double t_s);

/// omega(t) = coeff * (x1*S*t - (S/T)*t^2/2), with omega(0) = 0.
double angular_velocity(double coeff, const GaitParams& gait, double t_s);

/// theta(t) = coeff * S * (x1*t^2/2 - t^3/(6*T)), with theta(0) = 0.
/// Positive theta tips the body toward the leading side of the diagonal.
double rotation_angle(double coeff, const GaitParams& gait, double t_s);

/// Rotation accumulated when support exchanges at t = T/2:
/// coeff * S * T^2 * (x1/8 - 1/48). Zero exactly at x1 = 1/6.
double rotation_at_exchange(double coeff, const GaitParams& gait);

/// Full kinematic state at one instant (same domain rules as above).
RotationSample sample_at(double coeff, const GaitParams& gait, double t_s);

} // namespace trot
