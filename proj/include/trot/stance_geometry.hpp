#pragma once

#include <Eigen/Dense>

#include "trot/errors.hpp"
#include "trot/gait_model.hpp"

namespace trot {

using Vec2 = Eigen::Vector2d;

/// Which diagonal pair carries the body. Walking direction is +x,
/// left is +y; all foot coordinates are ground projections.
enum class SupportPhase { LfRr, RfLr };

SupportPhase other(SupportPhase phase);
const char* phase_name(SupportPhase phase);

/// Planar ground projections of the four feet plus the COG projection
/// at stance onset.
struct FootPlan {
    Vec2 lf{0.3, 0.4};
    Vec2 rf{0.3, -0.4};
    Vec2 lr{-0.3, 0.4};
    Vec2 rr{-0.3, -0.4};
    Vec2 cog_start{0.0, 0.0};
};

/// The active support segment and its derived geometry.
///
/// lead_normal is the unit normal of the diagonal pointing to the
/// walking-direction side; axis is the unit in-plane rotation axis chosen
/// so that positive rotation tips the body toward that side.
struct SupportDiagonal {
    Vec2 front_foot;
    Vec2 rear_foot;
    SupportPhase phase = SupportPhase::LfRr;
    double sin_alpha = 0.0;
    Vec2 lead_normal{0.0, 0.0};
    Vec2 axis{0.0, 0.0};

    Eigen::Vector3d axis3() const { return {axis.x(), axis.y(), 0.0}; }
};

/// Body attitude as yaw-pitch-roll (Z, then Y, then X) Euler angles.
struct AttitudeState {
    double roll_rad = 0.0;  // about the walking axis (+x)
    double pitch_rad = 0.0; // about the lateral axis (+y)
    double yaw_rad = 0.0;   // about the vertical (+z)
};

/// Builds the support segment for the named pair. Throws GeometryError when
/// the feet coincide or when the diagonal runs parallel to the walking
/// direction (sin_alpha = 0: gravity has no moment arm and the stability
/// question degenerates).
SupportDiagonal diagonal_of(const FootPlan& plan, SupportPhase phase);

/// Signed perpendicular distance from a ground point to the support line,
/// positive on the leading (walking-direction) side. A point x meters ahead
/// of the line along +x maps to x * sin_alpha.
double cog_offset(const Vec2& point, const SupportDiagonal& diag);

/// Places the COG projection x1 * S ahead (along +x) of the first support
/// diagonal, keeping the template's feet and lateral COG position.
FootPlan initial_stance(double x1, const GaitParams& gait, const FootPlan& plan_template,
                        SupportPhase first_phase = SupportPhase::LfRr);

/// Rotation by theta about the diagonal axis, as a world-frame matrix.
Eigen::Matrix3d axis_angle_matrix(const SupportDiagonal& diag, double theta_rad);

/// Extracts yaw-pitch-roll from a rotation matrix (R = Rz * Ry * Rx).
AttitudeState attitude_from_matrix(const Eigen::Matrix3d& rot);

/// Recomposes Rz(yaw) * Ry(pitch) * Rx(roll).
Eigen::Matrix3d matrix_from_attitude(const AttitudeState& att);

/// Attitude reached by rotating theta about the support diagonal.
AttitudeState decompose_attitude(double theta_rad, const SupportDiagonal& diag);

} // namespace trot
