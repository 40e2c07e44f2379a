#include "trot/stance_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace trot {

SupportPhase other(SupportPhase phase) {
    return phase == SupportPhase::LfRr ? SupportPhase::RfLr : SupportPhase::LfRr;
}

const char* phase_name(SupportPhase phase) {
    return phase == SupportPhase::LfRr ? "LF_RR" : "RF_LR";
}

SupportDiagonal diagonal_of(const FootPlan& plan, SupportPhase phase) {
    SupportDiagonal diag;
    diag.phase = phase;
    diag.front_foot = phase == SupportPhase::LfRr ? plan.lf : plan.rf;
    diag.rear_foot = phase == SupportPhase::LfRr ? plan.rr : plan.lr;

    const Vec2 span = diag.front_foot - diag.rear_foot;
    const double length = span.norm();
    if (length <= 0.0) {
        throw GeometryError(std::string("support pair ") + phase_name(phase) +
                            " has coincident feet");
    }
    const Vec2 dir = span / length;
    diag.sin_alpha = std::abs(dir.y());
    if (diag.sin_alpha <= 0.0) {
        throw GeometryError(std::string("support diagonal ") + phase_name(phase) +
                            " is parallel to the walking direction (sin_alpha = 0)");
    }

    // Left normal of the segment direction, flipped so it points along +x.
    Vec2 normal{-dir.y(), dir.x()};
    if (normal.x() < 0.0) {
        normal = -normal;
    }
    diag.lead_normal = normal;
    // Positive rotation about this axis moves the top of the body toward
    // the leading side (right-hand rule).
    diag.axis = Vec2{-normal.y(), normal.x()};
    return diag;
}

double cog_offset(const Vec2& point, const SupportDiagonal& diag) {
    if (!(diag.sin_alpha > 0.0)) {
        throw GeometryError("degenerate support diagonal");
    }
    return (point - diag.front_foot).dot(diag.lead_normal);
}

FootPlan initial_stance(double x1, const GaitParams& gait, const FootPlan& plan_template,
                        SupportPhase first_phase) {
    gait.validate();
    if (!(x1 >= 0.0) || !(x1 <= 0.5)) {
        throw DomainError("x1 must lie in [0, 0.5]");
    }
    const SupportDiagonal diag = diagonal_of(plan_template, first_phase);

    // Solve (cog - front_foot) . n = x1 * S * n.x for cog.x at fixed cog.y,
    // so the lead measured along the walking direction is exactly x1 * S.
    FootPlan plan = plan_template;
    const double cy = plan_template.cog_start.y();
    const double rhs = x1 * gait.stride_m * diag.lead_normal.x() +
                       diag.front_foot.dot(diag.lead_normal) -
                       cy * diag.lead_normal.y();
    plan.cog_start = Vec2{rhs / diag.lead_normal.x(), cy};
    return plan;
}

Eigen::Matrix3d axis_angle_matrix(const SupportDiagonal& diag, double theta_rad) {
    if (!(diag.sin_alpha > 0.0)) {
        throw GeometryError("degenerate support diagonal");
    }
    return Eigen::AngleAxisd(theta_rad, diag.axis3()).toRotationMatrix();
}

AttitudeState attitude_from_matrix(const Eigen::Matrix3d& rot) {
    AttitudeState att;
    const double s = std::clamp(-rot(2, 0), -1.0, 1.0);
    att.pitch_rad = std::asin(s);
    att.roll_rad = std::atan2(rot(2, 1), rot(2, 2));
    att.yaw_rad = std::atan2(rot(1, 0), rot(0, 0));
    return att;
}

Eigen::Matrix3d matrix_from_attitude(const AttitudeState& att) {
    return (Eigen::AngleAxisd(att.yaw_rad, Eigen::Vector3d::UnitZ()) *
            Eigen::AngleAxisd(att.pitch_rad, Eigen::Vector3d::UnitY()) *
            Eigen::AngleAxisd(att.roll_rad, Eigen::Vector3d::UnitX()))
        .toRotationMatrix();
}

AttitudeState decompose_attitude(double theta_rad, const SupportDiagonal& diag) {
    return attitude_from_matrix(axis_angle_matrix(diag, theta_rad));
}

} // namespace trot
