#include "trot/gait_model.hpp"

#include <cmath>
#include <string>

namespace trot {

namespace {

void check_half_cycle_time(const GaitParams& gait, double t_s) {
    if (!(t_s >= 0.0) || !(t_s <= gait.half_period_s())) {
        throw RangeError("t = " + std::to_string(t_s) +
                         " s outside the supported half cycle [0, " +
                         std::to_string(gait.half_period_s()) + "]");
    }
}

} // namespace

void BodyParams::validate() const {
    if (!(mass_kg > 0.0) || !std::isfinite(mass_kg)) {
        throw DomainError("mass_kg must be positive");
    }
    if (!(inertia_kgm2 > 0.0) || !std::isfinite(inertia_kgm2)) {
        throw DomainError("inertia_kgm2 must be positive");
    }
    if (!(gravity_mps2 > 0.0) || !std::isfinite(gravity_mps2)) {
        throw DomainError("gravity_mps2 must be positive");
    }
}

void GaitParams::validate() const {
    if (!(stride_m > 0.0) || !std::isfinite(stride_m)) {
        throw DomainError("stride_m must be positive");
    }
    if (!(period_s > 0.0) || !std::isfinite(period_s)) {
        throw DomainError("period_s must be positive");
    }
    if (!(x1 >= 0.0) || !(x1 <= 0.5)) {
        throw DomainError("x1 must lie in [0, 0.5]");
    }
}

double tipping_coefficient(const BodyParams& body, double sin_alpha) {
    body.validate();
    if (!(sin_alpha > 0.0) || !(sin_alpha <= 1.0)) {
        throw DomainError("sin_alpha must lie in (0, 1]");
    }
    return body.mass_kg * body.gravity_mps2 * sin_alpha / body.inertia_kgm2;
}

double angular_acceleration(double coeff, const GaitParams& gait, double t_s) {
    gait.validate();
    check_half_cycle_time(gait, t_s);
    return coeff * (gait.x1 * gait.stride_m - gait.speed_mps() * t_s);
}

double angular_velocity(double coeff, const GaitParams& gait, double t_s) {
    gait.validate();
    check_half_cycle_time(gait, t_s);
    return coeff * (gait.x1 * gait.stride_m * t_s -
                    gait.speed_mps() * t_s * t_s / 2.0);
}

double rotation_angle(double coeff, const GaitParams& gait, double t_s) {
    gait.validate();
    check_half_cycle_time(gait, t_s);
    return coeff * gait.stride_m *
           (gait.x1 * t_s * t_s / 2.0 - t_s * t_s * t_s / (6.0 * gait.period_s));
}

double rotation_at_exchange(double coeff, const GaitParams& gait) {
    gait.validate();
    // Factored form of the cubic at t = T/2. Keeps the x1 = 1/6 root exact:
    // x1/8 and 1/48 round to the same double there.
    return coeff * gait.stride_m * gait.period_s * gait.period_s *
           (gait.x1 / 8.0 - 1.0 / 48.0);
}

RotationSample sample_at(double coeff, const GaitParams& gait, double t_s) {
    return RotationSample{
        t_s,
        angular_acceleration(coeff, gait, t_s),
        angular_velocity(coeff, gait, t_s),
        rotation_angle(coeff, gait, t_s),
    };
}

} // namespace trot
