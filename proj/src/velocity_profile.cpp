#include "trot/velocity_profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trot {

namespace {
constexpr double kStrideRelTol = 1e-9;
}

VelocityProfile::VelocityProfile(Kind kind, double accel, std::vector<Knot> knots,
                                 const GaitParams& gait)
    : kind_(kind), accel_(accel), knots_(std::move(knots)) {
    gait.validate();
    if (knots_.size() < 2) {
        throw ProfileError("velocity profile needs at least two knots");
    }
    if (knots_.front().t_s != 0.0) {
        throw ProfileError("velocity profile must start at t = 0");
    }
    for (size_t i = 0; i < knots_.size(); ++i) {
        const Knot& k = knots_[i];
        if (!std::isfinite(k.t_s) || !std::isfinite(k.v_mps)) {
            throw ProfileError("velocity profile knots must be finite");
        }
        if (k.v_mps < 0.0) {
            throw ProfileError("speed must stay nonnegative over [0, T] (knot " +
                               std::to_string(i) + " has v = " + std::to_string(k.v_mps) + ")");
        }
        if (i > 0 && !(k.t_s > knots_[i - 1].t_s)) {
            throw ProfileError("velocity profile knot times must strictly increase");
        }
    }
    const double period = gait.period_s;
    if (std::abs(knots_.back().t_s - period) > kStrideRelTol * period) {
        throw ProfileError("velocity profile must cover [0, T]; last knot at t = " +
                           std::to_string(knots_.back().t_s) + " s, T = " +
                           std::to_string(period) + " s");
    }
    knots_.back().t_s = period; // snap so the domain endpoint is exact

    cumulative_.resize(knots_.size());
    cumulative_[0] = 0.0;
    for (size_t i = 1; i < knots_.size(); ++i) {
        const double dt = knots_[i].t_s - knots_[i - 1].t_s;
        cumulative_[i] = cumulative_[i - 1] +
                         0.5 * (knots_[i].v_mps + knots_[i - 1].v_mps) * dt;
    }

    // Consistency with the gait: theta(t) below embeds v = S/T, so a profile
    // that does not close the stride would silently describe another gait.
    const double covered = cumulative_.back();
    if (std::abs(covered - gait.stride_m) > kStrideRelTol * gait.stride_m) {
        throw ProfileError("profile covers " + std::to_string(covered) +
                           " m over one period but the stride is " +
                           std::to_string(gait.stride_m) + " m");
    }
}

VelocityProfile VelocityProfile::constant(const GaitParams& gait) {
    gait.validate();
    return constant(gait.speed_mps(), gait);
}

VelocityProfile VelocityProfile::constant(double v0_mps, const GaitParams& gait) {
    gait.validate();
    return VelocityProfile(Kind::Constant, 0.0,
                           {{0.0, v0_mps}, {gait.period_s, v0_mps}}, gait);
}

VelocityProfile VelocityProfile::linear(double accel_mps2, const GaitParams& gait) {
    gait.validate();
    const double v0 = (gait.stride_m - accel_mps2 * gait.period_s * gait.period_s / 2.0) /
                      gait.period_s;
    return linear(v0, accel_mps2, gait);
}

VelocityProfile VelocityProfile::linear(double v0_mps, double accel_mps2,
                                        const GaitParams& gait) {
    gait.validate();
    return VelocityProfile(Kind::Linear, accel_mps2,
                           {{0.0, v0_mps}, {gait.period_s, v0_mps + accel_mps2 * gait.period_s}},
                           gait);
}

VelocityProfile VelocityProfile::piecewise(std::vector<Knot> knots, const GaitParams& gait) {
    return VelocityProfile(Kind::PiecewiseLinear, 0.0, std::move(knots), gait);
}

double VelocityProfile::speed_at(double t_s) const {
    if (!(t_s >= 0.0) || !(t_s <= duration_s())) {
        throw RangeError("t = " + std::to_string(t_s) + " s outside the profile domain [0, " +
                         std::to_string(duration_s()) + "]");
    }
    auto upper = std::upper_bound(knots_.begin(), knots_.end(), t_s,
                                  [](double t, const Knot& k) { return t < k.t_s; });
    const size_t seg = std::min<size_t>(std::distance(knots_.begin(), upper), knots_.size() - 1);
    const Knot& lo = knots_[seg - 1];
    const Knot& hi = knots_[seg];
    const double w = (t_s - lo.t_s) / (hi.t_s - lo.t_s);
    return lo.v_mps + w * (hi.v_mps - lo.v_mps);
}

double VelocityProfile::distance_travelled(double t_s) const {
    if (!(t_s >= 0.0) || !(t_s <= duration_s())) {
        throw RangeError("t = " + std::to_string(t_s) + " s outside the profile domain [0, " +
                         std::to_string(duration_s()) + "]");
    }
    auto upper = std::upper_bound(knots_.begin(), knots_.end(), t_s,
                                  [](double t, const Knot& k) { return t < k.t_s; });
    const size_t seg = std::min<size_t>(std::distance(knots_.begin(), upper), knots_.size() - 1);
    const Knot& lo = knots_[seg - 1];
    const double dt = t_s - lo.t_s;
    return cumulative_[seg - 1] + lo.v_mps * dt +
           0.5 * (speed_at(t_s) - lo.v_mps) * dt;
}

std::vector<double> VelocityProfile::interior_knot_times() const {
    std::vector<double> times;
    for (size_t i = 1; i + 1 < knots_.size(); ++i) {
        times.push_back(knots_[i].t_s);
    }
    return times;
}

} // namespace trot
