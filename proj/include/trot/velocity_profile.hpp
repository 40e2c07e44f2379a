#pragma once

#include <utility>
#include <vector>

#include "trot/errors.hpp"
#include "trot/gait_model.hpp"

namespace trot {

/// Walking-speed history over one gait period [0, T].
///
/// Profiles are validated at construction: v(t) >= 0 everywhere and the
/// covered distance equals the gait stride to 1e-9 relative. Inconsistent
/// profiles are rejected rather than rescaled.
class VelocityProfile {
public:
    enum class Kind { Constant, Linear, PiecewiseLinear };

    /// (time_s, speed_mps) breakpoint.
    struct Knot {
        double t_s;
        double v_mps;
    };

    /// Constant speed v = S/T.
    static VelocityProfile constant(const GaitParams& gait);
    /// Constant speed with an explicit value, checked against the stride.
    static VelocityProfile constant(double v0_mps, const GaitParams& gait);
    /// v(t) = v0 + a*t with v0 = (S - a*T^2/2)/T so the stride still closes.
    static VelocityProfile linear(double accel_mps2, const GaitParams& gait);
    /// v(t) = v0 + a*t with both values given, checked against the stride.
    static VelocityProfile linear(double v0_mps, double accel_mps2, const GaitParams& gait);
    /// Piecewise-linear between knots; first knot at t = 0, last at t = T.
    static VelocityProfile piecewise(std::vector<Knot> knots, const GaitParams& gait);

    Kind kind() const { return kind_; }
    double initial_speed_mps() const { return knots_.front().v_mps; }
    double accel_mps2() const { return accel_; }
    double duration_s() const { return knots_.back().t_s; }
    double total_distance_m() const { return cumulative_.back(); }
    const std::vector<Knot>& knots() const { return knots_; }

    /// v(t) for t in [0, T].
    double speed_at(double t_s) const;

    /// Closed-form cumulative distance (piecewise quadratic in t).
    /// Throws RangeError outside [0, T].
    double distance_travelled(double t_s) const;

    /// Knot times strictly inside (0, T); integration steps must not
    /// straddle these.
    std::vector<double> interior_knot_times() const;

private:
    VelocityProfile(Kind kind, double accel, std::vector<Knot> knots, const GaitParams& gait);

    Kind kind_;
    double accel_ = 0.0;
    std::vector<Knot> knots_;
    std::vector<double> cumulative_; // distance covered up to each knot
};

} // namespace trot
