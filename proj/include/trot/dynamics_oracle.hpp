#pragma once

#include <utility>
#include <vector>

#include "trot/errors.hpp"
#include "trot/gait_model.hpp"
#include "trot/velocity_profile.hpp"

namespace trot {

/// Fixed-step classical 4th-order Runge-Kutta. No adaptive stepping: the
/// forcing is smooth and low-order, and identical grids give identical
/// results everywhere.
struct IntegratorConfig {
    double step_s = 0.0;

    /// Default step T/2000.
    static IntegratorConfig default_for(const GaitParams& gait) {
        return IntegratorConfig{gait.period_s / 2000.0};
    }

    /// Requires 0 < step <= T/100.
    void validate(const GaitParams& gait) const;
};

/// One RK4 step of theta'' = forcing(t) over [t, t+h].
/// Returns the advanced (theta, omega).
template <typename Forcing>
std::pair<double, double> rk4_step(Forcing&& forcing, double t, double h,
                                   double theta, double omega) {
    const double k1 = forcing(t);
    const double k2 = forcing(t + h / 2.0);
    const double k3 = k2;
    const double k4 = forcing(t + h);

    const double l1 = omega;
    const double l2 = omega + h / 2.0 * k1;
    const double l3 = omega + h / 2.0 * k2;
    const double l4 = omega + h * k3;

    return {theta + h / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4),
            omega + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)};
}

/// Integrates theta'' = coeff * (lead_m - distance(t)) over [0, T/2] from the
/// given initial scalar state. Steps are split at profile knots so no step
/// straddles a derivative discontinuity. Samples are emitted on the full
/// integration grid, endpoints included.
std::vector<RotationSample> integrate_half_cycle(double coeff, const GaitParams& gait,
                                                 const VelocityProfile& profile,
                                                 const IntegratorConfig& config,
                                                 double lead_m, double theta0_rad,
                                                 double omega0_rad_s);

/// The brute-force counterpart of the closed forms: zero initial state and
/// the gait's own initial lead x1 * S.
std::vector<RotationSample> integrate_rotation(double coeff, const GaitParams& gait,
                                               const VelocityProfile& profile,
                                               const IntegratorConfig& config);

} // namespace trot
