#include "trot/dynamics_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace trot {

void IntegratorConfig::validate(const GaitParams& gait) const {
    gait.validate();
    if (!(step_s > 0.0) || !(step_s <= gait.period_s / 100.0)) {
        throw DomainError("integrator step must lie in (0, T/100]");
    }
}

std::vector<RotationSample> integrate_half_cycle(double coeff, const GaitParams& gait,
                                                 const VelocityProfile& profile,
                                                 const IntegratorConfig& config,
                                                 double lead_m, double theta0_rad,
                                                 double omega0_rad_s) {
    config.validate(gait);
    const double half = gait.half_period_s();
    if (std::abs(profile.duration_s() - gait.period_s) > 1e-9 * gait.period_s ||
        std::abs(profile.total_distance_m() - gait.stride_m) > 1e-9 * gait.stride_m) {
        throw ProfileError("velocity profile was built for a different gait");
    }

    const auto forcing = [&](double t) {
        return coeff * (lead_m - profile.distance_travelled(t));
    };

    // Segment boundaries: 0, interior profile knots below T/2, T/2.
    std::vector<double> breaks{0.0};
    for (double k : profile.interior_knot_times()) {
        if (k > 0.0 && k < half) {
            breaks.push_back(k);
        }
    }
    breaks.push_back(half);
    std::sort(breaks.begin(), breaks.end());

    std::vector<RotationSample> samples;
    double theta = theta0_rad;
    double omega = omega0_rad_s;
    samples.push_back({0.0, forcing(0.0), omega, theta});

    for (size_t seg = 1; seg < breaks.size(); ++seg) {
        const double seg_start = breaks[seg - 1];
        const double seg_len = breaks[seg] - seg_start;
        const auto steps = std::max<long>(
            1, static_cast<long>(std::ceil(seg_len / config.step_s - 1e-12)));
        const double h = seg_len / static_cast<double>(steps);
        double t_lo = seg_start;
        for (long i = 0; i < steps; ++i) {
            // Land the last step exactly on the boundary so the forcing is
            // never evaluated outside [0, T/2].
            const double t_hi = i + 1 == steps ? breaks[seg]
                                               : seg_start + h * static_cast<double>(i + 1);
            std::tie(theta, omega) = rk4_step(forcing, t_lo, t_hi - t_lo, theta, omega);
            if (!std::isfinite(theta) || !std::isfinite(omega)) {
                throw NumericError("integration diverged at t = " + std::to_string(t_hi));
            }
            samples.push_back({t_hi, forcing(t_hi), omega, theta});
            t_lo = t_hi;
        }
    }
    return samples;
}

std::vector<RotationSample> integrate_rotation(double coeff, const GaitParams& gait,
                                               const VelocityProfile& profile,
                                               const IntegratorConfig& config) {
    return integrate_half_cycle(coeff, gait, profile, config,
                                gait.x1 * gait.stride_m, 0.0, 0.0);
}

} // namespace trot
