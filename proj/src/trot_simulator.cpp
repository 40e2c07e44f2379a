#include "trot/trot_simulator.hpp"

#include <cmath>

namespace trot {

void SimConfig::validate() const {
    if (num_periods_max < 1) {
        throw DomainError("num_periods_max must be at least 1");
    }
    if (!(stability_threshold_rad > 0.0)) {
        throw DomainError("stability_threshold_rad must be positive");
    }
}

CarriedState exchange_support(const BodyState& state, const SupportDiagonal& new_diag) {
    if (!(new_diag.sin_alpha > 0.0)) {
        throw GeometryError("degenerate support diagonal at exchange");
    }
    return CarriedState{state.attitude, state.angular_rate_rad_s.dot(new_diag.axis3())};
}

CycleReport run_trot(const BodyParams& body, const GaitParams& gait, const FootPlan& plan,
                     const VelocityProfile& profile, const SimConfig& config) {
    body.validate();
    gait.validate();
    config.validate();

    const SupportDiagonal diag_first = diagonal_of(plan, config.first_phase);
    const SupportDiagonal diag_second = diagonal_of(plan, other(config.first_phase));
    const double coeff_first = tipping_coefficient(body, diag_first.sin_alpha);
    const double coeff_second = tipping_coefficient(body, diag_second.sin_alpha);
    const IntegratorConfig integ =
        config.integrator.value_or(IntegratorConfig::default_for(gait));
    integ.validate(gait);

    const double lead = gait.x1 * gait.stride_m;
    const double half = gait.half_period_s();
    const int half_cycles_max = 2 * config.num_periods_max;

    CycleReport report;
    Eigen::Matrix3d attitude = Eigen::Matrix3d::Identity();
    double carried_rate = 0.0;

    for (int hc = 0; hc < half_cycles_max; ++hc) {
        const bool even = hc % 2 == 0;
        const SupportDiagonal& diag = even ? diag_first : diag_second;
        const double coeff = even ? coeff_first : coeff_second;

        const auto samples =
            integrate_half_cycle(coeff, gait, profile, integ, lead, 0.0, carried_rate);

        for (const RotationSample& s : samples) {
            const Eigen::Matrix3d rot = axis_angle_matrix(diag, s.theta_rad) * attitude;
            const AttitudeState att = attitude_from_matrix(rot);
            report.trace.push_back({hc * half + s.t_s, s.theta_rad, att, hc});
            if (std::abs(att.roll_rad) > config.stability_threshold_rad ||
                std::abs(att.pitch_rad) > config.stability_threshold_rad) {
                report.stable_period_count = hc / 2;
                report.termination = Termination::ThresholdExceeded;
                return report;
            }
        }

        const RotationSample& end = samples.back();
        attitude = axis_angle_matrix(diag, end.theta_rad) * attitude;

        const SupportDiagonal& next = even ? diag_second : diag_first;
        const BodyState state{attitude, end.omega_rad_s * diag.axis3()};
        const CarriedState carried = exchange_support(state, next);
        carried_rate =
            config.exchange_mode == ExchangeMode::ResetRate ? 0.0 : carried.axis_rate_rad_s;

        report.exchanges.push_back({(hc + 1) * half, end.theta_rad,
                                    attitude_from_matrix(attitude), carried_rate});
    }

    report.stable_period_count = config.num_periods_max;
    report.termination = Termination::CapReached;
    return report;
}

} // namespace trot
