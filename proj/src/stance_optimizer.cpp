#include "trot/stance_optimizer.hpp"

#include <cmath>
#include <string>

namespace trot {

namespace {

double theta_at_exchange_for_lead(double coeff, const GaitParams& gait,
                                  const VelocityProfile& profile,
                                  const IntegratorConfig& config, double lead_m) {
    return integrate_half_cycle(coeff, gait, profile, config, lead_m, 0.0, 0.0)
        .back()
        .theta_rad;
}

} // namespace

void SweepSpec::validate() const {
    body.validate();
    gait.validate();
    double prev = 0.0;
    bool first = true;
    for (double x1 : x1_values) {
        if (!(x1 >= 0.0) || !(x1 <= 0.5)) {
            throw DomainError("sweep x1 value " + std::to_string(x1) +
                              " outside [0, 0.5]");
        }
        if (!first && x1 < prev) {
            throw DomainError("sweep x1 values must be nondecreasing");
        }
        prev = x1;
        first = false;
    }
}

double optimal_x1_constant() {
    return 1.0 / 6.0;
}

OptimizationResult optimal_x1(const GaitParams& gait, const BodyParams& body,
                              const SupportDiagonal& diagonal,
                              const VelocityProfile& profile,
                              std::optional<IntegratorConfig> config) {
    gait.validate();
    const double coeff = tipping_coefficient(body, diagonal.sin_alpha);
    const IntegratorConfig cfg = config.value_or(IntegratorConfig::default_for(gait));

    const double stride = gait.stride_m;
    const double theta_lo = theta_at_exchange_for_lead(coeff, gait, profile, cfg, 0.0);
    const double theta_hi =
        theta_at_exchange_for_lead(coeff, gait, profile, cfg, 0.5 * stride);

    const double slope = theta_hi - theta_lo; // = coeff*S*T^2/8 * 0.5, always > 0
    if (!(slope > 0.0) || !std::isfinite(slope)) {
        throw NumericError("exchange rotation is not increasing in x1");
    }
    const double x1_star = -0.5 * theta_lo / slope;

    OptimizationResult result;
    result.x1_star = x1_star;
    result.residual_rad =
        theta_at_exchange_for_lead(coeff, gait, profile, cfg, x1_star * stride);
    result.in_range = x1_star >= 0.0 && x1_star <= 0.5;

    // Affinity makes the linear solve exact; a residual above the
    // scale-aware tolerance means the premise failed.
    const double tol = 1e-9 * coeff * stride * gait.period_s * gait.period_s;
    if (result.in_range && !(std::abs(result.residual_rad) <= tol)) {
        throw NumericError("optimizer residual " + std::to_string(result.residual_rad) +
                           " rad exceeds tolerance " + std::to_string(tol));
    }
    return result;
}

std::vector<SweepRow> sweep_x1(const SweepSpec& spec, const VelocityProfile& profile,
                               std::optional<IntegratorConfig> config) {
    spec.validate();
    const double coeff = tipping_coefficient(spec.body, spec.diagonal.sin_alpha);
    const IntegratorConfig cfg = config.value_or(IntegratorConfig::default_for(spec.gait));

    std::vector<SweepRow> rows;
    rows.reserve(spec.x1_values.size());
    for (double x1 : spec.x1_values) {
        SweepRow row;
        row.x1 = x1;
        try {
            GaitParams gait = spec.gait;
            gait.x1 = x1;
            if (profile.kind() == VelocityProfile::Kind::Constant) {
                row.theta_exchange_rad = rotation_at_exchange(coeff, gait);
            } else {
                row.theta_exchange_rad = theta_at_exchange_for_lead(
                    coeff, gait, profile, cfg, x1 * gait.stride_m);
            }
            const AttitudeState att =
                decompose_attitude(row.theta_exchange_rad, spec.diagonal);
            row.roll_rad = att.roll_rad;
            row.pitch_rad = att.pitch_rad;
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace trot
