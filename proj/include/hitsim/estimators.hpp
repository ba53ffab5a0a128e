#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hitsim {

enum class IntervalsVariant { basic, shifted };

struct ThetaEstimate {
    double theta_hat = 0.0;
    std::int64_t n_exceedances = 0;
    IntervalsVariant used_variant = IntervalsVariant::basic;
    double threshold_u = 0.0;
};

/// Order-statistic quantile with index ceil(level * n), no interpolation:
/// the result is always an observed value.
double empirical_quantile(std::span<const double> data, double level);

/// Intervals estimator of the extremal index from inter-exceedance gaps
/// T_1..T_N. With max T <= 2 the basic moment ratio
/// 2 (sum T)^2 / (N sum T^2) is used, otherwise the shifted variant
/// 2 (sum (T-1))^2 / (N sum (T-1)(T-2)); both are capped at 1.
ThetaEstimate intervals_estimator(std::span<const std::int64_t> gaps);

/// Convenience pipeline: empirical-quantile threshold at level 1-rho,
/// inter-exceedance gaps, intervals estimator.
ThetaEstimate estimate_theta(std::span<const double> data, double rho);

struct AcfResult {
    std::vector<double> values;  // values[lag], lag = 0..max_lag; values[0] == 1
    std::int64_t max_lag() const { return static_cast<std::int64_t>(values.size()) - 1; }
};

/// Non-centered sample ACF for heavy-tailed data:
/// acf(j) = sum_{t=1}^{n-j} X_t X_{t+j} / sum_{t=1}^n X_t^2.
AcfResult heavy_acf(std::span<const double> data, std::int64_t max_lag);

}  // namespace hitsim
