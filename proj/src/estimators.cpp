#include "hitsim/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hitsim/errors.hpp"
#include "hitsim/hitting.hpp"

namespace hitsim {

double empirical_quantile(std::span<const double> data, double level) {
    if (data.empty()) throw DataError("empirical_quantile: data is empty");
    if (!(level > 0.0) || !(level < 1.0))
        throw std::domain_error("empirical_quantile: level must lie in (0, 1)");
    const auto n = static_cast<std::int64_t>(data.size());
    std::int64_t rank = static_cast<std::int64_t>(
        std::ceil(level * static_cast<double>(n)));
    rank = std::clamp<std::int64_t>(rank, 1, n);
    std::vector<double> work(data.begin(), data.end());
    auto nth = work.begin() + (rank - 1);
    std::nth_element(work.begin(), nth, work.end());
    return *nth;
}

ThetaEstimate intervals_estimator(std::span<const std::int64_t> gaps) {
    const auto n = static_cast<std::int64_t>(gaps.size());
    if (n < 2) throw DataError("intervals_estimator: needs at least 2 inter-exceedance gaps");

    std::int64_t max_gap = 0;
    double sum = 0.0, sum_sq = 0.0, sum_shift = 0.0, sum_shift_prod = 0.0;
    for (std::int64_t t : gaps) {
        if (t < 1) throw DataError("intervals_estimator: gaps must be >= 1");
        max_gap = std::max(max_gap, t);
        const double td = static_cast<double>(t);
        sum += td;
        sum_sq += td * td;
        sum_shift += td - 1.0;
        sum_shift_prod += (td - 1.0) * (td - 2.0);
    }

    ThetaEstimate est;
    est.n_exceedances = n + 1;
    double raw;
    if (max_gap <= 2) {
        est.used_variant = IntervalsVariant::basic;
        if (sum_sq == 0.0) throw DegenerateError("intervals_estimator: zero denominator");
        raw = 2.0 * sum * sum / (static_cast<double>(n) * sum_sq);
    } else {
        est.used_variant = IntervalsVariant::shifted;
        if (sum_shift_prod == 0.0)
            throw DegenerateError("intervals_estimator: zero denominator");
        raw = 2.0 * sum_shift * sum_shift / (static_cast<double>(n) * sum_shift_prod);
    }
    est.theta_hat = std::min(1.0, raw);
    return est;
}

ThetaEstimate estimate_theta(std::span<const double> data, double rho) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::domain_error("estimate_theta: rho must lie in (0, 1)");
    const double u = empirical_quantile(data, 1.0 - rho);
    SamplePath path;
    path.values.assign(data.begin(), data.end());
    const auto gaps = inter_exceedance_gaps(path, u);
    auto est = intervals_estimator(gaps);
    est.threshold_u = u;
    return est;
}

AcfResult heavy_acf(std::span<const double> data, std::int64_t max_lag) {
    const auto n = static_cast<std::int64_t>(data.size());
    if (n == 0) throw DataError("heavy_acf: data is empty");
    if (max_lag < 0 || max_lag >= n)
        throw std::domain_error("heavy_acf: max_lag must satisfy 0 <= max_lag < n");

    double denom = 0.0;
    for (double x : data) denom += x * x;
    if (denom == 0.0) throw DegenerateError("heavy_acf: all-zero data");

    AcfResult result;
    result.values.resize(static_cast<std::size_t>(max_lag) + 1);
    result.values[0] = 1.0;
    for (std::int64_t j = 1; j <= max_lag; ++j) {
        double num = 0.0;
        for (std::int64_t t = 0; t + j < n; ++t) num += data[static_cast<std::size_t>(t)] *
                                                       data[static_cast<std::size_t>(t + j)];
        result.values[static_cast<std::size_t>(j)] = num / denom;
    }
    return result;
}

}  // namespace hitsim
