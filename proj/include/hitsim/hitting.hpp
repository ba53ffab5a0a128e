#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hitsim/processes.hpp"

namespace hitsim {

/// Threshold selection: either the exact (1-rho)-quantile of the process
/// marginal, or an absolute level u.
class ThresholdSpec {
public:
    static ThresholdSpec quantile(double rho);
    static ThresholdSpec absolute(double u);

    bool is_quantile() const noexcept { return is_quantile_; }
    double rho() const;  // quantile mode only

    /// Resolve to a numeric threshold for the given process.
    double resolve(const ProcessSpec& spec) const;

private:
    ThresholdSpec(bool q, double v) : is_quantile_(q), value_(v) {}
    bool is_quantile_;
    double value_;
};

/// Ordered exceedance indices of one path over a threshold. Indices are
/// 1-based: first() == 1 means X_1 already exceeds.
struct HittingRecord {
    std::vector<std::int64_t> exceedance_indices;
    std::vector<std::int64_t> inter_gaps;  // differences of consecutive indices

    std::optional<std::int64_t> first() const {
        if (exceedance_indices.empty()) return std::nullopt;
        return exceedance_indices.front();
    }
    std::optional<std::int64_t> second() const {
        if (exceedance_indices.size() < 2) return std::nullopt;
        return exceedance_indices[1];
    }
};

/// First k exceedance indices (fewer if the path has fewer). Exceedance is
/// strict: X_i > u.
HittingRecord hitting_times(const SamplePath& path, double u, std::int64_t k);

/// All gaps between consecutive exceedances of the whole path.
std::vector<std::int64_t> inter_exceedance_gaps(const SamplePath& path, double u);

/// First hitting index j+1 provided the cumulative inter-arrival time
/// S_{j+1} = Y_1 + ... + Y_j stays within the horizon; nullopt otherwise.
std::optional<std::int64_t> timed_first_hitting(const SamplePath& path, double u, double horizon);

/// Monte Carlo pmf over support 1..j_max plus an overflow bucket holding
/// everything beyond j_max (censored paths included).
struct EmpiricalPmf {
    std::vector<std::int64_t> counts;  // counts[j-1] = #{statistic == j}
    std::int64_t overflow = 0;
    std::int64_t paths = 0;

    std::int64_t j_max() const { return static_cast<std::int64_t>(counts.size()); }
    double prob(std::int64_t j) const {
        return static_cast<double>(counts[static_cast<std::size_t>(j - 1)]) /
               static_cast<double>(paths);
    }
    double std_error(std::int64_t j) const;
    double overflow_prob() const {
        return static_cast<double>(overflow) / static_cast<double>(paths);
    }
    /// Overflow mass above 1% is flagged (reported, not fatal).
    bool overflow_flagged() const { return overflow_prob() > 0.01; }
    /// Mean of the statistic over non-overflowed paths.
    double mean_observed() const;
};

/// Joint counts over the grid (j, m) in [1, j_max] x [1, m_max]; everything
/// else lands in off_grid.
struct JointPmf {
    std::int64_t j_max = 0;
    std::int64_t m_max = 0;
    std::vector<std::int64_t> counts;  // (j-1)*m_max + (m-1)
    std::int64_t off_grid = 0;
    std::int64_t paths = 0;

    std::int64_t count(std::int64_t j, std::int64_t m) const {
        return counts[static_cast<std::size_t>((j - 1) * m_max + (m - 1))];
    }
    double prob(std::int64_t j, std::int64_t m) const {
        return static_cast<double>(count(j, m)) / static_cast<double>(paths);
    }
};

struct McConfig {
    ProcessSpec process = ProcessSpec::iid_frechet();
    ThresholdSpec threshold = ThresholdSpec::quantile(0.5);
    std::int64_t paths = 100000;
    std::int64_t path_len = 1000;
    std::uint64_t master_seed = 1;
    int threads = 0;  // 0 = hardware concurrency; result independent of this
    std::int64_t burn_in = 0;

    void validate() const;
};

/// Distribution of the first hitting time T*.
EmpiricalPmf mc_first_hitting_pmf(const McConfig& config);

/// Distribution of the second hitting time T**.
EmpiricalPmf mc_second_hitting_pmf(const McConfig& config);

/// Joint distribution of (T*, T** - T*).
JointPmf mc_joint_first_gap_pmf(const McConfig& config, std::int64_t j_max, std::int64_t m_max);

/// Distribution of the timed first hitting time over horizon T, with iid
/// Pareto inter-arrivals drawn from the same per-path stream.
EmpiricalPmf mc_timed_first_hitting_pmf(const McConfig& config, const InterArrivalSpec& arrivals,
                                        double horizon);

}  // namespace hitsim
