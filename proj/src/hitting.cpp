#include "hitsim/hitting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hitsim {

ThresholdSpec ThresholdSpec::quantile(double rho) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::domain_error("threshold: rho must lie in (0, 1)");
    return ThresholdSpec(true, rho);
}

ThresholdSpec ThresholdSpec::absolute(double u) { return ThresholdSpec(false, u); }

double ThresholdSpec::rho() const {
    if (!is_quantile_) throw std::logic_error("threshold: not in quantile mode");
    return value_;
}

double ThresholdSpec::resolve(const ProcessSpec& spec) const {
    return is_quantile_ ? spec.marginal_quantile(value_) : value_;
}

HittingRecord hitting_times(const SamplePath& path, double u, std::int64_t k) {
    if (k < 1) throw std::domain_error("hitting_times: k must be >= 1");
    HittingRecord record;
    for (std::size_t i = 0; i < path.values.size(); ++i) {
        if (path.values[i] > u) {
            record.exceedance_indices.push_back(static_cast<std::int64_t>(i) + 1);
            if (record.exceedance_indices.size() == static_cast<std::size_t>(k)) break;
        }
    }
    for (std::size_t i = 1; i < record.exceedance_indices.size(); ++i)
        record.inter_gaps.push_back(record.exceedance_indices[i] -
                                    record.exceedance_indices[i - 1]);
    return record;
}

std::vector<std::int64_t> inter_exceedance_gaps(const SamplePath& path, double u) {
    std::vector<std::int64_t> gaps;
    std::int64_t last = 0;
    for (std::size_t i = 0; i < path.values.size(); ++i) {
        if (path.values[i] > u) {
            const std::int64_t idx = static_cast<std::int64_t>(i) + 1;
            if (last != 0) gaps.push_back(idx - last);
            last = idx;
        }
    }
    return gaps;
}

std::optional<std::int64_t> timed_first_hitting(const SamplePath& path, double u, double horizon) {
    if (!path.interarrivals)
        throw std::domain_error("timed_first_hitting: path has no inter-arrival times");
    double elapsed = 0.0;  // S_j: arrival time of X_j relative to X_1
    for (std::size_t i = 0; i < path.values.size(); ++i) {
        if (i > 0) elapsed += (*path.interarrivals)[i - 1];
        if (path.values[i] > u) {
            if (elapsed <= horizon) return static_cast<std::int64_t>(i) + 1;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

double EmpiricalPmf::std_error(std::int64_t j) const {
    const double p = prob(j);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(paths));
}

double EmpiricalPmf::mean_observed() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        sum += static_cast<double>(i + 1) * static_cast<double>(counts[i]);
    const std::int64_t observed = paths - overflow;
    if (observed <= 0) return std::numeric_limits<double>::quiet_NaN();
    return sum / static_cast<double>(observed);
}

void McConfig::validate() const {
    if (paths < 1) throw std::domain_error("mc: paths must be >= 1");
    if (path_len < 1) throw std::domain_error("mc: path_len must be >= 1");
    if (threads < 0) throw std::domain_error("mc: threads must be >= 0");
    if (burn_in < 0) throw std::domain_error("mc: burn_in must be >= 0");
}

namespace {

int resolve_threads(int requested, std::int64_t paths) {
    int t = requested > 0 ? requested
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<std::int64_t>(t) > paths) t = static_cast<int>(paths);
    return t;
}

// Runs fn(path_index, accumulator&) for every path index, partitioned over
// workers. Accumulators are merged by operator+=; since every per-path
// result depends only on (master_seed, path_index) and merging is a
// commutative count addition, the result does not depend on the partition.
template <typename Accumulator, typename PerPath>
Accumulator run_paths(const McConfig& config, Accumulator zero, PerPath fn) {
    config.validate();
    const int threads = resolve_threads(config.threads, config.paths);
    std::vector<Accumulator> partial(static_cast<std::size_t>(threads), zero);

    auto worker = [&](int w) {
        Accumulator& acc = partial[static_cast<std::size_t>(w)];
        for (std::int64_t p = w; p < config.paths; p += threads) fn(static_cast<std::uint64_t>(p), acc);
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    Accumulator total = std::move(partial.front());
    for (std::size_t w = 1; w < partial.size(); ++w) total += partial[w];
    return total;
}

struct CountAcc {
    std::vector<std::int64_t> counts;
    std::int64_t overflow = 0;

    CountAcc& operator+=(const CountAcc& other) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
        overflow += other.overflow;
        return *this;
    }
};

EmpiricalPmf to_pmf(CountAcc acc, std::int64_t paths) {
    EmpiricalPmf pmf;
    pmf.counts = std::move(acc.counts);
    pmf.overflow = acc.overflow;
    pmf.paths = paths;
    return pmf;
}

}  // namespace

EmpiricalPmf mc_first_hitting_pmf(const McConfig& config) {
    const double u = config.threshold.resolve(config.process);
    CountAcc zero{std::vector<std::int64_t>(static_cast<std::size_t>(config.path_len), 0), 0};
    auto acc = run_paths(config, zero, [&](std::uint64_t p, CountAcc& a) {
        ProcessSampler sampler(config.process, RngStream(config.master_seed, p), config.burn_in);
        for (std::int64_t j = 1; j <= config.path_len; ++j) {
            if (sampler.next() > u) {
                ++a.counts[static_cast<std::size_t>(j - 1)];
                return;
            }
        }
        ++a.overflow;
    });
    return to_pmf(std::move(acc), config.paths);
}

EmpiricalPmf mc_second_hitting_pmf(const McConfig& config) {
    const double u = config.threshold.resolve(config.process);
    CountAcc zero{std::vector<std::int64_t>(static_cast<std::size_t>(config.path_len), 0), 0};
    auto acc = run_paths(config, zero, [&](std::uint64_t p, CountAcc& a) {
        ProcessSampler sampler(config.process, RngStream(config.master_seed, p), config.burn_in);
        int seen = 0;
        for (std::int64_t j = 1; j <= config.path_len; ++j) {
            if (sampler.next() > u && ++seen == 2) {
                ++a.counts[static_cast<std::size_t>(j - 1)];
                return;
            }
        }
        ++a.overflow;
    });
    return to_pmf(std::move(acc), config.paths);
}

JointPmf mc_joint_first_gap_pmf(const McConfig& config, std::int64_t j_max, std::int64_t m_max) {
    if (j_max < 1 || m_max < 1)
        throw std::domain_error("mc_joint: grid bounds must be >= 1");
    const double u = config.threshold.resolve(config.process);
    // the second exceedance must be reachable within the path
    const std::int64_t steps = std::max(config.path_len, j_max + m_max);

    CountAcc zero{std::vector<std::int64_t>(static_cast<std::size_t>(j_max * m_max), 0), 0};
    auto acc = run_paths(config, zero, [&](std::uint64_t p, CountAcc& a) {
        ProcessSampler sampler(config.process, RngStream(config.master_seed, p), config.burn_in);
        std::int64_t first = 0;
        for (std::int64_t j = 1; j <= steps; ++j) {
            if (sampler.next() > u) {
                if (first == 0) {
                    first = j;
                    if (first > j_max) break;  // off the grid whatever follows
                } else {
                    const std::int64_t gap = j - first;
                    if (gap <= m_max) {
                        ++a.counts[static_cast<std::size_t>((first - 1) * m_max + (gap - 1))];
                        return;
                    }
                    break;
                }
            }
        }
        ++a.overflow;
    });

    JointPmf joint;
    joint.j_max = j_max;
    joint.m_max = m_max;
    joint.counts = std::move(acc.counts);
    joint.off_grid = acc.overflow;
    joint.paths = config.paths;
    return joint;
}

EmpiricalPmf mc_timed_first_hitting_pmf(const McConfig& config, const InterArrivalSpec& arrivals,
                                        double horizon) {
    arrivals.validate();
    if (!(horizon > 0.0)) throw std::domain_error("mc_timed: horizon must be > 0");
    const double u = config.threshold.resolve(config.process);
    // {X} and {Y} are mutually independent: arrivals use their own stream family
    std::uint64_t derive = config.master_seed;
    const std::uint64_t arrivals_seed = splitmix64(derive);
    CountAcc zero{std::vector<std::int64_t>(static_cast<std::size_t>(config.path_len), 0), 0};
    auto acc = run_paths(config, zero, [&](std::uint64_t p, CountAcc& a) {
        ProcessSampler sampler(config.process, RngStream(config.master_seed, p), config.burn_in);
        RngStream arrival_stream(arrivals_seed, p);
        double elapsed = 0.0;
        for (std::int64_t j = 1; j <= config.path_len; ++j) {
            if (sampler.next() > u) {
                if (elapsed <= horizon) ++a.counts[static_cast<std::size_t>(j - 1)];
                else ++a.overflow;  // hit landed beyond the horizon
                return;
            }
            elapsed += pareto_sample(arrivals, arrival_stream);
        }
        ++a.overflow;
    });
    return to_pmf(std::move(acc), config.paths);
}

}  // namespace hitsim
