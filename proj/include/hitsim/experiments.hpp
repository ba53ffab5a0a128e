#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hitsim/estimators.hpp"
#include "hitsim/hitting.hpp"
#include "hitsim/table.hpp"
#include "hitsim/theory.hpp"

namespace hitsim {

enum class StatisticKind { first, second, joint_first_gap, timed };

std::string to_string(StatisticKind kind);

/// Fully resolved experiment description; a config plus the code version
/// determines every output bit.
struct ExperimentConfig {
    ProcessSpec process = ProcessSpec::iid_frechet();
    ThresholdSpec threshold = ThresholdSpec::quantile(0.5);
    StatisticKind statistic = StatisticKind::first;
    std::int64_t paths = 100000;
    std::int64_t path_len = 0;  // 0 = auto, ceil(50/(theta rho))
    std::uint64_t master_seed = 1;
    int threads = 0;
    std::int64_t burn_in = 0;
    std::optional<InterArrivalSpec> interarrivals;  // timed statistic only
    double horizon = std::numeric_limits<double>::infinity();
    std::int64_t theory_n = 0;  // AR(1) sample-size scale; 0 = round(1/(1-u))

    /// Mean hitting time is about 1/(theta rho); the default path length
    /// leaves negligible overflow mass.
    std::int64_t resolved_path_len() const;
    double resolved_rho() const;  // exceedance probability of the threshold
    McConfig mc() const;
    nlohmann::json to_json() const;
};

/// Raw per-path hitting statistics (first, second, gap; 0 = not observed).
ExperimentTable cmd_simulate(const ExperimentConfig& config);

/// Empirical first-hitting pmf against every applicable closed-form model,
/// with per-j z-scores.
ExperimentTable cmd_compare(const ExperimentConfig& config);

ExperimentTable cmd_estimate_theta(std::span<const double> data, double rho,
                                   nlohmann::json source_meta = {});

/// Theta estimation on one simulated path of length path_len.
ExperimentTable cmd_estimate_theta(const ExperimentConfig& config, double rho);

ExperimentTable cmd_acf(std::span<const double> data, std::int64_t max_lag,
                        nlohmann::json source_meta = {});

struct FigureParams {
    // figures 1 and 2
    double theta = 0.1;
    std::vector<std::int64_t> j_values = {5, 20};
    std::vector<std::int64_t> j0_values = {0, 5};
    std::vector<double> rho_grid;  // empty = 0.005..0.995 step 0.005
    // figure 3
    double rho = 0.05;
    std::int64_t j0_max = 100;
    std::vector<std::pair<std::string, double>> dataset_thetas = {{"enron", 0.22},
                                                                  {"dbpl", 0.15}};
    // figure 4
    std::vector<std::pair<std::string, std::vector<double>>> series;
    std::int64_t max_lag = 100;
};

/// One column per plotted curve over the figure's abscissa grid.
ExperimentTable cmd_reproduce_figure(int which, const FigureParams& params);

}  // namespace hitsim
