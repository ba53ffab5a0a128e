#include "hitsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hitsim/errors.hpp"

namespace hitsim {

namespace {

nlohmann::json process_json(const ProcessSpec& spec) {
    nlohmann::json j;
    j["name"] = spec.name();
    j["theta"] = spec.theta();
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArmaxSpec>) {
                j["alpha"] = s.alpha;
            } else if constexpr (std::is_same_v<T, MovingMaxSpec>) {
                j["weights"] = s.weights;
            } else if constexpr (std::is_same_v<T, Ar1UniformSpec>) {
                j["r"] = s.r;
            }
        },
        spec.variant());
    return j;
}

double model_std_error(double p, std::int64_t paths) {
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(paths));
}

}  // namespace

std::string to_string(StatisticKind kind) {
    switch (kind) {
        case StatisticKind::first: return "first";
        case StatisticKind::second: return "second";
        case StatisticKind::joint_first_gap: return "joint_first_gap";
        case StatisticKind::timed: return "timed";
    }
    return "?";
}

std::int64_t ExperimentConfig::resolved_path_len() const {
    if (path_len > 0) return path_len;
    const double rate = process.theta() * resolved_rho();
    if (!(rate > 0.0)) throw ConfigError("config: cannot derive path_len, theta*rho <= 0");
    return static_cast<std::int64_t>(std::ceil(50.0 / rate));
}

double ExperimentConfig::resolved_rho() const {
    if (threshold.is_quantile()) return threshold.rho();
    const double u = threshold.resolve(process);
    return 1.0 - process.marginal_cdf(u);
}

McConfig ExperimentConfig::mc() const {
    McConfig mc;
    mc.process = process;
    mc.threshold = threshold;
    mc.paths = paths;
    mc.path_len = resolved_path_len();
    mc.master_seed = master_seed;
    mc.threads = threads;
    mc.burn_in = burn_in;
    return mc;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["process"] = process_json(process);
    if (threshold.is_quantile()) {
        j["threshold"] = {{"mode", "quantile"}, {"rho", threshold.rho()}};
    } else {
        j["threshold"] = {{"mode", "absolute"}, {"u", threshold.resolve(process)}};
    }
    j["resolved_threshold_u"] = threshold.resolve(process);
    j["statistic"] = to_string(statistic);
    j["paths"] = paths;
    j["path_len"] = resolved_path_len();
    j["master_seed"] = master_seed;
    j["threads"] = threads;
    j["burn_in"] = burn_in;
    if (interarrivals) {
        j["interarrivals"] = {{"alpha_tail", interarrivals->alpha_tail},
                              {"scale", interarrivals->scale}};
        j["horizon"] = horizon;
    }
    if (theory_n > 0) j["theory_n"] = theory_n;
    return j;
}

ExperimentTable cmd_simulate(const ExperimentConfig& config) {
    const double u = config.threshold.resolve(config.process);
    const std::int64_t len = config.resolved_path_len();

    ExperimentTable table;
    table.columns = {"path", "first", "second", "gap"};
    table.metadata = config.to_json();
    table.rows.reserve(static_cast<std::size_t>(config.paths));
    for (std::int64_t p = 0; p < config.paths; ++p) {
        const auto path = simulate(config.process, len,
                                   RngStream(config.master_seed, static_cast<std::uint64_t>(p)),
                                   config.burn_in);
        const auto record = hitting_times(path, u, 2);
        const double first = static_cast<double>(record.first().value_or(0));
        const double second = static_cast<double>(record.second().value_or(0));
        const double gap = record.inter_gaps.empty()
                               ? 0.0
                               : static_cast<double>(record.inter_gaps.front());
        table.append_row({static_cast<double>(p), first, second, gap});
    }
    return table;
}

ExperimentTable cmd_compare(const ExperimentConfig& config) {
    const auto mc = config.mc();
    const EmpiricalPmf pmf = config.statistic == StatisticKind::second
                                 ? mc_second_hitting_pmf(mc)
                                 : mc_first_hitting_pmf(mc);

    theory::TheoryParams tp;
    tp.theta = config.process.theta();
    tp.rho = config.resolved_rho();

    const bool is_ar1 = std::holds_alternative<Ar1UniformSpec>(config.process.variant());
    const double u = config.threshold.resolve(config.process);
    int ar1_r = 0;
    std::int64_t ar1_n = 0, j_limit = pmf.j_max();
    if (is_ar1) {
        ar1_r = std::get<Ar1UniformSpec>(config.process.variant()).r;
        ar1_n = config.theory_n > 0
                    ? config.theory_n
                    : static_cast<std::int64_t>(std::llround(1.0 / (1.0 - u)));
        j_limit = std::min(j_limit, theory::ar1_m_minus_one(u, ar1_r));
    }

    ExperimentTable table;
    table.columns = {"j",   "empirical", "stderr",  "psi_model",
                     "limit_geometric", "exact",    "z_exact"};
    table.metadata = config.to_json();
    table.metadata["overflow_prob"] = pmf.overflow_prob();
    table.metadata["overflow_flagged"] = pmf.overflow_flagged();
    for (std::int64_t j = 1; j <= j_limit; ++j) {
        const double emp = pmf.prob(j);
        const double se = pmf.std_error(j);
        const double psi = theory::psi_pmf(j, tp);
        const double geo = theory::limit_geometric_pmf(j, tp);
        double exact;
        if (is_ar1) {
            exact = theory::ar1_pmf(j, u, ar1_r, ar1_n);
        } else {
            exact = theory::armax_pmf_exact(j, tp);
        }
        const double z_se = std::max(se, model_std_error(exact, pmf.paths));
        const double z = z_se > 0.0 ? (emp - exact) / z_se : 0.0;
        table.append_row({static_cast<double>(j), emp, se, psi, geo, exact, z});
    }
    return table;
}

ExperimentTable cmd_estimate_theta(std::span<const double> data, double rho,
                                   nlohmann::json source_meta) {
    const auto est = estimate_theta(data, rho);
    ExperimentTable table;
    table.columns = {"theta_hat", "n_exceedances", "threshold_u", "shifted_variant", "rho"};
    table.append_row({est.theta_hat, static_cast<double>(est.n_exceedances), est.threshold_u,
                      est.used_variant == IntervalsVariant::shifted ? 1.0 : 0.0, rho});
    table.metadata = {{"command", "estimate_theta"}, {"rho", rho}, {"n", data.size()}};
    if (!source_meta.is_null()) table.metadata["source"] = std::move(source_meta);
    return table;
}

ExperimentTable cmd_estimate_theta(const ExperimentConfig& config, double rho) {
    const std::int64_t len = config.resolved_path_len();
    const auto path = simulate(config.process, len, RngStream(config.master_seed, 0),
                               config.burn_in);
    auto table = cmd_estimate_theta(path.values, rho, config.to_json());
    return table;
}

ExperimentTable cmd_acf(std::span<const double> data, std::int64_t max_lag,
                        nlohmann::json source_meta) {
    const auto acf = heavy_acf(data, max_lag);
    ExperimentTable table;
    table.columns = {"lag", "acf"};
    for (std::int64_t lag = 0; lag <= acf.max_lag(); ++lag)
        table.append_row({static_cast<double>(lag), acf.values[static_cast<std::size_t>(lag)]});
    table.metadata = {{"command", "acf"}, {"max_lag", max_lag}, {"n", data.size()}};
    if (!source_meta.is_null()) table.metadata["source"] = std::move(source_meta);
    return table;
}

namespace {

std::vector<double> default_rho_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 199; ++i) grid.push_back(0.005 * i);
    return grid;
}

ExperimentTable figure1(const FigureParams& params) {
    const auto grid = params.rho_grid.empty() ? default_rho_grid() : params.rho_grid;
    ExperimentTable table;
    table.columns = {"rho"};
    for (std::int64_t j : params.j_values) {
        table.columns.push_back("exact_j" + std::to_string(j));
        table.columns.push_back("model_j" + std::to_string(j));
    }
    for (double rho : grid) {
        theory::TheoryParams tp;
        tp.theta = params.theta;
        tp.rho = rho;
        std::vector<double> row{rho};
        for (std::int64_t j : params.j_values) {
            row.push_back(theory::armax_pmf_literal(j, tp));
            row.push_back(theory::psi_pmf(j, tp));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ExperimentTable figure2(const FigureParams& params) {
    const auto grid = params.rho_grid.empty() ? default_rho_grid() : params.rho_grid;
    ExperimentTable table;
    table.columns = {"rho", "mean_exact"};
    for (std::int64_t j0 : params.j0_values)
        table.columns.push_back("model_j0_" + std::to_string(j0));
    for (double rho : grid) {
        theory::TheoryParams tp;
        tp.theta = params.theta;
        tp.rho = rho;
        std::vector<double> row{rho, theory::armax_mean_literal(tp)};
        for (std::int64_t j0 : params.j0_values) {
            tp.j0 = j0;
            row.push_back(theory::truncated_mean_model(tp));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ExperimentTable figure3(const FigureParams& params) {
    ExperimentTable table;
    table.columns = {"j0"};
    for (const auto& [label, theta] : params.dataset_thetas)
        table.columns.push_back("mean_model_" + label);
    for (std::int64_t j0 = 0; j0 <= params.j0_max; ++j0) {
        std::vector<double> row{static_cast<double>(j0)};
        for (const auto& [label, theta] : params.dataset_thetas) {
            theory::TheoryParams tp;
            tp.theta = theta;
            tp.rho = params.rho;
            tp.j0 = j0;
            row.push_back(theory::truncated_mean_model(tp));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ExperimentTable figure4(const FigureParams& params) {
    if (params.series.empty())
        throw DataError(
            "figure 4 needs degree data: run `hitsim ingest-degrees` on an edge list and pass "
            "the result via --input");
    ExperimentTable table;
    table.columns = {"lag"};
    std::vector<AcfResult> acfs;
    for (const auto& [label, data] : params.series) {
        table.columns.push_back("acf_" + label);
        acfs.push_back(heavy_acf(data, params.max_lag));
    }
    for (std::int64_t lag = 0; lag <= params.max_lag; ++lag) {
        std::vector<double> row{static_cast<double>(lag)};
        for (const auto& acf : acfs) row.push_back(acf.values[static_cast<std::size_t>(lag)]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

ExperimentTable cmd_reproduce_figure(int which, const FigureParams& params) {
    ExperimentTable table;
    switch (which) {
        case 1: table = figure1(params); break;
        case 2: table = figure2(params); break;
        case 3: table = figure3(params); break;
        case 4: table = figure4(params); break;
        default: throw ConfigError("reproduce-figure: figure must be 1, 2, 3 or 4");
    }
    table.metadata = {{"command", "reproduce_figure"}, {"figure", which}};
    if (which == 1 || which == 2) table.metadata["theta"] = params.theta;
    if (which == 3) {
        table.metadata["rho"] = params.rho;
        for (const auto& [label, theta] : params.dataset_thetas)
            table.metadata["theta_" + label] = theta;
    }
    if (which == 4) table.metadata["max_lag"] = params.max_lag;
    return table;
}

}  // namespace hitsim
