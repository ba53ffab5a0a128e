// hitsim: simulate hitting times of threshold exceedances, evaluate the
// closed-form models, estimate the extremal index and reproduce the
// figure data as CSV.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hitsim/errors.hpp"
#include "hitsim/experiments.hpp"
#include "hitsim/ingest.hpp"

namespace fs = std::filesystem;
using namespace hitsim;

namespace {

struct ProcessFlags {
    std::string process = "iid";
    double alpha = 0.5;
    std::vector<double> weights;
    int r = 2;

    void attach(CLI::App* cmd) {
        cmd->add_option("--process", process, "Process model: armax, mm, ar1, iid")
            ->check(CLI::IsMember({"armax", "mm", "ar1", "iid"}));
        cmd->add_option("--alpha", alpha, "ARMAX dependence parameter in [0,1)");
        cmd->add_option("--weights", weights,
                        "Moving-maxima weights (non-increasing, summing to 1)");
        cmd->add_option("--r", r, "AR(1) noise resolution, integer >= 2");
    }

    ProcessSpec build() const {
        if (process == "armax") return ProcessSpec::armax(alpha);
        if (process == "mm") {
            if (weights.empty()) throw ConfigError("--weights required for --process mm");
            return ProcessSpec::moving_max(weights);
        }
        if (process == "ar1") return ProcessSpec::ar1_uniform(r);
        return ProcessSpec::iid_frechet();
    }
};

struct CommonFlags {
    ProcessFlags process;
    double rho = 0.5;
    std::optional<double> threshold_u;
    std::int64_t paths = 100000;
    std::int64_t path_len = 0;
    std::uint64_t master_seed = 1;
    int threads = 0;
    std::int64_t theory_n = 0;
    std::string output;

    void attach(CLI::App* cmd) {
        process.attach(cmd);
        cmd->add_option("--rho", rho, "Quantile-threshold level in (0,1)");
        cmd->add_option("--threshold-u", threshold_u, "Absolute threshold (overrides --rho)");
        cmd->add_option("--paths", paths, "Number of Monte Carlo paths");
        cmd->add_option("--path-len", path_len,
                        "Path length; 0 derives ceil(50/(theta*rho))");
        cmd->add_option("--master-seed", master_seed, "Master RNG seed");
        cmd->add_option("--threads", threads, "Worker threads; 0 = hardware");
        cmd->add_option("--theory-n", theory_n, "AR(1) sample-size scale n");
        cmd->add_option("--output", output, "Output CSV path")->required();
    }

    ExperimentConfig build() const {
        ExperimentConfig config;
        config.process = process.build();
        config.threshold = threshold_u ? ThresholdSpec::absolute(*threshold_u)
                                       : ThresholdSpec::quantile(rho);
        config.paths = paths;
        config.path_len = path_len;
        config.master_seed = master_seed;
        config.threads = threads;
        config.theory_n = theory_n;
        return config;
    }
};

fs::path resolve_output(const std::string& output) {
    fs::path path(output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("HITSIM_OUTPUT_DIR")) path = fs::path(dir) / path;
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    return path;
}

void emit(ExperimentTable table, const std::string& output) {
    if (!table.metadata.is_null()) table.metadata["written_at"] = std::time(nullptr);
    const auto path = resolve_output(output);
    write_table(table, path);
    std::cout << "wrote " << path.string() << " (" << table.rows.size() << " rows)\n";
}

std::vector<double> read_values(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw DataError("cannot open input file " + input);
    std::string first_line;
    if (!std::getline(in, first_line)) throw DataError("input file is empty: " + input);
    in.clear();
    in.seekg(0);

    const auto start = first_line.find_first_not_of(" \t\r");
    const bool headed = start != std::string::npos &&
                        std::string("+-.0123456789").find(first_line[start]) == std::string::npos;
    std::vector<double> values;
    if (headed) {
        const auto table = read_csv(in);
        values.reserve(table.rows.size());
        for (const auto& row : table.rows) values.push_back(row.front());
    } else {
        double v;
        while (in >> v) values.push_back(v);
        if (!in.eof()) throw DataError("non-numeric token in " + input);
    }
    if (values.empty()) throw DataError("no values in " + input);
    return values;
}

int run(int argc, char** argv) {
    CLI::App app{"Hitting times of threshold exceedances: simulation and models"};
    app.require_subcommand(1);

    // simulate
    CommonFlags sim_flags;
    auto* sim = app.add_subcommand("simulate", "Emit raw hitting statistics per path");
    sim_flags.attach(sim);

    // compare
    CommonFlags cmp_flags;
    std::string cmp_statistic = "first";
    auto* cmp = app.add_subcommand("compare",
                                   "Empirical hitting pmf against the closed-form models");
    cmp_flags.attach(cmp);
    cmp->add_option("--statistic", cmp_statistic, "first or second")
        ->check(CLI::IsMember({"first", "second"}));

    // estimate-theta
    CommonFlags theta_flags;
    std::string theta_input;
    auto* est = app.add_subcommand("estimate-theta",
                                   "Intervals estimator of the extremal index");
    theta_flags.attach(est);
    est->add_option("--input", theta_input,
                    "Data file (numbers or CSV); omitted = simulate one path");

    // acf
    std::string acf_input, acf_output;
    std::int64_t acf_max_lag = 100;
    auto* acf = app.add_subcommand("acf", "Non-centered heavy-tail sample ACF");
    acf->add_option("--input", acf_input, "Data file (numbers or CSV)")->required();
    acf->add_option("--max-lag", acf_max_lag, "Largest lag");
    acf->add_option("--output", acf_output, "Output CSV path")->required();

    // ingest-degrees
    std::string ingest_input, ingest_output;
    auto* ingest = app.add_subcommand("ingest-degrees",
                                      "Edge list to undirected degree sequence CSV");
    ingest->add_option("--input", ingest_input, "Edge list file ('u v' per line)")->required();
    ingest->add_option("--output", ingest_output, "Output CSV path")->required();

    // reproduce-figure
    int fig_which = 1;
    double fig_theta = 0.1, fig_rho = 0.05;
    std::int64_t fig_j0_max = 100, fig_max_lag = 100;
    std::vector<std::string> fig_inputs;
    std::string fig_output;
    auto* fig = app.add_subcommand("reproduce-figure", "Emit one figure's curves as CSV");
    fig->add_option("--which", fig_which, "Figure number 1..4")->required();
    fig->add_option("--theta", fig_theta, "Extremal index for figures 1-2");
    fig->add_option("--rho", fig_rho, "Quantile level for figure 3");
    fig->add_option("--j0-max", fig_j0_max, "Figure 3 abscissa limit");
    fig->add_option("--max-lag", fig_max_lag, "Figure 4 lag limit");
    fig->add_option("--input", fig_inputs,
                    "Figure 4 degree data, label=path (repeatable)");
    fig->add_option("--output", fig_output, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // bad flags are configuration errors; --help lands here too with code 0
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sim->parsed()) {
        emit(cmd_simulate(sim_flags.build()), sim_flags.output);
    } else if (cmp->parsed()) {
        auto config = cmp_flags.build();
        config.statistic =
            cmp_statistic == "second" ? StatisticKind::second : StatisticKind::first;
        emit(cmd_compare(config), cmp_flags.output);
    } else if (est->parsed()) {
        if (!theta_input.empty()) {
            const auto values = read_values(theta_input);
            emit(cmd_estimate_theta(values, theta_flags.rho,
                                    nlohmann::json{{"input", theta_input}}),
                 theta_flags.output);
        } else {
            emit(cmd_estimate_theta(theta_flags.build(), theta_flags.rho), theta_flags.output);
        }
    } else if (acf->parsed()) {
        const auto values = read_values(acf_input);
        emit(cmd_acf(values, acf_max_lag, nlohmann::json{{"input", acf_input}}), acf_output);
    } else if (ingest->parsed()) {
        const auto seq = load_edge_list(ingest_input);
        ExperimentTable table;
        table.columns = {"degree"};
        for (auto d : seq.degrees) table.append_row({static_cast<double>(d)});
        table.metadata = {{"command", "ingest_degrees"},
                          {"input", ingest_input},
                          {"nodes", seq.node_count()},
                          {"degree_convention", "undirected distinct-neighbor, file order"}};
        emit(std::move(table), ingest_output);
    } else if (fig->parsed()) {
        FigureParams params;
        params.theta = fig_theta;
        params.rho = fig_rho;
        params.j0_max = fig_j0_max;
        params.max_lag = fig_max_lag;
        for (const auto& entry : fig_inputs) {
            const auto eq = entry.find('=');
            const std::string label = eq == std::string::npos
                                          ? fs::path(entry).stem().string()
                                          : entry.substr(0, eq);
            const std::string file = eq == std::string::npos ? entry : entry.substr(eq + 1);
            params.series.emplace_back(label, read_values(file));
        }
        emit(cmd_reproduce_figure(fig_which, params), fig_output);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
