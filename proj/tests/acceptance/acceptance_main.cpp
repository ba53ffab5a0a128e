// Acceptance gate: every release-blocking behavior gets one [PASS]/[FAIL]
// line. Run a single check with `acceptance --criterion N`, or all of them
// with no arguments. Tolerances are pinned next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "hitsim/experiments.hpp"
#include "hitsim/ingest.hpp"

using namespace hitsim;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

theory::TheoryParams make_params(double theta, double rho) {
    theory::TheoryParams p;
    p.theta = theta;
    p.rho = rho;
    return p;
}

// ---------------------------------------------------------------------------
// C1: iid baseline. First hitting of the 0.8-quantile is geometric(0.2);
// every pmf entry up to j = 30 must sit within 3 binomial standard errors,
// and the whole run must finish within the 60 s budget.
Outcome c1() {
    const auto start = std::chrono::steady_clock::now();
    McConfig config;
    config.process = ProcessSpec::iid_frechet();
    config.threshold = ThresholdSpec::quantile(0.2);
    config.paths = 1000000;
    config.path_len = 200;
    config.master_seed = 101;
    const auto pmf = mc_first_hitting_pmf(config);

    double worst = 0.0;
    std::int64_t worst_j = 0;
    for (std::int64_t j = 1; j <= 30; ++j) {
        const double expect = 0.2 * std::pow(0.8, static_cast<double>(j - 1));
        const double se = std::sqrt(expect * (1.0 - expect) / static_cast<double>(config.paths));
        const double dev = std::abs(pmf.prob(j) - expect) / se;
        if (dev > worst) {
            worst = dev;
            worst_j = j;
        }
    }
    const double elapsed = seconds_since(start);
    Outcome out;
    out.pass = worst < 3.0 && elapsed < 60.0;
    out.detail = "max |z| = " + fmt(worst) + " at j = " + std::to_string(worst_j) +
                 " (limit 3), runtime " + fmt(elapsed) + " s (limit 60)";
    return out;
}

// ---------------------------------------------------------------------------
// C2: ARMAX alpha = 0.5, rho = 0.5, 10^7 paths. The j = 1 mass must match
// rho = 0.5 (and clearly reject the literal-formula value ~0.2071); the
// j >= 2 masses must match the shared closed form within 3 standard errors.
Outcome c2() {
    McConfig config;
    config.process = ProcessSpec::armax(0.5);
    config.threshold = ThresholdSpec::quantile(0.5);
    config.paths = 10000000;
    config.path_len = 64;
    config.master_seed = 102;
    const auto pmf = mc_first_hitting_pmf(config);
    const auto tp = make_params(0.5, 0.5);

    const double se1 = std::sqrt(0.25 / static_cast<double>(config.paths));
    const double z_exact1 = (pmf.prob(1) - 0.5) / se1;
    const double z_literal1 = (pmf.prob(1) - theory::armax_pmf_literal(1, tp)) / se1;

    double worst = 0.0;
    std::int64_t worst_j = 0;
    for (std::int64_t j = 2; j <= 15; ++j) {
        const double expect = theory::armax_pmf_exact(j, tp);
        const double se = std::sqrt(expect * (1.0 - expect) / static_cast<double>(config.paths));
        const double dev = std::abs(pmf.prob(j) - expect) / se;
        if (dev > worst) {
            worst = dev;
            worst_j = j;
        }
    }

    Outcome out;
    out.pass = std::abs(z_exact1) < 3.0 && std::abs(z_literal1) > 10.0 && worst < 3.0;
    out.detail = "P{T*=1} = " + fmt(pmf.prob(1)) + ": z vs rho = " + fmt(z_exact1) +
                 " (|z|<3), z vs literal j=1 value = " + fmt(z_literal1) +
                 " (|z|>10); max |z| over j in [2,15] = " + fmt(worst) + " at j = " +
                 std::to_string(worst_j);
    return out;
}

// ---------------------------------------------------------------------------
// C3: same configuration; the sample mean of T* must land within 1% of the
// normalized-pmf mean (~2.70711), and we report its distance to the literal
// series mean (~2.41421).
Outcome c3() {
    McConfig config;
    config.process = ProcessSpec::armax(0.5);
    config.threshold = ThresholdSpec::quantile(0.5);
    config.paths = 10000000;
    config.path_len = 64;
    config.master_seed = 102;
    const auto pmf = mc_first_hitting_pmf(config);
    const auto tp = make_params(0.5, 0.5);

    const double mean = pmf.mean_observed();
    const double exact = theory::armax_mean_exact(tp);    // 2.70710678...
    const double literal = theory::armax_mean_literal(tp);  // 2.41421356...
    const double rel = std::abs(mean / exact - 1.0);

    Outcome out;
    out.pass = rel < 0.01 && pmf.overflow_prob() < 1e-6;
    out.detail = "sample mean " + fmt(mean) + " vs " + fmt(exact) + " (rel err " + fmt(rel) +
                 ", limit 1%); gap to literal mean " + fmt(literal) + " is " +
                 fmt(mean - literal);
    return out;
}

// ---------------------------------------------------------------------------
// C4: the ratio of the exact ARMAX pmf to the psi model over
// j in [2, 5/(theta rho)] must deviate less for smaller rho, and by under
// 3% at rho = 1e-3. Pure evaluation, no sampling.
Outcome c4() {
    const double theta = 0.5;
    auto max_ratio_err = [&](double rho) {
        const auto tp = make_params(theta, rho);
        const auto j_hi = static_cast<std::int64_t>(5.0 / (theta * rho));
        double worst = 0.0;
        for (std::int64_t j = 2; j <= j_hi; ++j)
            worst = std::max(worst,
                             std::abs(theory::armax_pmf_exact(j, tp) / theory::psi_pmf(j, tp) - 1.0));
        return worst;
    };
    const double coarse = max_ratio_err(1e-2);
    const double fine = max_ratio_err(1e-3);

    Outcome out;
    out.pass = fine < coarse && fine < 0.03;
    out.detail = "max ratio deviation: " + fmt(coarse) + " at rho = 1e-2, " + fmt(fine) +
                 " at rho = 1e-3 (must decrease and end below 3%)";
    return out;
}

// ---------------------------------------------------------------------------
// C5: ARMAX alpha = 0.5, rho = 1e-3, 10^5 paths. The mean must scale like
// 1/(theta rho) within 3%, and the truncated means over j > j0 must match
// the closed-form constant within 3% for j0 in {0, 5, 20}.
Outcome c5() {
    McConfig config;
    config.process = ProcessSpec::armax(0.5);
    config.threshold = ThresholdSpec::quantile(1e-3);
    config.paths = 100000;
    config.path_len = 40000;  // ~20 mean hitting times; overflow ~ e^-20
    config.master_seed = 105;
    const auto pmf = mc_first_hitting_pmf(config);
    const auto tp = make_params(0.5, 1e-3);

    const double scaled = pmf.mean_observed() * 0.5 * 1e-3;
    bool pass = scaled > 0.97 && scaled < 1.03 && pmf.overflow_prob() < 1e-4;
    std::string detail = "mean * theta rho = " + fmt(scaled) + " (limit [0.97, 1.03])";

    for (std::int64_t j0 : {0, 5, 20}) {
        double truncated = 0.0;
        for (std::int64_t j = j0 + 1; j <= pmf.j_max(); ++j)
            truncated += static_cast<double>(j) * pmf.prob(j);
        auto tj = tp;
        tj.j0 = j0;
        const double model = theory::truncated_mean_model(tj);
        const double rel = std::abs(truncated / model - 1.0);
        pass = pass && rel < 0.03;
        detail += "; j0 = " + std::to_string(j0) + ": " + fmt(truncated) + " vs " + fmt(model) +
                  " (rel err " + fmt(rel) + ", limit 3%)";
    }

    Outcome out;
    out.pass = pass;
    out.detail = detail;
    return out;
}

// ---------------------------------------------------------------------------
// C6: moving maxima with weights (0.5, 0.3, 0.2) shares the ARMAX hitting
// distribution with theta = 0.5. rho = 0.1, 10^6 paths, 3 standard errors
// for every j <= 30.
Outcome c6() {
    McConfig config;
    config.process = ProcessSpec::moving_max({0.5, 0.3, 0.2});
    config.threshold = ThresholdSpec::quantile(0.1);
    config.paths = 1000000;
    config.path_len = 600;
    config.master_seed = 106;
    const auto pmf = mc_first_hitting_pmf(config);
    const auto tp = make_params(0.5, 0.1);

    double worst = 0.0;
    std::int64_t worst_j = 0;
    for (std::int64_t j = 1; j <= 30; ++j) {
        const double expect = theory::armax_pmf_exact(j, tp);
        const double se = std::sqrt(expect * (1.0 - expect) / static_cast<double>(config.paths));
        const double dev = std::abs(pmf.prob(j) - expect) / se;
        if (dev > worst) {
            worst = dev;
            worst_j = j;
        }
    }

    Outcome out;
    out.pass = worst < 3.0;
    out.detail = "max |z| = " + fmt(worst) + " at j = " + std::to_string(worst_j) + " (limit 3)";
    return out;
}

// ---------------------------------------------------------------------------
// C7: AR(1) with r = 2 against the piecewise closed form at u = 1 - 1/n,
// n = 1e4. The closed form is asymptotic and its alignment is ambiguous, so
// the artifact is the comparison table itself: empirical masses next to the
// verbatim and shift-by-one evaluations, plus both candidate j = 1 values.
Outcome c7() {
    const int r = 2;
    const std::int64_t n = 10000;
    const double u = 1.0 - 1.0 / static_cast<double>(n);

    McConfig config;
    config.process = ProcessSpec::ar1_uniform(r);
    config.threshold = ThresholdSpec::absolute(u);
    config.paths = 10000000;
    config.path_len = 16;
    config.master_seed = 107;
    const auto pmf = mc_first_hitting_pmf(config);
    const std::int64_t j0 = theory::ar1_j0(n, r);  // 6

    std::printf("  C7 comparison table (r=2, n=1e4, u=%.6g, %lld paths)\n", u,
                static_cast<long long>(config.paths));
    std::printf("  branch value 1-theta = 0.5 vs 1-u = %.3g; empirical P{T*=1} = %.6g "
                "(stderr %.2g)\n",
                1.0 - u, pmf.prob(1), pmf.std_error(1));
    std::printf("  %4s %14s %12s %14s %14s\n", "j", "empirical", "stderr", "verbatim",
                "shifted(j+1)");
    bool finite = true;
    for (std::int64_t j = 2; j <= j0; ++j) {
        const double verbatim = theory::ar1_pmf(j, u, r, n);
        const double shifted = theory::ar1_pmf(j + 1, u, r, n);
        finite = finite && std::isfinite(verbatim) && std::isfinite(shifted);
        std::printf("  %4lld %14.6e %12.2e %14.6e %14.6e\n", static_cast<long long>(j),
                    pmf.prob(j), pmf.std_error(j), verbatim, shifted);
    }

    Outcome out;
    out.pass = finite && pmf.paths == config.paths;
    out.detail = "comparison table emitted for 2 <= j <= " + std::to_string(j0) +
                 " (no hard tolerance; the closed form is asymptotic). Empirical P{T*=1} = " +
                 fmt(pmf.prob(1)) + " sits at the 1-u scale, not the branch value 0.5";
    return out;
}

// ---------------------------------------------------------------------------
// C8: timed hitting with iid values, rho = 0.01, unit-scale Pareto
// inter-arrivals with tail index 1 and horizon T = 1e4. The empirical
// P{hit at step j+1 in time} must match psi_j (1 - j/T) within 3 standard
// errors for every j <= 200.
Outcome c8() {
    McConfig config;
    config.process = ProcessSpec::iid_frechet();
    config.threshold = ThresholdSpec::quantile(0.01);
    config.paths = 1000000;
    config.path_len = 400;
    config.master_seed = 108;
    const InterArrivalSpec arrivals{1.0, 1.0};
    const double horizon = 1e4;
    const auto pmf = mc_timed_first_hitting_pmf(config, arrivals, horizon);

    auto tp = make_params(1.0, 0.01);
    tp.alpha_tail = 1.0;
    tp.horizon = horizon;

    double worst = 0.0;
    std::int64_t worst_j = 0;
    for (std::int64_t j = 1; j <= 200; ++j) {
        const double expect = theory::timed_pmf_model(j, tp);
        const double se = std::sqrt(expect * (1.0 - expect) / static_cast<double>(config.paths));
        const double dev = std::abs(pmf.prob(j + 1) - expect) / se;
        if (dev > worst) {
            worst = dev;
            worst_j = j;
        }
    }

    Outcome out;
    out.pass = worst < 3.0;
    out.detail = "max |z| = " + fmt(worst) + " at j = " + std::to_string(worst_j) + " (limit 3)";
    return out;
}

// ---------------------------------------------------------------------------
// C9: joint law of (T*, T** - T*) for ARMAX alpha = 0.5, rho = 1e-3 against
// the product of two geometric(theta rho) laws, total-variation distance on
// the grid j, m <= 3/(theta rho), required < 0.05.
//
// The clustered gap component is not geometric on the raw time scale: about
// half of all second exceedances arrive one step after the first (the cluster
// continues), while the product model puts only theta*rho ~ 5e-4 there. The
// diagnostics below separate that model mismatch from per-cell sampling
// noise; the check itself is evaluated exactly as stated.
Outcome c9() {
    const double theta = 0.5, rho = 1e-3;
    const double tr = theta * rho;
    const auto grid = static_cast<std::int64_t>(3.0 / tr);  // 6000

    McConfig config;
    config.process = ProcessSpec::armax(0.5);
    config.threshold = ThresholdSpec::quantile(rho);
    config.paths = 100000;
    config.path_len = 2 * grid;
    config.master_seed = 109;
    const auto joint = mc_joint_first_gap_pmf(config, grid, grid);

    std::vector<double> q(static_cast<std::size_t>(grid));
    for (std::int64_t j = 1; j <= grid; ++j)
        q[static_cast<std::size_t>(j - 1)] = tr * std::pow(1.0 - tr, static_cast<double>(j - 1));

    const double inv_paths = 1.0 / static_cast<double>(joint.paths);
    double l1 = 0.0;
    double emp_m1 = 0.0, model_m1 = 0.0;

    // dyadic bins on both axes collapse per-cell noise into ~13x13 super-cells
    auto bin_of = [](std::int64_t v) {
        int b = 0;
        while (v > 1) {
            v >>= 1;
            ++b;
        }
        return b;
    };
    const int n_bins = bin_of(grid) + 1;
    std::vector<double> emp_bin(static_cast<std::size_t>(n_bins * n_bins), 0.0);
    std::vector<double> model_bin(static_cast<std::size_t>(n_bins * n_bins), 0.0);

    for (std::int64_t j = 1; j <= grid; ++j) {
        const double qj = q[static_cast<std::size_t>(j - 1)];
        const std::int64_t row = (j - 1) * grid;
        const int bj = bin_of(j);
        for (std::int64_t m = 1; m <= grid; ++m) {
            const double emp =
                static_cast<double>(joint.counts[static_cast<std::size_t>(row + m - 1)]) *
                inv_paths;
            const double model = qj * q[static_cast<std::size_t>(m - 1)];
            l1 += std::abs(emp - model);
            if (m == 1) {
                emp_m1 += emp;
                model_m1 += model;
            }
            const auto cell = static_cast<std::size_t>(bj * n_bins + bin_of(m));
            emp_bin[cell] += emp;
            model_bin[cell] += model;
        }
    }
    const double tv = 0.5 * l1;

    double binned_l1 = 0.0;
    for (std::size_t i = 0; i < emp_bin.size(); ++i) binned_l1 += std::abs(emp_bin[i] - model_bin[i]);

    std::printf("  C9 diagnostics: TV on raw grid = %.4f; dyadic-binned TV = %.4f\n", tv,
                0.5 * binned_l1);
    std::printf("  gap m = 1 mass: empirical %.4f vs product model %.2e "
                "(clustered continuation vs geometric gap)\n",
                emp_m1, model_m1);
    std::printf("  off-grid mass %.4f of %lld paths\n",
                static_cast<double>(joint.off_grid) * inv_paths,
                static_cast<long long>(joint.paths));

    Outcome out;
    out.pass = tv < 0.05;
    out.detail = "TV = " + fmt(tv) + " (limit 0.05); dyadic-binned TV = " + fmt(0.5 * binned_l1) +
                 ", empirical gap-1 mass = " + fmt(emp_m1) + " vs model " + fmt(model_m1);
    return out;
}

// ---------------------------------------------------------------------------
// C10: intervals estimator. For ARMAX alpha in {0.1, 0.5, 0.9}, series
// length 1e6, rho = 0.02: the median estimate over 20 replicates must land
// within 0.05 of 1 - alpha and decrease with alpha.
Outcome c10() {
    const double rho = 0.02;
    std::vector<double> medians;
    std::string detail;
    bool pass = true;
    std::uint64_t seed = 110;
    for (double alpha : {0.1, 0.5, 0.9}) {
        std::vector<double> hats;
        for (int rep = 0; rep < 20; ++rep) {
            const auto path = simulate(ProcessSpec::armax(alpha), 1000000,
                                       RngStream(seed, static_cast<std::uint64_t>(rep)));
            hats.push_back(estimate_theta(path.values, rho).theta_hat);
        }
        std::nth_element(hats.begin(), hats.begin() + 10, hats.end());
        std::nth_element(hats.begin(), hats.begin() + 9, hats.begin() + 10);
        const double median = 0.5 * (hats[9] + hats[10]);
        const double target = 1.0 - alpha;
        pass = pass && std::abs(median - target) < 0.05;
        if (!detail.empty()) detail += "; ";
        detail += "alpha " + fmt(alpha) + ": median theta_hat " + fmt(median) + " (target " +
                  fmt(target) + " +- 0.05)";
        medians.push_back(median);
        ++seed;
    }
    pass = pass && medians[0] > medians[1] && medians[1] > medians[2];

    Outcome out;
    out.pass = pass;
    out.detail = detail + "; monotone decreasing: " +
                 (medians[0] > medians[1] && medians[1] > medians[2] ? "yes" : "no");
    return out;
}

// ---------------------------------------------------------------------------
// C11: figure tables. Spot values written through the CSV layer must agree
// with extended-precision re-evaluation to 10 significant digits; the figure
// 3 curves keep their documented ordering; the figure 4 pipeline runs end to
// end on a generated edge list.
Outcome c11() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() /
                         ("hitsim_accept_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);

    bool pass = true;
    std::string detail;
    auto check10 = [&](const char* label, double got, long double want) {
        const long double rel = std::abs(static_cast<long double>(got) - want) /
                                std::abs(want);
        const bool ok = rel < 1e-10L;
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += std::string(label) + " rel err " + fmt(static_cast<double>(rel)) +
                  (ok ? "" : " EXCEEDS 1e-10");
    };

    FigureParams params;

    // figure 1: literal pmf and psi model at rho = 0.5 (grid row 100)
    write_table(cmd_reproduce_figure(1, params), dir / "fig1.csv");
    const auto fig1 = read_table(dir / "fig1.csv");
    theory::TheoryParams tp;
    tp.theta = 0.1;
    tp.rho = fig1.at(99, "rho");
    check10("fig1 exact_j5", fig1.at(99, "exact_j5"), theory::armax_pmf_literal<long double>(5, tp));
    check10("fig1 model_j20", fig1.at(99, "model_j20"), theory::psi_pmf<long double>(20, tp));

    // figure 2: literal mean and truncated-mean model at rho = 0.25 (row 49)
    write_table(cmd_reproduce_figure(2, params), dir / "fig2.csv");
    const auto fig2 = read_table(dir / "fig2.csv");
    tp.rho = fig2.at(49, "rho");
    check10("fig2 mean_exact", fig2.at(49, "mean_exact"),
            theory::armax_mean_literal<long double>(tp));
    tp.j0 = 5;
    check10("fig2 model_j0_5", fig2.at(49, "model_j0_5"),
            theory::truncated_mean_model<long double>(tp));

    // figure 3: the two dataset curves at j0 = 0 and 40, plus their ordering
    write_table(cmd_reproduce_figure(3, params), dir / "fig3.csv");
    const auto fig3 = read_table(dir / "fig3.csv");
    theory::TheoryParams enron;
    enron.theta = 0.22;
    enron.rho = 0.05;
    theory::TheoryParams dbpl = enron;
    dbpl.theta = 0.15;
    check10("fig3 enron j0=0", fig3.at(0, "mean_model_enron"),
            theory::truncated_mean_model<long double>(enron));
    check10("fig3 dbpl j0=0", fig3.at(0, "mean_model_dbpl"),
            theory::truncated_mean_model<long double>(dbpl));
    enron.j0 = dbpl.j0 = 40;
    check10("fig3 enron j0=40", fig3.at(40, "mean_model_enron"),
            theory::truncated_mean_model<long double>(enron));
    check10("fig3 dbpl j0=40", fig3.at(40, "mean_model_dbpl"),
            theory::truncated_mean_model<long double>(dbpl));
    bool ordered = true;
    for (std::size_t r = 0; r < fig3.rows.size(); ++r)
        ordered = ordered && fig3.at(r, "mean_model_dbpl") > fig3.at(r, "mean_model_enron");
    pass = pass && ordered;
    detail += std::string("; fig3 ordering (dbpl above enron): ") + (ordered ? "yes" : "no");

    // figure 4: generate an edge list, ingest it, run the ACF figure
    {
        std::ofstream edges(dir / "graph.txt");
        edges << "# generated ring with chords\n";
        const int n = 500;
        for (int i = 0; i < n; ++i) {
            edges << i << ' ' << (i + 1) % n << '\n';
            if (i % 7 == 0) edges << i << ' ' << (i + 5) % n << '\n';
        }
    }
    const auto seq = load_edge_list(dir / "graph.txt");
    std::vector<double> degrees(seq.degrees.begin(), seq.degrees.end());
    FigureParams fp4;
    fp4.series = {{"graph", degrees}};
    fp4.max_lag = 50;
    write_table(cmd_reproduce_figure(4, fp4), dir / "fig4.csv");
    const auto fig4 = read_table(dir / "fig4.csv");
    const bool fig4_ok = fig4.rows.size() == 51 && fig4.at(0, "acf_graph") == 1.0;
    pass = pass && fig4_ok;
    detail += std::string("; fig4 end-to-end on ") + std::to_string(seq.node_count()) +
              " ingested nodes: " + (fig4_ok ? "ok" : "FAILED");

    fs::remove_all(dir);
    Outcome out;
    out.pass = pass;
    out.detail = detail;
    return out;
}

// ---------------------------------------------------------------------------
// C12: property bundle — closed-form normalization, extreme-parameter
// stability, thread-count invariance and the running-max identity.
Outcome c12() {
    bool pass = true;
    std::string detail;
    auto record = [&](const char* label, bool ok) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += std::string(label) + ": " + (ok ? "ok" : "FAILED");
    };

    // normalization via partial sum + closed-form geometric tail
    {
        double worst = 0.0;
        for (double theta : {0.1, 0.5, 1.0}) {
            for (double rho : {0.01, 0.3, 0.9}) {
                const auto tp = make_params(theta, rho);
                const std::int64_t cut = 2000;
                const double s = std::exp(theta * std::log1p(-rho));

                double sum_exact = 0.0;
                for (std::int64_t j = 1; j <= cut; ++j) sum_exact += theory::armax_pmf_exact(j, tp);
                // remaining mass: (1-rho) s^{cut-1}
                sum_exact += (1.0 - rho) * std::pow(s, static_cast<double>(cut - 1));
                worst = std::max(worst, std::abs(sum_exact - 1.0));

                double sum_geo = 0.0;
                for (std::int64_t j = 1; j <= cut; ++j)
                    sum_geo += theory::limit_geometric_pmf(j, tp);
                sum_geo += std::pow(1.0 - theta * rho, static_cast<double>(cut));
                worst = std::max(worst, std::abs(sum_geo - 1.0));
            }
        }
        record(("normalization, worst |sum-1| = " + fmt(worst)).c_str(), worst < 1e-12);
    }

    // extreme parameters: rho = 1e-12 must stay finite, positive and on scale
    {
        const auto tp = make_params(0.01, 1e-12);
        const double eta = theory::reparam(tp).eta;
        const bool ok = std::isfinite(eta) && std::abs(eta / 1e-14 - 1.0) < 1e-6 &&
                        theory::psi_pmf(1, tp) > 0.0 &&
                        std::isfinite(theory::truncated_mean_model(tp)) &&
                        std::isfinite(theory::limit_geometric_pmf(1000000, tp));
        record("stability at rho = 1e-12", ok);
    }

    // identical counts whatever the worker count
    {
        McConfig config;
        config.process = ProcessSpec::armax(0.5);
        config.threshold = ThresholdSpec::quantile(0.2);
        config.paths = 50000;
        config.path_len = 300;
        config.master_seed = 112;
        config.threads = 1;
        const auto base = mc_first_hitting_pmf(config);
        bool same = true;
        for (int t : {2, 5, 16}) {
            config.threads = t;
            const auto again = mc_first_hitting_pmf(config);
            same = same && again.counts == base.counts && again.overflow == base.overflow;
        }
        record("thread-count invariance", same);
    }

    // running-max identity, exact equality on fixed paths
    {
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const auto path = simulate(ProcessSpec::armax(0.6), 500,
                                       RngStream(113, static_cast<std::uint64_t>(rep)));
            const double u = 2.5;
            const auto first = hitting_times(path, u, 1).first();
            double running = 0.0;
            for (std::int64_t j = 1; j <= 500; ++j) {
                running = std::max(running, path.values[static_cast<std::size_t>(j - 1)]);
                const bool not_hit = !first.has_value() || *first > j;
                if (not_hit != (running <= u)) ok = false;
            }
        }
        record("running-max identity", ok);
    }

    Outcome out;
    out.pass = pass;
    out.detail = detail;
    return out;
}

using Criterion = Outcome (*)();
constexpr Criterion kCriteria[12] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};

const char* kSummaries[12] = {
    "iid geometric baseline",
    "ARMAX pmf, j = 1 normalization",
    "ARMAX mean",
    "psi-model convergence",
    "mean scaling and truncated means",
    "moving-maxima equivalence",
    "AR(1) comparison table",
    "timed hitting",
    "joint product form",
    "extremal-index recovery",
    "figure tables",
    "property bundle",
};

int run_one(int n) {
    Outcome out;
    try {
        out = kCriteria[n - 1]();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("unexpected exception: ") + e.what();
    }
    std::printf("[%s] C%d: %s — %s\n", out.pass ? "PASS" : "FAIL", n, kSummaries[n - 1],
                out.detail.c_str());
    return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            which = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (which != 0) {
        if (which < 1 || which > 12) {
            std::fprintf(stderr, "criterion must be between 1 and 12\n");
            return 2;
        }
        return run_one(which);
    }
    int failures = 0;
    for (int n = 1; n <= 12; ++n) failures += run_one(n);
    return failures == 0 ? 0 : 1;
}
