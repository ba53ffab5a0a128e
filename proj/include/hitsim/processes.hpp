#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hitsim/rng.hpp"

namespace hitsim {

/// Max-autoregression X_t = max{alpha X_{t-1}, (1-alpha) Z_t} with standard
/// Frechet noise Z. Extremal index theta = 1 - alpha.
struct ArmaxSpec {
    double alpha = 0.0;
};

/// Moving maxima X_t = max_i{ w_i Z_{t-i} }, weights nonnegative, summing to
/// one and sorted non-increasing. Extremal index theta = w_0.
struct MovingMaxSpec {
    std::vector<double> weights;
};

/// X_t = X_{t-1}/r + eps_t with eps uniform on {0, 1/r, ..., (r-1)/r} and
/// X_0 ~ U(0,1). Marginal stays U(0,1); extremal index theta = 1 - 1/r.
struct Ar1UniformSpec {
    int r = 2;
};

/// iid standard Frechet; theta = 1.
struct IidFrechetSpec {};

class ProcessSpec {
public:
    using Variant = std::variant<ArmaxSpec, MovingMaxSpec, Ar1UniformSpec, IidFrechetSpec>;

    static ProcessSpec armax(double alpha);
    static ProcessSpec moving_max(std::vector<double> weights);
    static ProcessSpec ar1_uniform(int r);
    static ProcessSpec iid_frechet();

    double theta() const noexcept;

    /// True iff the stationary marginal is standard Frechet (ARMAX, MM, iid).
    bool frechet_marginal() const noexcept;

    /// Exact (1-rho)-quantile of the stationary marginal.
    double marginal_quantile(double rho) const;

    /// Marginal CDF at x, for goodness-of-fit checks.
    double marginal_cdf(double x) const;

    const Variant& variant() const noexcept { return variant_; }
    std::string name() const;

private:
    explicit ProcessSpec(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

/// Pareto inter-arrival model: P{Y > t} = (t/scale)^{-alpha_tail} for t >= scale.
struct InterArrivalSpec {
    double alpha_tail = 1.0;
    double scale = 1.0;

    void validate() const;  // throws std::domain_error
};

struct SamplePath {
    std::vector<double> values;
    /// Inter-arrival times Y_1..Y_{n-1}; Y_i separates X_i and X_{i+1}.
    std::optional<std::vector<double>> interarrivals;
    std::uint64_t seed_id = 0;
};

/// Inverse-CDF transform of a uniform u in (0,1): X = -1/ln(u) is standard
/// Frechet, P{X <= x} = exp(-1/x).
double frechet_from_uniform(double u);

/// One standard Frechet draw; a zero uniform is re-drawn.
double frechet_sample(RngStream& stream);

/// (1-rho)-quantile of the standard Frechet law: x_rho = -1/ln(1-rho).
double frechet_quantile(double rho);

/// Y = scale * u^{-1/alpha_tail} for u in (0,1].
double pareto_from_uniform(const InterArrivalSpec& spec, double u);

double pareto_sample(const InterArrivalSpec& spec, RngStream& stream);

std::vector<double> pareto_interarrivals(const InterArrivalSpec& spec, std::int64_t count,
                                         RngStream& stream);

/// Streaming generator of one stationary sample path. Each call to next()
/// yields X_1, X_2, ... starting from the stationary initial condition
/// (X_0 = Z_0 for ARMAX, a full pre-filled window for MM, X_0 ~ U(0,1) for
/// AR(1)).
class ProcessSampler {
public:
    ProcessSampler(const ProcessSpec& spec, RngStream stream, std::int64_t burn_in = 0);

    double next();

private:
    struct ArmaxState {
        double alpha;
        double prev;
    };
    struct MovingMaxState {
        std::vector<double> weights;
        std::vector<double> window;  // window[i] multiplies weights[i]; window[0] is newest
    };
    struct Ar1State {
        int r;
        double prev;
    };
    struct IidState {};

    RngStream stream_;
    std::variant<ArmaxState, MovingMaxState, Ar1State, IidState> state_;
};

/// Realize a path of length n. Identical (master_seed, path_index, spec, n,
/// burn_in) give bit-identical paths.
SamplePath simulate(const ProcessSpec& spec, std::int64_t n, RngStream stream,
                    std::int64_t burn_in = 0);

}  // namespace hitsim
