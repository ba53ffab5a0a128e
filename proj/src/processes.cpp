#include "hitsim/processes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hitsim {

namespace {

constexpr double kWeightSumTol = 1e-9;

}  // namespace

ProcessSpec ProcessSpec::armax(double alpha) {
    if (!(alpha >= 0.0) || alpha >= 1.0)
        throw std::domain_error("armax: alpha must lie in [0, 1)");
    return ProcessSpec(ArmaxSpec{alpha});
}

ProcessSpec ProcessSpec::moving_max(std::vector<double> weights) {
    if (weights.empty()) throw std::domain_error("moving_max: weights must be nonempty");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::domain_error("moving_max: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw std::domain_error("moving_max: weights must sum to 1");
    if (!std::is_sorted(weights.rbegin(), weights.rend()))
        throw std::domain_error("moving_max: weights must be sorted non-increasing");
    return ProcessSpec(MovingMaxSpec{std::move(weights)});
}

ProcessSpec ProcessSpec::ar1_uniform(int r) {
    if (r < 2) throw std::domain_error("ar1_uniform: r must be an integer >= 2");
    return ProcessSpec(Ar1UniformSpec{r});
}

ProcessSpec ProcessSpec::iid_frechet() { return ProcessSpec(IidFrechetSpec{}); }

double ProcessSpec::theta() const noexcept {
    return std::visit(
        [](const auto& spec) -> double {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ArmaxSpec>) {
                return 1.0 - spec.alpha;
            } else if constexpr (std::is_same_v<T, MovingMaxSpec>) {
                return spec.weights.front();
            } else if constexpr (std::is_same_v<T, Ar1UniformSpec>) {
                return 1.0 - 1.0 / spec.r;
            } else {
                return 1.0;
            }
        },
        variant_);
}

bool ProcessSpec::frechet_marginal() const noexcept {
    return !std::holds_alternative<Ar1UniformSpec>(variant_);
}

double ProcessSpec::marginal_quantile(double rho) const {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::domain_error("marginal_quantile: rho must lie in (0, 1)");
    if (frechet_marginal()) return frechet_quantile(rho);
    return 1.0 - rho;  // U(0,1) marginal
}

double ProcessSpec::marginal_cdf(double x) const {
    if (frechet_marginal()) return x > 0.0 ? std::exp(-1.0 / x) : 0.0;
    return std::clamp(x, 0.0, 1.0);
}

std::string ProcessSpec::name() const {
    return std::visit(
        [](const auto& spec) -> std::string {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, ArmaxSpec>) {
                return "armax";
            } else if constexpr (std::is_same_v<T, MovingMaxSpec>) {
                return "moving_max";
            } else if constexpr (std::is_same_v<T, Ar1UniformSpec>) {
                return "ar1_uniform";
            } else {
                return "iid_frechet";
            }
        },
        variant_);
}

void InterArrivalSpec::validate() const {
    if (!(alpha_tail > 0.0))
        throw std::domain_error("interarrivals: tail index alpha must be > 0");
    if (!(scale > 0.0)) throw std::domain_error("interarrivals: scale must be > 0");
}

double frechet_from_uniform(double u) {
    if (!(u > 0.0) || !(u < 1.0))
        throw std::domain_error("frechet_from_uniform: u must lie in (0, 1)");
    return -1.0 / std::log(u);
}

double frechet_sample(RngStream& stream) {
    double u = stream.next_unit();
    while (u == 0.0) u = stream.next_unit();
    return -1.0 / std::log(u);
}

double frechet_quantile(double rho) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw std::domain_error("frechet_quantile: rho must lie in (0, 1)");
    return -1.0 / std::log1p(-rho);
}

double pareto_from_uniform(const InterArrivalSpec& spec, double u) {
    spec.validate();
    if (!(u > 0.0) || u > 1.0)
        throw std::domain_error("pareto_from_uniform: u must lie in (0, 1]");
    return spec.scale * std::pow(u, -1.0 / spec.alpha_tail);
}

double pareto_sample(const InterArrivalSpec& spec, RngStream& stream) {
    // 1 - next_unit() lies in (0, 1]; u = 1 maps to the support minimum.
    return spec.scale * std::pow(1.0 - stream.next_unit(), -1.0 / spec.alpha_tail);
}

std::vector<double> pareto_interarrivals(const InterArrivalSpec& spec, std::int64_t count,
                                         RngStream& stream) {
    spec.validate();
    if (count < 0) throw std::domain_error("pareto_interarrivals: count must be >= 0");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back(pareto_sample(spec, stream));
    return out;
}

ProcessSampler::ProcessSampler(const ProcessSpec& spec, RngStream stream, std::int64_t burn_in)
    : stream_(stream) {
    if (burn_in < 0) throw std::domain_error("simulate: burn_in must be >= 0");
    std::visit(
        [this](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ArmaxSpec>) {
                state_ = ArmaxState{s.alpha, frechet_sample(stream_)};  // X_0 = Z_0
            } else if constexpr (std::is_same_v<T, MovingMaxSpec>) {
                MovingMaxState st;
                st.weights = s.weights;
                st.window.resize(s.weights.size());
                // pre-samples Z_0..Z_{1-m} so X_1 already sees a full window;
                // window[k] holds Z_{-k} and the next() shift moves it to slot k+1
                for (std::size_t i = 0; i + 1 < st.window.size(); ++i)
                    st.window[i] = frechet_sample(stream_);
                state_ = std::move(st);
            } else if constexpr (std::is_same_v<T, Ar1UniformSpec>) {
                state_ = Ar1State{s.r, stream_.next_unit()};  // X_0 ~ U(0,1)
            } else {
                state_ = IidState{};
            }
        },
        spec.variant());
    for (std::int64_t i = 0; i < burn_in; ++i) next();
}

double ProcessSampler::next() {
    return std::visit(
        [this](auto& st) -> double {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, ArmaxState>) {
                const double z = frechet_sample(stream_);
                st.prev = std::max(st.alpha * st.prev, (1.0 - st.alpha) * z);
                return st.prev;
            } else if constexpr (std::is_same_v<T, MovingMaxState>) {
                for (std::size_t i = st.window.size(); i-- > 1;)
                    st.window[i] = st.window[i - 1];
                st.window[0] = frechet_sample(stream_);
                double x = 0.0;
                for (std::size_t i = 0; i < st.window.size(); ++i)
                    x = std::max(x, st.weights[i] * st.window[i]);
                return x;
            } else if constexpr (std::is_same_v<T, Ar1State>) {
                const double eps =
                    static_cast<double>(stream_.next_below(static_cast<std::uint64_t>(st.r))) /
                    st.r;
                st.prev = st.prev / st.r + eps;
                return st.prev;
            } else {
                return frechet_sample(stream_);
            }
        },
        state_);
}

SamplePath simulate(const ProcessSpec& spec, std::int64_t n, RngStream stream,
                    std::int64_t burn_in) {
    if (n < 1) throw std::domain_error("simulate: n must be >= 1");
    ProcessSampler sampler(spec, stream, burn_in);
    SamplePath path;
    path.seed_id = stream.master_seed();
    path.values.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) path.values.push_back(sampler.next());
    return path;
}

}  // namespace hitsim
