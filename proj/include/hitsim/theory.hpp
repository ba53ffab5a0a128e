#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// Closed-form hitting-time models: the thinned-geometric inter-cluster
// form, the psi model and its limit geometric, truncated-mean model,
// the timed variant under Pareto inter-arrivals, the second-hitting product
// form, and the exact ARMAX/MM and AR(1) first-hitting distributions.
//
// Everything is a pure function of TheoryParams. Evaluators are templated on
// the floating type so results can be cross-checked at extended precision.
// (1-rho)^theta is always computed through log1p/expm1: the evaluators stay
// accurate down to rho ~ 1e-12.

namespace hitsim::theory {

struct TheoryParams {
    double theta = 1.0;         // extremal index, in (0, 1]
    double rho = 0.5;           // exceedance probability, in (0, 1)
    std::int64_t n = 0;         // sample-size scale; rho ~ tau/n when used
    std::int64_t j0 = 0;        // truncation index of the mean model
    double alpha_tail = 1.0;    // inter-arrival regular-variation index
    double horizon = std::numeric_limits<double>::infinity();
    double tau = 0.0;           // 0 = default to rho*n

    void validate() const {
        if (!(theta > 0.0) || theta > 1.0)
            throw std::domain_error("theory: theta must lie in (0, 1]");
        if (!(rho > 0.0) || !(rho < 1.0))
            throw std::domain_error("theory: rho must lie in (0, 1)");
        if (j0 < 0) throw std::domain_error("theory: j0 must be >= 0");
    }
    double tau_or_default() const { return tau > 0.0 ? tau : rho * static_cast<double>(n); }
};

/// (1-rho)^e without cancellation.
template <class Real>
Real pow_one_minus(Real rho, Real e) {
    return std::exp(e * std::log1p(-rho));
}

/// 1 - (1-rho)^e without cancellation.
template <class Real>
Real one_minus_pow(Real rho, Real e) {
    return -std::expm1(e * std::log1p(-rho));
}

template <class Real>
struct ReparamT {
    Real eta;  // 1 - eta = (1-rho)^theta
    Real c;    // eta / (theta^2 (1 - (1-eta)^{1/theta}))
};
using ReparamQuantities = ReparamT<double>;

template <class Real = double>
ReparamT<Real> reparam(const TheoryParams& p) {
    p.validate();
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    const Real eta = one_minus_pow(rho, theta);
    // 1 - (1-eta)^{1/theta} == rho algebraically; evaluated from eta as written
    const Real denom = -std::expm1(std::log1p(-eta) / theta);
    return {eta, eta / (theta * theta * denom)};
}

/// Inter-cluster size model: P{T1 = j} ~ theta^2 rho (1-rho)^{(j-1) theta}.
template <class Real = double>
Real inter_cluster_pmf(std::int64_t j, const TheoryParams& p) {
    p.validate();
    if (j < 1) throw std::domain_error("inter_cluster_pmf: j must be >= 1");
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    return theta * theta * rho * pow_one_minus(rho, theta * static_cast<Real>(j - 1));
}

/// First-hitting model psi_{j-1} = theta^2 rho^2 (1-rho)^{theta(j-1)} / (1-(1-rho)^theta).
template <class Real = double>
Real psi_pmf(std::int64_t j, const TheoryParams& p) {
    p.validate();
    if (j < 1) throw std::domain_error("psi_pmf: j must be >= 1");
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    return theta * theta * rho * rho * pow_one_minus(rho, theta * static_cast<Real>(j - 1)) /
           one_minus_pow(rho, theta);
}

/// Total mass of the psi model over j >= 1 (below 1 for theta < 1; the model
/// is asymptotic, not a normalized pmf).
template <class Real = double>
Real psi_total_mass(const TheoryParams& p) {
    p.validate();
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    const Real d = one_minus_pow(rho, theta);
    return theta * theta * rho * rho / (d * d);
}

/// Limit geometric form: P{T* = j} ~ theta rho (1 - theta rho)^{j-1}.
template <class Real = double>
Real limit_geometric_pmf(std::int64_t j, const TheoryParams& p) {
    p.validate();
    if (j < 1) throw std::domain_error("limit_geometric_pmf: j must be >= 1");
    const Real tr = static_cast<Real>(p.theta) * static_cast<Real>(p.rho);
    return tr * pow_one_minus(tr, static_cast<Real>(j - 1));
}

/// Truncated-mean constant Lambda_n.
template <class Real = double>
Real lambda_n(const TheoryParams& p) {
    p.validate();
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    const Real d = one_minus_pow(rho, theta);
    const Real j0 = static_cast<Real>(p.j0);
    return theta * theta * rho / (d * d * d) * pow_one_minus(rho, theta * j0) * (j0 * d + 1);
}

/// Model of the truncated mean E T*_{j0} = Lambda_n * rho.
template <class Real = double>
Real truncated_mean_model(const TheoryParams& p) {
    return lambda_n<Real>(p) * static_cast<Real>(p.rho);
}

/// Timed first-hitting model: P{T*_T = j+1} ~ psi_j (1 - j T^{-alpha}).
template <class Real = double>
Real timed_pmf_model(std::int64_t j, const TheoryParams& p) {
    p.validate();
    if (j < 1) throw std::domain_error("timed_pmf_model: j must be >= 1");
    if (!(p.alpha_tail > 0.0))
        throw std::domain_error("timed_pmf_model: tail index alpha must be > 0");
    const Real T = static_cast<Real>(p.horizon);
    if (!(static_cast<double>(T) >
          std::pow(static_cast<double>(p.j0), 1.0 / p.alpha_tail)))
        throw std::domain_error("timed_pmf_model: horizon must exceed j0^{1/alpha}");
    const Real factor = 1 - static_cast<Real>(j) * std::pow(T, -static_cast<Real>(p.alpha_tail));
    if (factor < 0)
        throw std::domain_error("timed_pmf_model: j exceeds horizon^{alpha}");
    return psi_pmf<Real>(j + 1, p) * factor;  // psi_j carries exponent theta*j
}

/// Second-hitting product form: geometric(theta rho) mass at j times the
/// same mass at m.
template <class Real = double>
Real second_hitting_joint_model(std::int64_t j, std::int64_t m, const TheoryParams& p) {
    if (m < 1) throw std::domain_error("second_hitting_joint_model: m must be >= 1");
    return limit_geometric_pmf<Real>(j, p) * limit_geometric_pmf<Real>(m, p);
}

/// ARMAX/MM first-hitting distribution, literal form:
/// (1-(1-rho)^theta) (1-rho)^{theta(j-2)+1} for every j >= 1.
template <class Real = double>
Real armax_pmf_literal(std::int64_t j, const TheoryParams& p) {
    p.validate();
    if (j < 1) throw std::domain_error("armax_pmf_literal: j must be >= 1");
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    return one_minus_pow(rho, theta) *
           pow_one_minus(rho, theta * static_cast<Real>(j - 2) + 1);
}

/// ARMAX/MM first-hitting distribution, normalized: the j = 1 mass is
/// forced to rho (an empty running maximum cannot constrain X_1), which
/// makes the total mass exactly rho + (1-rho) = 1.
template <class Real = double>
Real armax_pmf_exact(std::int64_t j, const TheoryParams& p) {
    if (j == 1) {
        p.validate();
        return static_cast<Real>(p.rho);
    }
    return armax_pmf_literal<Real>(j, p);
}

template <class Real = double>
Real armax_mean_literal(const TheoryParams& p) {
    p.validate();
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    return pow_one_minus(rho, 1 - theta) / one_minus_pow(rho, theta);
}

template <class Real = double>
Real armax_second_moment_literal(const TheoryParams& p) {
    p.validate();
    const Real theta = static_cast<Real>(p.theta);
    const Real rho = static_cast<Real>(p.rho);
    const Real d = one_minus_pow(rho, theta);
    return pow_one_minus(rho, 1 - theta) * (2 - d) / (d * d);
}

/// Mean of the normalized pmf: rho + (1-rho)(2-s)/(1-s), s = (1-rho)^theta.
template <class Real = double>
Real armax_mean_exact(const TheoryParams& p) {
    p.validate();
    const Real rho = static_cast<Real>(p.rho);
    const Real theta = static_cast<Real>(p.theta);
    const Real s = pow_one_minus(rho, theta);
    const Real d = one_minus_pow(rho, theta);
    return rho + (1 - rho) * (2 - s) / d;
}

/// j0 = floor(ln n / (2 ln r)) for the AR(1) piecewise distribution.
inline std::int64_t ar1_j0(std::int64_t n, int r) {
    if (n < 1) throw std::domain_error("ar1_j0: n must be >= 1");
    if (r < 2) throw std::domain_error("ar1_j0: r must be >= 2");
    return static_cast<std::int64_t>(
        std::floor(std::log(static_cast<double>(n)) / (2.0 * std::log(static_cast<double>(r)))));
}

/// Largest valid index m-1 = floor(-ln(1-u)/ln r) of the running-max formula.
inline std::int64_t ar1_m_minus_one(double u, int r) {
    if (r < 2) throw std::domain_error("ar1_m_minus_one: r must be >= 2");
    if (!(u > 0.0) || !(u < 1.0))
        throw std::domain_error("ar1_m_minus_one: u must lie in (0, 1)");
    return static_cast<std::int64_t>(
        std::floor(-std::log1p(-u) / std::log(static_cast<double>(r))));
}

/// Running-max CDF of the AR(1) process: P{M_j <= u} = u - j theta (1-u)
/// with theta = 1 - 1/r, valid for 1 <= j <= m-1.
template <class Real = double>
Real ar1_max_cdf(std::int64_t j, double u, int r) {
    const std::int64_t m1 = ar1_m_minus_one(u, r);
    if (j < 1 || j > m1)
        throw std::domain_error("ar1_max_cdf: j must satisfy 1 <= j <= floor(-ln(1-u)/ln r) = " +
                                std::to_string(m1));
    const Real theta = 1 - Real(1) / r;
    return static_cast<Real>(u) - static_cast<Real>(j) * theta * (1 - static_cast<Real>(u));
}

/// Piecewise AR(1) first-hitting distribution with j0 = floor(ln n/(2 ln r)).
template <class Real = double>
Real ar1_pmf(std::int64_t j, double u, int r, std::int64_t n) {
    if (j < 1) throw std::domain_error("ar1_pmf: j must be >= 1");
    const Real theta = 1 - Real(1) / r;
    if (j == 1) return 1 - theta;
    const std::int64_t j0 = ar1_j0(n, r);
    const std::int64_t m1 = ar1_m_minus_one(u, r);
    if (j > m1)
        throw std::domain_error("ar1_pmf: j exceeds the valid range, j <= m-1 = " +
                                std::to_string(m1));
    const Real bracket = static_cast<Real>(u) - static_cast<Real>(j) * theta * (1 - static_cast<Real>(u));
    if (!(bracket > 0))
        throw std::domain_error("ar1_pmf: u - j theta (1-u) must be positive; increase n");
    const Real q = 1 - theta;  // = 1/r
    const Real exponent = j <= j0 ? static_cast<Real>(j) : static_cast<Real>(j0 + 2);
    return std::pow(q, exponent) * bracket;
}

}  // namespace hitsim::theory
