// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "varix/path.hpp"

namespace varix {

/// Brownian-with-drift experiment: W_t = B_t + mu*t observed on an Euler
/// grid of step dt up to an independent Exp(v) killing time.
struct KilledBMConfig {
    double mu = 0.0;
    double v = 1.0;   // killing rate; the paper's -nu
    double c = 1.0;   // truncation level
    double dt = 1e-4;
    std::int64_t n_paths = 1;
    std::uint64_t seed = 0;

    void validate() const;  // DomainError on any violated bound
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n = 0;
    std::optional<double> target;  // closed form when one exists
};

/// One killed path: tau ~ Exp(v) is drawn first, then W_{k*dt} for
/// k = 0..floor(tau/dt) with iid Gaussian increments (mean mu*dt,
/// variance dt), W_0 = 0. Pure function of (seed, path_index).
DiscretePath simulate_killed_bm(const KilledBMConfig& config, std::int64_t path_index);

/// E[UTV^c of W on [0, tau]] = e^{mu*c} sqrt(mu^2+2v) / (2v sinh(c sqrt(mu^2+2v))).
double closed_form_eutv(double mu, double v, double c);

/// Law of the upcrossing count of [y, y+c] by the killed path:
/// P(u >= 1), the geometric tail ratio e^{-2c sqrt(mu^2+2v)}, and the mean
/// p_once / (1 - ratio).
struct UpcrossingLaw {
    double p_once;
    double ratio;
    double mean;
};
UpcrossingLaw upcrossing_law(double mu, double v, double c, double y);

/// Monte Carlo estimate of E[UTV^c(W, [0,tau])] over n_paths killed paths,
/// with the closed form attached as target. Deterministic given the config;
/// independent of the worker count.
MCEstimate mc_expected_utv(const KilledBMConfig& config);

/// Empirical tail P(u_c^y >= n) for n = 1..n_max over simulated paths.
/// Consecutive ratios estimate e^{-2c sqrt(mu^2+2v)}.
std::vector<double> mc_crossing_tail(const KilledBMConfig& config, double y, int n_max);

/// Worker count for path-parallel loops: hardware concurrency, capped by
/// the VARIX_THREADS environment variable when set.
std::size_t effective_thread_count();

namespace detail {

/// Grid values of one killed path written into `out` (reused buffer).
void generate_killed_path(const KilledBMConfig& config, std::int64_t path_index,
                          std::vector<double>& out);

/// Runs body(i) for i in [0, n) across effective_thread_count() workers.
/// Bodies must write only to their own index slot; aggregation stays with
/// the caller so results are scheduler-independent.
void parallel_for_index(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace detail

}  // namespace varix
