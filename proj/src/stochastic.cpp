// SPDX-License-Identifier: MIT
#include "varix/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "varix/crossings.hpp"
#include "varix/rng.hpp"
#include "varix/variation.hpp"

namespace varix {

void KilledBMConfig::validate() const {
    if (!std::isfinite(mu)) throw DomainError("mu must be finite");
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("killing rate v must be > 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("truncation c must be > 0");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("grid step dt must be > 0");
    if (n_paths < 1) throw DomainError("n_paths must be >= 1");
}

namespace detail {

void generate_killed_path(const KilledBMConfig& config, std::int64_t path_index,
                          std::vector<double>& out) {
    PathStream stream(config.seed, static_cast<std::uint64_t>(path_index));
    const double tau = stream.next_exponential(config.v);
    const auto n_steps = static_cast<std::int64_t>(std::floor(tau / config.dt));
    out.clear();
    out.reserve(static_cast<std::size_t>(n_steps) + 1);
    const double drift = config.mu * config.dt;
    const double scale = std::sqrt(config.dt);
    double w = 0.0;
    out.push_back(w);
    for (std::int64_t k = 0; k < n_steps; ++k) {
        w += drift + scale * stream.next_normal();
        out.push_back(w);
    }
}

void parallel_for_index(std::int64_t n, const std::function<void(std::int64_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(
        effective_thread_count(), n > 0 ? static_cast<std::size_t>(n) : 1);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> cursor{0};
    constexpr std::int64_t kChunk = 16;
    auto worker = [&] {
        while (true) {
            const std::int64_t begin = cursor.fetch_add(kChunk);
            if (begin >= n) break;
            const std::int64_t end = std::min(begin + kChunk, n);
            for (std::int64_t i = begin; i < end; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace detail

std::size_t effective_thread_count() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("VARIX_THREADS")) {
        const long requested = std::strtol(cap, nullptr, 10);
        if (requested >= 1 && static_cast<std::size_t>(requested) < n) {
            n = static_cast<std::size_t>(requested);
        }
    }
    return n;
}

DiscretePath simulate_killed_bm(const KilledBMConfig& config, std::int64_t path_index) {
    config.validate();
    if (path_index < 0 || path_index >= config.n_paths) {
        throw IndexOutOfRange(static_cast<std::size_t>(path_index),
                              static_cast<std::size_t>(config.n_paths));
    }
    std::vector<double> values;
    detail::generate_killed_path(config, path_index, values);
    return DiscretePath(std::move(values));
}

double closed_form_eutv(double mu, double v, double c) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("v must be > 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be > 0");
    if (!std::isfinite(mu)) throw DomainError("mu must be finite");
    const double gamma = std::sqrt(mu * mu + 2.0 * v);
    return std::exp(mu * c) * gamma / (2.0 * v * std::sinh(c * gamma));
}

UpcrossingLaw upcrossing_law(double mu, double v, double c, double y) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("v must be > 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be > 0");
    if (!std::isfinite(mu) || !std::isfinite(y)) throw DomainError("mu, y must be finite");
    const double gamma = std::sqrt(mu * mu + 2.0 * v);
    UpcrossingLaw law{};
    if (y >= 0.0) {
        law.p_once = std::exp(mu * (y + c) - (y + c) * gamma);
    } else {
        law.p_once = std::exp(mu * (y + c) + (y - c) * gamma);
    }
    law.ratio = std::exp(-2.0 * c * gamma);
    law.mean = law.p_once / (1.0 - law.ratio);
    return law;
}

MCEstimate mc_expected_utv(const KilledBMConfig& config) {
    config.validate();
    const std::int64_t n = config.n_paths;
    std::vector<double> per_path(static_cast<std::size_t>(n), 0.0);
    detail::parallel_for_index(n, [&](std::int64_t i) {
        thread_local std::vector<double> buffer;
        detail::generate_killed_path(config, i, buffer);
        per_path[static_cast<std::size_t>(i)] =
            detail::upward_sweep_sum(buffer, config.c, 1.0);
    });

    double sum = 0.0;
    for (double x : per_path) sum += x;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double x : per_path) ss += (x - mean) * (x - mean);
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

    MCEstimate est;
    est.mean = mean;
    est.std_error = sd / std::sqrt(static_cast<double>(n));
    est.n = n;
    est.target = closed_form_eutv(config.mu, config.v, config.c);
    return est;
}

std::vector<double> mc_crossing_tail(const KilledBMConfig& config, double y, int n_max) {
    config.validate();
    if (n_max < 2) throw DomainError("n_max must be >= 2");
    const std::int64_t n = config.n_paths;
    std::vector<std::int64_t> per_path(static_cast<std::size_t>(n), 0);
    detail::parallel_for_index(n, [&](std::int64_t i) {
        thread_local std::vector<double> buffer;
        detail::generate_killed_path(config, i, buffer);
        per_path[static_cast<std::size_t>(i)] =
            detail::clock_count(buffer, config.c, y, true);
    });

    std::vector<double> tail(static_cast<std::size_t>(n_max), 0.0);
    for (std::int64_t u : per_path) {
        const auto top = std::min<std::int64_t>(u, n_max);
        for (std::int64_t k = 1; k <= top; ++k) {
            tail[static_cast<std::size_t>(k - 1)] += 1.0;
        }
    }
    for (double& f : tail) f /= static_cast<double>(n);
    return tail;
}

}  // namespace varix
