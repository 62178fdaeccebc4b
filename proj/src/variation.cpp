// SPDX-License-Identifier: MIT
#include "varix/variation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace varix {

namespace detail {

std::pair<std::size_t, std::size_t> first_exits(std::span<const double> values,
                                                std::size_t start, double c,
                                                double sign) {
    const std::size_t n = values.size();
    std::size_t iu = kNoIndex;
    std::size_t id = kNoIndex;
    double run_min = sign * values[start];
    double run_max = run_min;
    for (std::size_t j = start + 1; j < n; ++j) {
        const double vj = sign * values[j];
        if (iu == kNoIndex && vj > run_min + c) iu = j;
        if (id == kNoIndex && vj < run_max - c) id = j;
        if (iu != kNoIndex && id != kNoIndex) break;
        run_min = std::min(run_min, vj);
        run_max = std::max(run_max, vj);
    }
    return {iu, id};
}

UpSweep up_sweep(std::span<const double> values, double c, double sign) {
    UpSweep sw;
    const std::size_t n = values.size();
    std::size_t s = 0;
    while (true) {
        // up-exit search from s; m tracks min over [s, j)
        double m = sign * values[s];
        std::size_t u = kNoIndex;
        for (std::size_t j = s + 1; j < n; ++j) {
            const double vj = sign * values[j];
            if (vj > m + c) {
                u = j;
                break;
            }
            if (vj < m) m = vj;
        }
        if (u == kNoIndex) break;
        // down-exit search from u; M tracks max over [u, j)
        double M = sign * values[u];
        std::size_t d = kNoIndex;
        for (std::size_t j = u + 1; j < n; ++j) {
            const double vj = sign * values[j];
            if (vj < M - c) {
                d = j;
                break;
            }
            if (vj > M) M = vj;
        }
        sw.up_exits.push_back(u);
        sw.down_exits.push_back(d);
        sw.band_min.push_back(m);
        sw.band_max.push_back(M);
        if (d == kNoIndex) break;
        s = d;
    }
    return sw;
}

double upward_sweep_sum(std::span<const double> values, double c, double sign) {
    const std::size_t n = values.size();
    double total = 0.0;
    std::size_t s = 0;
    while (true) {
        double m = sign * values[s];
        std::size_t u = kNoIndex;
        for (std::size_t j = s + 1; j < n; ++j) {
            const double vj = sign * values[j];
            if (vj > m + c) {
                u = j;
                break;
            }
            if (vj < m) m = vj;
        }
        if (u == kNoIndex) break;
        double M = sign * values[u];
        std::size_t d = kNoIndex;
        for (std::size_t j = u + 1; j < n; ++j) {
            const double vj = sign * values[j];
            if (vj < M - c) {
                d = j;
                break;
            }
            if (vj > M) M = vj;
        }
        total += (M - m) - c;
        if (d == kNoIndex) break;
        s = d;
    }
    return total;
}

}  // namespace detail

std::pair<std::size_t, std::size_t> first_exit_indices(const DiscretePath& path,
                                                       std::size_t start,
                                                       TruncationLevel c) {
    if (start >= path.size()) {
        throw IndexOutOfRange(start, path.size());
    }
    c.require_positive();
    return detail::first_exits(path.values(), start, c.value(), 1.0);
}

SweepDecomposition sweep_decompose(const DiscretePath& path, TruncationLevel c) {
    c.require_positive();
    const auto values = path.values();
    const auto [iu0, id0] = detail::first_exits(values, 0, c.value(), 1.0);

    SweepDecomposition out;
    if (iu0 == kNoIndex && id0 == kNoIndex) {
        return out;  // Flat, K = -1
    }
    if (iu0 < id0) {
        auto sw = detail::up_sweep(values, c.value(), 1.0);
        out.direction = SweepDirection::UpFirst;
        out.up_exits = std::move(sw.up_exits);
        out.down_exits = std::move(sw.down_exits);
        out.band_min = std::move(sw.band_min);
        out.band_max = std::move(sw.band_max);
    } else {
        // Decompose -p and reflect: indices unchanged, values negated,
        // up/down roles swapped.
        auto sw = detail::up_sweep(values, c.value(), -1.0);
        out.direction = SweepDirection::DownFirst;
        out.down_exits = std::move(sw.up_exits);
        out.up_exits = std::move(sw.down_exits);
        out.band_min.reserve(sw.band_max.size());
        out.band_max.reserve(sw.band_min.size());
        for (double v : sw.band_max) out.band_min.push_back(-v);
        for (double v : sw.band_min) out.band_max.push_back(-v);
    }
    out.segment_count = static_cast<std::ptrdiff_t>(out.band_min.size()) - 1;
    return out;
}

VariationTriple truncated_variations(const DiscretePath& path, TruncationLevel c) {
    VariationTriple t;
    t.c = c.value();
    t.utv = detail::upward_sweep_sum(path.values(), c.value(), 1.0);
    t.dtv = detail::upward_sweep_sum(path.values(), c.value(), -1.0);
    t.ttv = t.utv + t.dtv;
    return t;
}

namespace {

VariationTriple exhaustive_oracle(std::span<const double> v, double c) {
    const std::size_t n = v.size();
    if (n > 15) {
        throw TooLongForExhaustive(n);
    }
    double best_t = 0.0, best_u = 0.0, best_d = 0.0;
    const std::uint32_t full = static_cast<std::uint32_t>(1u << n);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        double st = 0.0, su = 0.0, sd = 0.0;
        double prev = 0.0;
        bool have_prev = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (have_prev) {
                const double delta = v[i] - prev;
                st += std::max(std::abs(delta) - c, 0.0);
                su += std::max(delta - c, 0.0);
                sd += std::max(-delta - c, 0.0);
            }
            prev = v[i];
            have_prev = true;
        }
        best_t = std::max(best_t, st);
        best_u = std::max(best_u, su);
        best_d = std::max(best_d, sd);
    }
    return {best_t, best_u, best_d, c};
}

VariationTriple chain_oracle(std::span<const double> v, double c) {
    const std::size_t n = v.size();
    std::vector<double> bt(n, 0.0), bu(n, 0.0), bd(n, 0.0);
    double best_t = 0.0, best_u = 0.0, best_d = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const double delta = v[j] - v[i];
            bt[j] = std::max(bt[j], bt[i] + std::max(std::abs(delta) - c, 0.0));
            bu[j] = std::max(bu[j], bu[i] + std::max(delta - c, 0.0));
            bd[j] = std::max(bd[j], bd[i] + std::max(-delta - c, 0.0));
        }
        best_t = std::max(best_t, bt[j]);
        best_u = std::max(best_u, bu[j]);
        best_d = std::max(best_d, bd[j]);
    }
    return {best_t, best_u, best_d, c};
}

}  // namespace

VariationTriple brute_force_variations(const DiscretePath& path, TruncationLevel c,
                                       OracleMode mode) {
    switch (mode) {
        case OracleMode::Exhaustive:
            return exhaustive_oracle(path.values(), c.value());
        case OracleMode::ChainRecursion:
        default:
            return chain_oracle(path.values(), c.value());
    }
}

namespace {

// p^c of (sign * values), in signed coordinates.
std::vector<double> signed_pc(std::span<const double> values, double c, double sign) {
    const std::size_t n = values.size();
    const auto sw = detail::up_sweep(values, c, sign);
    std::vector<double> out(n);
    const double half = c / 2.0;

    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(sw.up_exits.front()),
              sw.band_min.front() + half);
    for (std::size_t k = 0; k < sw.up_exits.size(); ++k) {
        const std::size_t u = sw.up_exits[k];
        const std::size_t d = sw.down_exits[k];
        const std::size_t up_end = (d == kNoIndex) ? n : d;
        double run = sign * values[u];
        for (std::size_t i = u; i < up_end; ++i) {
            run = std::max(run, sign * values[i]);
            out[i] = run - half;
        }
        if (d == kNoIndex) break;
        const std::size_t down_end = (k + 1 < sw.up_exits.size()) ? sw.up_exits[k + 1] : n;
        run = sign * values[d];
        for (std::size_t i = d; i < down_end; ++i) {
            run = std::min(run, sign * values[i]);
            out[i] = run + half;
        }
    }
    return out;
}

}  // namespace

DiscretePath optimal_approximation(const DiscretePath& path, TruncationLevel c) {
    c.require_positive();
    const auto values = path.values();
    const auto [iu0, id0] = detail::first_exits(values, 0, c.value(), 1.0);

    std::vector<double> out;
    if (iu0 == kNoIndex && id0 == kNoIndex) {
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        out.assign(values.size(), (*lo + *hi) / 2.0);
    } else if (iu0 < id0) {
        out = signed_pc(values, c.value(), 1.0);
    } else {
        out = signed_pc(values, c.value(), -1.0);
        for (double& v : out) v = -v;
    }
    return DiscretePath(std::move(out), path.times());
}

}  // namespace varix
