// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>

namespace varix {

/// Inverse of the standard normal CDF (Wichura's AS241 rational
/// approximation, full double precision). p must lie in (0, 1).
double inverse_normal_cdf(double p);

/// Counter-based per-path random stream: a splitmix64 counter keyed by
/// (seed, path index). Streams for different indices are independent and a
/// path's draws depend only on (seed, index), so parallel and serial runs
/// agree bit for bit. Draw order is fixed by the consumer.
class PathStream {
public:
    PathStream(std::uint64_t seed, std::uint64_t path_index);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1); safe for log and quantile use.
    double next_uniform();

    /// Exponential with the given rate, via inversion.
    double next_exponential(double rate);

    /// Standard normal via the inverse CDF; consumes exactly one u64.
    double next_normal();

private:
    std::uint64_t state_;
};

}  // namespace varix
