// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "varix/path.hpp"

namespace varix {

enum class SweepDirection { UpFirst, DownFirst, Flat };

/// Alternating first-exit chains with the band extrema of the index windows
/// between them. For UpFirst the chains interlace as
/// I_{U,0} < I_{D,0} < I_{U,1} < ... (mirrored for DownFirst); kNoIndex
/// encodes +infinity. segment_count is K, the number of completed bands
/// minus one; -1 means the path never leaves a band of width c (Flat).
struct SweepDecomposition {
    SweepDirection direction = SweepDirection::Flat;
    std::vector<std::size_t> up_exits;    // I_{U,0..K}
    std::vector<std::size_t> down_exits;  // I_{D,0..K}
    std::vector<double> band_min;         // m_0..m_K
    std::vector<double> band_max;         // M_0..M_K
    std::ptrdiff_t segment_count = -1;    // K
};

/// Total, upward and downward truncated variations at one truncation level.
struct VariationTriple {
    double ttv = 0.0;
    double utv = 0.0;
    double dtv = 0.0;
    double c = 0.0;
};

/// First up-exit and down-exit indices after `start`:
///   iU = min{ j > start : f_j > min_{start<=k<j} f_k + c }
///   iD = min{ j > start : f_j < max_{start<=k<j} f_k - c }
/// with kNoIndex for an empty search. Requires c > 0.
std::pair<std::size_t, std::size_t> first_exit_indices(const DiscretePath& path,
                                                       std::size_t start,
                                                       TruncationLevel c);

/// Full interlaced chains until +infinity, with band extrema. Requires
/// c > 0. A DownFirst path is decomposed by negating, running the UpFirst
/// sweep and reflecting (indices unchanged, values negated, U/D swapped).
SweepDecomposition sweep_decompose(const DiscretePath& path, TruncationLevel c);

/// O(L) truncated variations via the sweep:
///   utv = sum over up-bands of (M_k - m_k - c), dtv mirrored on -p,
///   ttv = utv + dtv.
/// c = 0 yields the classical total/positive/negative variations.
VariationTriple truncated_variations(const DiscretePath& path, TruncationLevel c);

enum class OracleMode {
    Exhaustive,       // maximize over all subsequences; requires L <= 15
    ChainRecursion,   // quadratic DP best(j) = max(0, max_{i<j} best(i) + (w(i,j)-c)+)
};

/// Direct evaluation of the sup-over-partitions definitions. Both modes are
/// independent of the sweep and of each other; they exist as oracles.
VariationTriple brute_force_variations(const DiscretePath& path, TruncationLevel c,
                                       OracleMode mode = OracleMode::ChainRecursion);

/// The minimal-total-variation c/2-approximation p^c built from running
/// extrema over the sweep windows:
///   m_0 + c/2                      before the first up-exit,
///   max_{I_{U,k} <= j <= i} f_j - c/2   on [I_{U,k}, I_{D,k}),
///   min_{I_{D,k} <= j <= i} f_j + c/2   on [I_{D,k}, I_{U,k+1}).
/// Satisfies ||p - p^c||_inf <= c/2 and TV(p^c) = TTV^c(p). A flat path maps
/// to the constant (min+max)/2. Requires c > 0. Times are preserved.
DiscretePath optimal_approximation(const DiscretePath& path, TruncationLevel c);

namespace detail {

/// Upward chains of sign*values: I_{U,k}, I_{D,k} (last down exit may be
/// kNoIndex) and the signed band extrema. Empty chains when there is no
/// up-exit at all.
struct UpSweep {
    std::vector<std::size_t> up_exits;
    std::vector<std::size_t> down_exits;
    std::vector<double> band_min;
    std::vector<double> band_max;
};

UpSweep up_sweep(std::span<const double> values, double c, double sign);

/// Sum of (M_k - m_k - c) over the upward chains of sign*values, without
/// materializing them. sign=+1 gives UTV^c, sign=-1 gives DTV^c. c >= 0.
double upward_sweep_sum(std::span<const double> values, double c, double sign);

std::pair<std::size_t, std::size_t> first_exits(std::span<const double> values,
                                                std::size_t start, double c,
                                                double sign);

}  // namespace detail

}  // namespace varix
