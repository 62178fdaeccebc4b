// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varix/path.hpp"

namespace varix {

enum class CrossingKind { Up, Down, Both };

/// Clock trace of one crossing direction. sigma[0] is the start index; each
/// later sigma entry is the index at which a crossing completed, interlaced
/// with the tau indices where the opposite predicate fired. count is the
/// number of completed crossings (sigma.size() - 1).
struct CrossingTrace {
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> tau;
    std::size_t count = 0;
};

/// Result of count_crossings. For kind Up only `up` is populated, for Down
/// only `down`, for Both both traces; count is always the total.
struct CrossingCount {
    std::int64_t count = 0;
    CrossingTrace up;
    CrossingTrace down;
};

/// Segment-crossing counts per Definitions of up/downcrossings with the
/// discrete clock convention: every search is min{ j >= s : predicate }
/// where s is the index at which the previous clock fired (s = 0 for the
/// first search). Predicates are strict: f < y, f > y + c. c = 0 counts
/// level crossings.
CrossingCount count_crossings(const DiscretePath& path, TruncationLevel c,
                              double y, CrossingKind kind);

/// Piecewise-constant crossing count in y. counts.size() equals
/// breakpoints.size() + 1; counts[i] is the constant value on the open
/// interval (breakpoints[i-1], breakpoints[i]), counts.front() and
/// counts.back() are the tails and must be zero. Counts at breakpoint
/// levels themselves are not defined.
class CrossingProfile {
public:
    CrossingProfile(CrossingKind kind, std::vector<double> breakpoints,
                    std::vector<std::int64_t> counts);

    [[nodiscard]] CrossingKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    [[nodiscard]] std::span<const std::int64_t> counts() const noexcept { return counts_; }

    /// Count on the interval containing y (right interval when y sits
    /// exactly on a breakpoint).
    [[nodiscard]] std::int64_t count_at(double y) const;

private:
    CrossingKind kind_;
    std::vector<double> breakpoints_;
    std::vector<std::int64_t> counts_;
};

/// Exact profile for a step path: the critical set is {f_i} union {f_i - c},
/// and the count on each open interval between consecutive critical points
/// is evaluated once at the midpoint.
CrossingProfile crossing_profile(const DiscretePath& path, TruncationLevel c,
                                 CrossingKind kind);

/// Nonnegative piecewise-constant density, same interval encoding as
/// CrossingProfile but real-valued. Tails may be nonzero constants.
class PiecewiseDensity {
public:
    PiecewiseDensity(std::vector<double> breakpoints, std::vector<double> values);

    [[nodiscard]] std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double value_at(double y) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// Integral of the profile over y: exact sum of count * interval length.
double profile_integral(const CrossingProfile& profile);

/// Weighted integral against a piecewise-constant density, evaluated on the
/// refined common partition of both breakpoint sets.
double profile_integral(const CrossingProfile& profile, const PiecewiseDensity& density);

/// Checks both sandwich inequalities for a step approximation f_eps of f
/// with ||f - f_eps||_inf <= eps and 0 < eps < c/2:
///   u_c^y(f) <= u_{c-2eps}^{y+eps}(f_eps)  and
///   u_{c+2eps}^{y-eps}(f_eps) <= u_c^y(f).
/// Throws ToleranceViolated when the distance precondition fails.
bool sandwich_check(const DiscretePath& f, const DiscretePath& f_eps, double eps,
                    TruncationLevel c, double y);

/// Integral of the crossing count over y, per truncation level. The input
/// sequence must be strictly decreasing and positive, with 0 permitted as
/// the final entry; the output is non-decreasing and ends at the classical
/// total variation when the sequence reaches 0.
std::vector<double> banach_limit(const DiscretePath& path,
                                 std::span<const double> c_sequence);

/// TSV serialization: one row `y_lo<TAB>y_hi<TAB>count` per interval with a
/// nonzero count; tails and zero intervals are omitted.
std::string to_tsv(const CrossingProfile& profile);

/// Density ingestion from the same TSV schema with a real-valued third
/// column. Rows must be disjoint; gaps carry density zero.
PiecewiseDensity density_from_tsv(std::string_view text);

namespace detail {

/// Completed-crossing count without trace bookkeeping. up=true counts
/// upcrossings of [y, y+c], up=false downcrossings.
std::int64_t clock_count(std::span<const double> values, double c, double y, bool up);

}  // namespace detail

}  // namespace varix
