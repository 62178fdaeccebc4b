// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "varix/errors.hpp"

namespace varix {

/// Sentinel standing in for +infinity in first-exit searches and crossing
/// clocks (the min-of-empty-set convention).
inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// Truncation parameter c >= 0. Segment operations require c > 0; level
/// operations run at c = 0.
class TruncationLevel {
public:
    explicit TruncationLevel(double c);

    [[nodiscard]] double value() const noexcept { return c_; }

    /// Throws DomainError when c == 0 (segment semantics demanded).
    void require_positive() const;

private:
    double c_;
};

/// Finite sampled path: the value sequence f_0,...,f_{L-1}, optionally
/// time-stamped. Values are validated finite at construction; immutable
/// afterwards, safe to share between threads.
class DiscretePath {
public:
    explicit DiscretePath(std::vector<double> values,
                          std::optional<std::vector<double>> times = std::nullopt);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] const std::optional<std::vector<double>>& times() const noexcept { return times_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
    std::optional<std::vector<double>> times_;
};

/// Validating constructor for a path; values are copied verbatim.
DiscretePath from_samples(std::vector<double> values,
                          std::optional<std::vector<double>> times = std::nullopt);

/// Non-decreasing rearrangement f_(0) <= ... <= f_(L-1).
std::vector<double> sorted_values(const DiscretePath& path);

/// max(values) - min(values); the largest |p(j) - p(i)| over index pairs.
double oscillation(const DiscretePath& path);

/// max_i |f(i) - g(i)| for equal-length paths.
double uniform_distance(const DiscretePath& f, const DiscretePath& g);

/// Step function in the alternating representation: point values f_{2k} at
/// anchors t(2k) and open-interval values f_{2k+1} on (t(2k+1), t(2k+2)),
/// with t(0)=t(1) < t(2)=t(3) < ... < t(2n). Carries exactly the value
/// sequence f_0,...,f_{2n}.
class StepFunction {
public:
    StepFunction(std::vector<double> anchors, std::vector<double> values);

    /// Canonical anchors 0,0,1,1,...,n-1,n-1,n for an odd-length value list.
    static StepFunction from_values(std::vector<double> values);

    [[nodiscard]] std::span<const double> anchors() const noexcept { return anchors_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    /// The value sequence as a DiscretePath (anchors are dropped: they
    /// repeat pairwise and cannot serve as strictly increasing times).
    [[nodiscard]] DiscretePath to_path() const;

private:
    std::vector<double> anchors_;
    std::vector<double> values_;
};

}  // namespace varix
