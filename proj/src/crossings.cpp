// SPDX-License-Identifier: MIT
#include "varix/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "varix/format.hpp"

namespace varix {

namespace detail {

std::int64_t clock_count(std::span<const double> values, double c, double y, bool up) {
    const double lo = y;
    const double hi = y + c;
    const std::size_t n = values.size();
    std::int64_t count = 0;
    std::size_t j = 0;
    if (up) {
        while (true) {
            while (j < n && !(values[j] < lo)) ++j;
            if (j == n) break;
            while (j < n && !(values[j] > hi)) ++j;
            if (j == n) break;
            ++count;
        }
    } else {
        while (true) {
            while (j < n && !(values[j] > hi)) ++j;
            if (j == n) break;
            while (j < n && !(values[j] < lo)) ++j;
            if (j == n) break;
            ++count;
        }
    }
    return count;
}

namespace {

CrossingTrace run_clocks(std::span<const double> values, double c, double y, bool up) {
    const double lo = y;
    const double hi = y + c;
    const std::size_t n = values.size();
    CrossingTrace tr;
    tr.sigma.push_back(0);
    std::size_t j = 0;
    while (true) {
        // tau search: first index where the entry predicate fires
        while (j < n && !(up ? values[j] < lo : values[j] > hi)) ++j;
        if (j == n) break;
        tr.tau.push_back(j);
        // sigma search: completion on the opposite side of the segment
        while (j < n && !(up ? values[j] > hi : values[j] < lo)) ++j;
        if (j == n) break;
        tr.sigma.push_back(j);
    }
    tr.count = tr.sigma.size() - 1;
    return tr;
}

}  // namespace

}  // namespace detail

CrossingCount count_crossings(const DiscretePath& path, TruncationLevel c,
                              double y, CrossingKind kind) {
    const auto v = path.values();
    CrossingCount out;
    if (kind == CrossingKind::Up || kind == CrossingKind::Both) {
        out.up = detail::run_clocks(v, c.value(), y, true);
        out.count += static_cast<std::int64_t>(out.up.count);
    }
    if (kind == CrossingKind::Down || kind == CrossingKind::Both) {
        out.down = detail::run_clocks(v, c.value(), y, false);
        out.count += static_cast<std::int64_t>(out.down.count);
    }
    return out;
}

CrossingProfile::CrossingProfile(CrossingKind kind, std::vector<double> breakpoints,
                                 std::vector<std::int64_t> counts)
    : kind_(kind), breakpoints_(std::move(breakpoints)), counts_(std::move(counts)) {
    if (counts_.size() != breakpoints_.size() + 1) {
        throw LengthMismatch(counts_.size(), breakpoints_.size() + 1);
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!std::isfinite(breakpoints_[i])) throw NonFiniteValue(i);
        if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) {
            throw DomainError("profile breakpoints must be strictly increasing");
        }
    }
    for (std::int64_t n : counts_) {
        if (n < 0) throw DomainError("crossing counts must be nonnegative");
    }
    if (counts_.front() != 0 || counts_.back() != 0) {
        throw DomainError("profile tails must be zero");
    }
}

std::int64_t CrossingProfile::count_at(double y) const {
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
    return counts_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

CrossingProfile crossing_profile(const DiscretePath& path, TruncationLevel c,
                                 CrossingKind kind) {
    const auto v = path.values();
    std::vector<double> crit;
    crit.reserve(2 * v.size());
    for (double x : v) {
        crit.push_back(x);
        if (c.value() > 0.0) crit.push_back(x - c.value());
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    std::vector<std::int64_t> counts(crit.size() + 1, 0);
    for (std::size_t i = 1; i < crit.size(); ++i) {
        const double mid = crit[i - 1] + (crit[i] - crit[i - 1]) / 2.0;
        std::int64_t n = 0;
        if (kind == CrossingKind::Up || kind == CrossingKind::Both) {
            n += detail::clock_count(v, c.value(), mid, true);
        }
        if (kind == CrossingKind::Down || kind == CrossingKind::Both) {
            n += detail::clock_count(v, c.value(), mid, false);
        }
        counts[i] = n;
    }
    return CrossingProfile(kind, std::move(crit), std::move(counts));
}

PiecewiseDensity::PiecewiseDensity(std::vector<double> breakpoints,
                                   std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breakpoints_.size() + 1) {
        throw LengthMismatch(values_.size(), breakpoints_.size() + 1);
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!std::isfinite(breakpoints_[i])) throw NonFiniteValue(i);
        if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) {
            throw DomainError("density breakpoints must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
            throw DomainError("density values must be finite and nonnegative");
        }
    }
}

double PiecewiseDensity::value_at(double y) const {
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double profile_integral(const CrossingProfile& profile) {
    const auto bp = profile.breakpoints();
    const auto counts = profile.counts();
    double total = 0.0;
    for (std::size_t i = 1; i < bp.size(); ++i) {
        total += static_cast<double>(counts[i]) * (bp[i] - bp[i - 1]);
    }
    return total;
}

double profile_integral(const CrossingProfile& profile, const PiecewiseDensity& density) {
    const auto pb = profile.breakpoints();
    if (pb.empty()) return 0.0;
    std::vector<double> merged(pb.begin(), pb.end());
    merged.insert(merged.end(), density.breakpoints().begin(), density.breakpoints().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    // The profile vanishes outside its own breakpoint range, so the
    // refined sum over [pb.front(), pb.back()] is the whole integral.
    double total = 0.0;
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i] <= pb.front() || merged[i - 1] >= pb.back()) continue;
        const double mid = merged[i - 1] + (merged[i] - merged[i - 1]) / 2.0;
        total += static_cast<double>(profile.count_at(mid)) * density.value_at(mid) *
                 (merged[i] - merged[i - 1]);
    }
    return total;
}

bool sandwich_check(const DiscretePath& f, const DiscretePath& f_eps, double eps,
                    TruncationLevel c, double y) {
    if (!(eps > 0.0) || !(eps < c.value() / 2.0)) {
        throw DomainError("sandwich_check requires 0 < eps < c/2");
    }
    if (uniform_distance(f, f_eps) > eps) {
        throw ToleranceViolated("approximation is farther than eps from the path");
    }
    const auto u = detail::clock_count(f.values(), c.value(), y, true);
    const auto upper = detail::clock_count(f_eps.values(), c.value() - 2.0 * eps, y + eps, true);
    const auto lower = detail::clock_count(f_eps.values(), c.value() + 2.0 * eps, y - eps, true);
    return u <= upper && lower <= u;
}

std::vector<double> banach_limit(const DiscretePath& path,
                                 std::span<const double> c_sequence) {
    for (std::size_t i = 0; i < c_sequence.size(); ++i) {
        const bool last = (i + 1 == c_sequence.size());
        if (!std::isfinite(c_sequence[i]) || c_sequence[i] < 0.0 ||
            (!last && c_sequence[i] == 0.0)) {
            throw DomainError("truncation sequence must be positive (0 allowed last)");
        }
        if (i > 0 && !(c_sequence[i] < c_sequence[i - 1])) {
            throw DomainError("truncation sequence must be strictly decreasing");
        }
    }
    std::vector<double> out;
    out.reserve(c_sequence.size());
    for (double c : c_sequence) {
        out.push_back(profile_integral(
            crossing_profile(path, TruncationLevel(c), CrossingKind::Both)));
    }
    return out;
}

std::string to_tsv(const CrossingProfile& profile) {
    const auto bp = profile.breakpoints();
    const auto counts = profile.counts();
    std::string out;
    for (std::size_t i = 1; i < bp.size(); ++i) {
        if (counts[i] == 0) continue;
        out += format_double(bp[i - 1]);
        out += '\t';
        out += format_double(bp[i]);
        out += '\t';
        out += std::to_string(counts[i]);
        out += '\n';
    }
    return out;
}

PiecewiseDensity density_from_tsv(std::string_view text) {
    struct Row {
        double lo, hi, value;
    };
    std::vector<Row> rows;
    std::size_t line_no = 0;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        Row r{};
        if (!(fields >> r.lo >> r.hi >> r.value)) {
            throw ParseError(line_no, "expected `lo hi value`");
        }
        if (!(r.lo < r.hi)) {
            throw ParseError(line_no, "interval must satisfy lo < hi");
        }
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.lo < b.lo; });
    if (rows.empty()) {
        return PiecewiseDensity({0.0}, {0.0, 0.0});
    }

    std::vector<double> breakpoints;
    std::vector<double> interior;
    for (const Row& r : rows) {
        if (!breakpoints.empty() && r.lo < breakpoints.back()) {
            throw DomainError("density intervals overlap");
        }
        if (breakpoints.empty() || r.lo > breakpoints.back()) {
            if (!breakpoints.empty()) interior.push_back(0.0);  // gap
            breakpoints.push_back(r.lo);
        }
        breakpoints.push_back(r.hi);
        interior.push_back(r.value);
    }
    std::vector<double> values;
    values.reserve(interior.size() + 2);
    values.push_back(0.0);
    values.insert(values.end(), interior.begin(), interior.end());
    values.push_back(0.0);
    return PiecewiseDensity(std::move(breakpoints), std::move(values));
}

}  // namespace varix
