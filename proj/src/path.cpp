// SPDX-License-Identifier: MIT
#include "varix/path.hpp"

#include <algorithm>
#include <cmath>

namespace varix {

TruncationLevel::TruncationLevel(double c) : c_(c) {
    if (!std::isfinite(c) || c < 0.0) {
        throw DomainError("truncation level must be finite and >= 0");
    }
}

void TruncationLevel::require_positive() const {
    if (c_ <= 0.0) {
        throw DomainError("operation requires truncation level c > 0");
    }
}

DiscretePath::DiscretePath(std::vector<double> values,
                           std::optional<std::vector<double>> times)
    : values_(std::move(values)), times_(std::move(times)) {
    if (values_.empty()) {
        throw EmptyPath();
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw NonFiniteValue(i);
        }
    }
    if (times_) {
        if (times_->size() != values_.size()) {
            throw LengthMismatch(times_->size(), values_.size());
        }
        for (std::size_t i = 0; i < times_->size(); ++i) {
            if (!std::isfinite((*times_)[i])) {
                throw NonFiniteValue(i);
            }
            if (i > 0 && (*times_)[i] <= (*times_)[i - 1]) {
                throw NonMonotoneTimes(i);
            }
        }
    }
}

DiscretePath from_samples(std::vector<double> values,
                          std::optional<std::vector<double>> times) {
    return DiscretePath(std::move(values), std::move(times));
}

std::vector<double> sorted_values(const DiscretePath& path) {
    std::vector<double> out(path.values().begin(), path.values().end());
    std::sort(out.begin(), out.end());
    return out;
}

double oscillation(const DiscretePath& path) {
    auto [lo, hi] = std::minmax_element(path.values().begin(), path.values().end());
    return *hi - *lo;
}

double uniform_distance(const DiscretePath& f, const DiscretePath& g) {
    if (f.size() != g.size()) {
        throw LengthMismatch(f.size(), g.size());
    }
    double d = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        d = std::max(d, std::abs(f[i] - g[i]));
    }
    return d;
}

StepFunction::StepFunction(std::vector<double> anchors, std::vector<double> values)
    : anchors_(std::move(anchors)), values_(std::move(values)) {
    if (anchors_.size() != values_.size()) {
        throw LengthMismatch(anchors_.size(), values_.size());
    }
    if (anchors_.empty() || anchors_.size() % 2 == 0) {
        throw DomainError("step function needs an odd number 2n+1 of anchors");
    }
    const std::size_t n = anchors_.size() / 2;
    for (std::size_t k = 0; k < n; ++k) {
        if (anchors_[2 * k] != anchors_[2 * k + 1]) {
            throw DomainError("anchors must pair up: t(2k) == t(2k+1)");
        }
        if (!(anchors_[2 * k + 1] < anchors_[2 * k + 2])) {
            throw DomainError("anchor pairs must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw NonFiniteValue(i);
        }
    }
}

StepFunction StepFunction::from_values(std::vector<double> values) {
    if (values.empty() || values.size() % 2 == 0) {
        throw DomainError("alternating representation needs 2n+1 values");
    }
    const std::size_t n = values.size() / 2;
    std::vector<double> anchors;
    anchors.reserve(values.size());
    for (std::size_t k = 0; k < n; ++k) {
        anchors.push_back(static_cast<double>(k));
        anchors.push_back(static_cast<double>(k));
    }
    anchors.push_back(static_cast<double>(n));
    return StepFunction(std::move(anchors), std::move(values));
}

DiscretePath StepFunction::to_path() const {
    return DiscretePath(std::vector<double>(values_.begin(), values_.end()));
}

}  // namespace varix
