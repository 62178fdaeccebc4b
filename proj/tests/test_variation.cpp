// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <cmath>
#include <vector>

#include "test_util.hpp"
#include "varix/variation.hpp"

using namespace varix;

namespace {

const DiscretePath kWorked = from_samples({0.0, 1.0, 0.2, 1.5});
const DiscretePath kMirror = from_samples({1.0, 0.2, 1.5, 0.0});

// Classical variations by direct consecutive summation; independent of the
// sweep and of the oracles.
VariationTriple consecutive_variations(const DiscretePath& p) {
    VariationTriple t;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double d = p[i] - p[i - 1];
        t.utv += std::max(d, 0.0);
        t.dtv += std::max(-d, 0.0);
        t.ttv += std::abs(d);
    }
    return t;
}

}  // namespace

TEST_CASE("first exit indices on worked paths") {
    const TruncationLevel c(0.5);
    CHECK(first_exit_indices(kWorked, 0, c) == std::pair<std::size_t, std::size_t>{1, 2});
    const auto flat = first_exit_indices(from_samples({0.0, 0.3, 0.1}), 0, c);
    CHECK(flat.first == kNoIndex);
    CHECK(flat.second == kNoIndex);
    CHECK(first_exit_indices(kMirror, 0, c) == std::pair<std::size_t, std::size_t>{2, 1});

    CHECK_THROWS_AS(first_exit_indices(kWorked, 4, c), IndexOutOfRange);
    CHECK_THROWS_AS(first_exit_indices(kWorked, 0, TruncationLevel(0.0)), DomainError);
}

TEST_CASE("first exits are never the same finite index") {
    const double levels[] = {0.01, 0.1, 0.4, 1.0};
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto p = testing::random_path(21, k, 2, 80);
        for (double c : levels) {
            for (std::size_t start = 0; start + 1 < p.size(); start += 3) {
                const auto [iu, id] = first_exit_indices(p, start, TruncationLevel(c));
                if (iu != kNoIndex || id != kNoIndex) {
                    CHECK(iu != id);
                }
            }
        }
    }
}

TEST_CASE("sweep decomposition of the worked path") {
    const auto sw = sweep_decompose(kWorked, TruncationLevel(0.5));
    CHECK(sw.direction == SweepDirection::UpFirst);
    CHECK(sw.segment_count == 1);
    CHECK(sw.up_exits == std::vector<std::size_t>{1, 3});
    CHECK(sw.down_exits == std::vector<std::size_t>{2, kNoIndex});
    CHECK(sw.band_min == std::vector<double>{0.0, 0.2});
    CHECK(sw.band_max == std::vector<double>{1.0, 1.5});
}

TEST_CASE("sweep decomposition: flat and down-first cases") {
    const auto flat = sweep_decompose(from_samples({0.0, 0.3, 0.1}), TruncationLevel(0.5));
    CHECK(flat.direction == SweepDirection::Flat);
    CHECK(flat.segment_count == -1);
    CHECK(flat.up_exits.empty());

    const auto down = sweep_decompose(kMirror, TruncationLevel(0.5));
    CHECK(down.direction == SweepDirection::DownFirst);
    CHECK(down.segment_count == 1);
    CHECK(down.down_exits == std::vector<std::size_t>{1, 3});
    CHECK(down.up_exits == std::vector<std::size_t>{2, kNoIndex});
    CHECK(down.band_max == std::vector<double>{1.0, 1.5});
    CHECK(down.band_min == std::vector<double>{0.2, 0.0});
}

TEST_CASE("sweep decomposition invariants on random paths") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto p = testing::random_path(22, k, 2, 120);
        for (double c : {0.05, 0.3, 0.8}) {
            const auto sw = sweep_decompose(p, TruncationLevel(c));
            if (sw.direction == SweepDirection::Flat) {
                CHECK(oscillation(p) <= c);
                continue;
            }
            CHECK(oscillation(p) > c);
            const auto K = static_cast<std::size_t>(sw.segment_count);
            REQUIRE(sw.band_min.size() == K + 1);
            REQUIRE(sw.band_max.size() == K + 1);
            for (std::size_t i = 0; i <= K; ++i) {
                CHECK(sw.band_max[i] - sw.band_min[i] > c);
            }
            // chains interlace
            const auto& first = sw.direction == SweepDirection::UpFirst ? sw.up_exits
                                                                        : sw.down_exits;
            const auto& second = sw.direction == SweepDirection::UpFirst ? sw.down_exits
                                                                         : sw.up_exits;
            REQUIRE(first.size() == K + 1);
            REQUIRE(second.size() == K + 1);
            for (std::size_t i = 0; i <= K; ++i) {
                CHECK(first[i] < second[i]);
                if (i + 1 <= K) CHECK(second[i] < first[i + 1]);
            }
        }
    }
}

TEST_CASE("truncated variations of the worked paths") {
    const auto t = truncated_variations(kWorked, TruncationLevel(0.5));
    CHECK(t.ttv == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(t.utv == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(t.dtv == doctest::Approx(0.3).epsilon(1e-12));

    const auto mono = truncated_variations(from_samples({0.0, 1.0, 2.0}), TruncationLevel(0.5));
    CHECK(mono.ttv == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(mono.utv == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(mono.dtv == 0.0);

    const auto m = truncated_variations(kMirror, TruncationLevel(0.5));
    CHECK(m.ttv == doctest::Approx(2.1).epsilon(1e-12));
    CHECK(m.utv == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(m.dtv == doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("c = 0 recovers the classical variations") {
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto p = testing::random_path(23, k, 2, 100);
        const auto sweep = truncated_variations(p, TruncationLevel(0.0));
        const auto direct = consecutive_variations(p);
        CHECK(sweep.ttv == doctest::Approx(direct.ttv).epsilon(1e-12));
        CHECK(sweep.utv == doctest::Approx(direct.utv).epsilon(1e-12));
        CHECK(sweep.dtv == doctest::Approx(direct.dtv).epsilon(1e-12));
    }
}

TEST_CASE("brute force oracles") {
    const TruncationLevel c(0.5);
    const auto ex = brute_force_variations(kWorked, c, OracleMode::Exhaustive);
    CHECK(ex.utv == doctest::Approx(1.3).epsilon(1e-12));
    const auto ch = brute_force_variations(kWorked, c, OracleMode::ChainRecursion);
    CHECK(ch.utv == doctest::Approx(1.3).epsilon(1e-12));

    // c at or above the oscillation truncates everything away
    const auto zero = brute_force_variations(kWorked, TruncationLevel(2.0), OracleMode::Exhaustive);
    CHECK(zero.ttv == 0.0);
    CHECK(zero.utv == 0.0);
    CHECK(zero.dtv == 0.0);

    const auto single = brute_force_variations(from_samples({0.0, 1.0}), TruncationLevel(0.0),
                                               OracleMode::Exhaustive);
    CHECK(single.ttv == 1.0);
    CHECK(single.utv == 1.0);
    CHECK(single.dtv == 0.0);

    const auto longer = testing::random_path(3, 0, 16, 16);
    CHECK_THROWS_AS(brute_force_variations(longer, c, OracleMode::Exhaustive),
                    TooLongForExhaustive);
}

TEST_CASE("sweep agrees with both oracles") {
    for (std::uint64_t k = 0; k < 150; ++k) {
        const auto p = testing::random_path(24, k, 2, 12);
        for (double c : {0.1, 0.3, 0.7}) {
            const TruncationLevel level(c);
            const auto sweep = truncated_variations(p, level);
            const auto ex = brute_force_variations(p, level, OracleMode::Exhaustive);
            const auto ch = brute_force_variations(p, level, OracleMode::ChainRecursion);
            CHECK(sweep.ttv == doctest::Approx(ex.ttv).epsilon(1e-12));
            CHECK(sweep.utv == doctest::Approx(ex.utv).epsilon(1e-12));
            CHECK(sweep.dtv == doctest::Approx(ex.dtv).epsilon(1e-12));
            CHECK(ch.ttv == doctest::Approx(ex.ttv).epsilon(1e-12));
            CHECK(ch.utv == doctest::Approx(ex.utv).epsilon(1e-12));
            CHECK(ch.dtv == doctest::Approx(ex.dtv).epsilon(1e-12));
        }
    }
    for (std::uint64_t k = 0; k < 60; ++k) {
        const auto p = testing::random_path(25, k, 2, 400);
        for (double c : {0.02, 0.2, 0.6}) {
            const auto sweep = truncated_variations(p, TruncationLevel(c));
            const auto ch = brute_force_variations(p, TruncationLevel(c));
            CHECK(sweep.ttv == doctest::Approx(ch.ttv).epsilon(1e-9));
            CHECK(sweep.utv == doctest::Approx(ch.utv).epsilon(1e-9));
            CHECK(sweep.dtv == doctest::Approx(ch.dtv).epsilon(1e-9));
        }
    }
}

TEST_CASE("jordan identity and monotonicity in c") {
    const double levels[] = {0.0, 0.05, 0.1, 0.25, 0.5, 1.0};
    for (std::uint64_t k = 0; k < 80; ++k) {
        const auto p = testing::random_path(26, k, 2, 150);
        VariationTriple prev;
        bool have_prev = false;
        for (double c : levels) {
            const auto t = truncated_variations(p, TruncationLevel(c));
            CHECK(std::abs(t.ttv - t.utv - t.dtv) <= 1e-9);
            CHECK(t.utv >= 0.0);
            CHECK(t.dtv >= 0.0);
            if (have_prev) {
                CHECK(t.ttv <= prev.ttv + 1e-12);
                CHECK(t.utv <= prev.utv + 1e-12);
                CHECK(t.dtv <= prev.dtv + 1e-12);
            }
            prev = t;
            have_prev = true;
        }
    }
}

TEST_CASE("superadditivity over interval splits") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        const auto p = testing::random_path(27, k, 3, 120);
        const auto v = p.values();
        for (double c : {0.1, 0.4}) {
            const auto whole = truncated_variations(p, TruncationLevel(c));
            for (std::size_t split = 1; split + 1 < p.size(); split += 7) {
                const DiscretePath left(std::vector<double>(v.begin(), v.begin() + split + 1));
                const DiscretePath right(std::vector<double>(v.begin() + split, v.end()));
                const auto a = truncated_variations(left, TruncationLevel(c));
                const auto b = truncated_variations(right, TruncationLevel(c));
                CHECK(whole.utv + 1e-9 >= a.utv + b.utv);
                CHECK(whole.dtv + 1e-9 >= a.dtv + b.dtv);
                CHECK(whole.ttv + 1e-9 >= a.ttv + b.ttv);
            }
        }
    }
}

TEST_CASE("reflection duality") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        const auto p = testing::random_path(28, k, 2, 100);
        std::vector<double> neg(p.values().begin(), p.values().end());
        for (double& x : neg) x = -x;
        const DiscretePath q(std::move(neg));
        for (double c : {0.05, 0.3}) {
            const auto tp = truncated_variations(p, TruncationLevel(c));
            const auto tq = truncated_variations(q, TruncationLevel(c));
            CHECK(tq.utv == doctest::Approx(tp.dtv).epsilon(1e-12));
            CHECK(tq.dtv == doctest::Approx(tp.utv).epsilon(1e-12));
            CHECK(tq.ttv == doctest::Approx(tp.ttv).epsilon(1e-12));
        }
    }
}

TEST_CASE("optimal approximation of the worked path") {
    const auto pc = optimal_approximation(kWorked, TruncationLevel(0.5));
    REQUIRE(pc.size() == 4);
    CHECK(pc[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(pc[1] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(pc[2] == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(pc[3] == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(uniform_distance(kWorked, pc) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(consecutive_variations(pc).ttv == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("optimal approximation: flat and down-first cases") {
    const auto flat = optimal_approximation(from_samples({0.0, 0.3, 0.1}), TruncationLevel(0.8));
    CHECK(flat[0] == flat[1]);
    CHECK(flat[1] == flat[2]);
    CHECK(consecutive_variations(flat).ttv == 0.0);
    CHECK(uniform_distance(flat, from_samples({0.0, 0.3, 0.1})) <= 0.4);

    // mirror construction: p^c of the mirror path reflects p^c of its negation
    const auto down = optimal_approximation(kMirror, TruncationLevel(0.5));
    std::vector<double> neg(kMirror.values().begin(), kMirror.values().end());
    for (double& x : neg) x = -x;
    const auto up = optimal_approximation(DiscretePath(std::move(neg)), TruncationLevel(0.5));
    for (std::size_t i = 0; i < down.size(); ++i) {
        CHECK(down[i] == doctest::Approx(-up[i]).epsilon(1e-12));
    }
    CHECK(consecutive_variations(down).ttv == doctest::Approx(2.1).epsilon(1e-12));
}

TEST_CASE("optimal approximation properties on random paths") {
    PathStream noise(97, 0);
    for (std::uint64_t k = 0; k < 80; ++k) {
        const auto p = testing::random_path(29, k, 2, 150);
        for (double c : {0.05, 0.25, 0.7}) {
            const auto t = truncated_variations(p, TruncationLevel(c));
            const auto pc = optimal_approximation(p, TruncationLevel(c));
            REQUIRE(pc.size() == p.size());
            CHECK(uniform_distance(p, pc) <= c / 2.0 + 1e-12);
            const auto tv = consecutive_variations(pc);
            CHECK(tv.ttv == doctest::Approx(t.ttv).epsilon(1e-9));
            CHECK(tv.utv == doctest::Approx(t.utv).epsilon(1e-9));
            CHECK(tv.dtv == doctest::Approx(t.dtv).epsilon(1e-9));

            // no c/2-perturbation does better than the attained infimum
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<double> g(p.values().begin(), p.values().end());
                for (double& x : g) x += (noise.next_uniform() - 0.5) * c;
                CHECK(consecutive_variations(DiscretePath(std::move(g))).ttv >=
                      t.ttv - 1e-9);
            }
        }
    }
}

TEST_CASE("approximation keeps the time stamps") {
    const auto timed = from_samples({0.0, 1.0, 0.2, 1.5},
                                    std::vector<double>{0.0, 0.5, 1.0, 2.0});
    const auto pc = optimal_approximation(timed, TruncationLevel(0.5));
    REQUIRE(pc.times().has_value());
    CHECK((*pc.times())[3] == 2.0);
}
