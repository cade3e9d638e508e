#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "obc/bdpc.hpp"

using Catch::Matchers::WithinAbs;
using obc::DirtyPaperChannel;
using obc::FadingModel;
using obc::PowerAllocation;
using obc::SystemSpec;

namespace {

DirtyPaperChannel bench_channel() {
    return {1.0, 0.6, 0.25, 0.05, FadingModel::exponential(1.0)};
}

SystemSpec case_study() {
    return SystemSpec(100.0, {{FadingModel::exponential(10.0), 0.01},
                              {FadingModel::exponential(1.0), 0.01}});
}

}  // namespace

TEST_CASE("informed and outage-optimal precoders coincide at the crossover gain",
          "[bdpc]") {
    const auto ch = bench_channel();
    const double rate = 0.4;
    const double a = obc::a_star(ch, rate);
    REQUIRE_THAT(a, WithinAbs(0.0280387754460611394386, 1e-12));
    REQUIRE_THAT(obc::optimal_alpha(rate), WithinAbs(0.329679953964360699256, 1e-14));
    REQUIRE_THAT(obc::alpha_dpc(ch, a), WithinAbs(obc::optimal_alpha(rate), 1e-12));
    REQUIRE_THAT(obc::min_outage_prob(ch, rate), WithinAbs(0.0276493372604198614543, 1e-13));
}

TEST_CASE("informed precoder removes the known interference entirely", "[bdpc]") {
    const auto ch = bench_channel();
    for (double a : {0.01, 0.1, 0.5, 2.0, 25.0}) {
        const double clean =
            std::log1p(ch.input_power * a / (ch.unknown_power * a + ch.noise_power));
        REQUIRE_THAT(obc::conditional_rate(ch, obc::alpha_dpc(ch, a), a),
                     WithinAbs(clean, 1e-12));
    }
}

TEST_CASE("outage threshold inverts the conditional rate", "[bdpc]") {
    const auto ch = bench_channel();
    for (double alpha : {0.1, 0.33, 0.6, 0.9}) {
        for (double rate : {0.05, 0.3, 0.7}) {
            const double t = obc::outage_threshold(ch, alpha, rate);
            if (std::isinf(t) || t == 0.0) continue;
            REQUIRE_THAT(obc::conditional_rate(ch, alpha, t), WithinAbs(rate, 1e-9));
            // Just below the threshold the rate falls short.
            REQUIRE(obc::conditional_rate(ch, alpha, t * 0.999) < rate);
        }
    }
}

TEST_CASE("conditional rate grows with the gain", "[bdpc]") {
    const auto ch = bench_channel();
    for (double alpha : {0.0, 0.33, 1.0}) {
        double prev = -std::numeric_limits<double>::infinity();
        for (double a = 0.0; a <= 5.0; a += 0.05) {
            const double r = obc::conditional_rate(ch, alpha, a);
            REQUIRE(r >= prev);
            prev = r;
        }
    }
}

TEST_CASE("no inflation factor beats the outage-optimal one", "[bdpc]") {
    const auto ch = bench_channel();
    for (double rate : {0.1, 0.4, 0.8}) {
        const double best = obc::min_outage_prob(ch, rate);
        REQUIRE_THAT(obc::outage_prob(ch, obc::optimal_alpha(rate), rate),
                     WithinAbs(best, 1e-13));
        for (int i = 0; i <= 100; ++i) {
            const double alpha = static_cast<double>(i) / 100.0;
            REQUIRE(obc::outage_prob(ch, alpha, rate) >= best - 1e-13);
        }
    }
}

TEST_CASE("rates beyond the interference-limited ceiling are hopeless", "[bdpc]") {
    const auto ch = bench_channel();
    // ln(1 + P/Q2) caps the rate as the gain grows without bound.
    const double ceiling = std::log1p(ch.input_power / ch.unknown_power);
    const double rate = ceiling + 0.1;
    REQUIRE(obc::min_outage_prob(ch, rate) == 1.0);
    REQUIRE(obc::outage_prob(ch, obc::optimal_alpha(rate), rate) == 1.0);
    REQUIRE(std::isinf(obc::outage_threshold(ch, obc::optimal_alpha(rate), rate)));
    REQUIRE_THROWS_AS(obc::a_star(ch, rate), std::domain_error);

    // Without unknown interference every rate is reachable.
    DirtyPaperChannel clean = ch;
    clean.unknown_power = 0.0;
    REQUIRE(std::isfinite(obc::a_star(clean, 5.0)));
}

TEST_CASE("crossover identity holds across random channels", "[bdpc]") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const DirtyPaperChannel ch{0.5 + 49.5 * u(eng), 0.01 + 20.0 * u(eng),
                                   0.001 + 5.0 * u(eng), 0.05 + 2.0 * u(eng),
                                   FadingModel::exponential(1.0)};
        const double cap = std::log1p(ch.input_power / ch.unknown_power);
        const double rate = std::max(0.02, 0.9 * cap * u(eng));
        const double a = obc::a_star(ch, rate);
        REQUIRE_THAT(obc::alpha_dpc(ch, a), WithinAbs(obc::optimal_alpha(rate), 1e-9));
    }
}

TEST_CASE("layered outage matches the frozen case study", "[bdpc]") {
    const auto spec = case_study();
    const PowerAllocation alloc(Eigen::Vector2d(0.5, 0.5));

    REQUIRE_THAT(obc::decoding_gain_threshold(spec, alloc, 0, 1.79),
                 WithinAbs(0.0997890493276622665792, 1e-13));
    REQUIRE_THAT(obc::bdpc_user_outage(spec, alloc, 0, 1.79),
                 WithinAbs(0.00992928086273566306212, 1e-14));
    REQUIRE_THAT(obc::decoding_gain_threshold(spec, alloc, 1, 0.28),
                 WithinAbs(0.00954776316721236163857, 1e-14));
    REQUIRE_THAT(obc::bdpc_user_outage(spec, alloc, 1, 0.28),
                 WithinAbs(0.00950232799287019162690, 1e-14));

    // At the quantile-gain rate the outage meets the tolerance exactly.
    const double max0 = obc::bdpc_max_rate(spec, alloc, 0, 0.01);
    const double max1 = obc::bdpc_max_rate(spec, alloc, 1, 0.01);
    REQUIRE_THAT(max0, WithinAbs(1.79594535064818183530, 1e-12));
    REQUIRE_THAT(max1, WithinAbs(0.288519247562314570300, 1e-12));
    REQUIRE_THAT(obc::bdpc_user_outage(spec, alloc, 0, max0 * (1.0 - 1e-9)),
                 WithinAbs(0.01, 1e-7));

    // A rate the layer cannot carry at any gain.
    REQUIRE(std::isinf(obc::decoding_gain_threshold(spec, alloc, 1, 5.0)));
    REQUIRE(obc::bdpc_user_outage(spec, alloc, 1, 5.0) == 1.0);
}

TEST_CASE("channel and argument validation", "[bdpc]") {
    const auto ch = bench_channel();
    REQUIRE_THROWS_AS(obc::conditional_rate(ch, 1.2, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(obc::conditional_rate(ch, 0.5, -1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(obc::optimal_alpha(-0.1), std::invalid_argument);
    DirtyPaperChannel bad = ch;
    bad.input_power = 0.0;
    REQUIRE_THROWS_AS(obc::min_outage_prob(bad, 0.1), std::invalid_argument);

    const auto spec = case_study();
    const PowerAllocation alloc(Eigen::Vector2d(0.5, 0.5));
    REQUIRE_THROWS_AS(obc::bdpc_user_outage(spec, alloc, 2, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(obc::bdpc_max_rate(spec, alloc, -1, 0.01), std::invalid_argument);
}
