#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kemeny/hitting.hpp"
#include "kemeny/mcsim.hpp"
#include "test_support.hpp"

using namespace kemeny;
using namespace kemeny::test;

TEST_CASE("dp oracle trivial cases") {
    const auto swap = dp_hitting_oracle(swap_chain(), 1, 5);
    CHECK(swap[1][0] == Rational(1));  // u = v: mass 1 at m = 0
    CHECK(swap[0][1] == Rational(1));  // one deterministic step
    for (std::size_t m = 2; m <= 5; ++m) CHECK(swap[0][m].is_zero());
}

TEST_CASE("dp oracle cumulative mass is nondecreasing and <= 1") {
    SplitMix64 rng(1);
    for (int i = 0; i < 6; ++i) {
        const Chain c = random_chain(rng, 2 + rng.next() % 5);
        for (std::size_t v = 0; v < c.size(); ++v) {
            const auto dp = dp_hitting_oracle(c, v, 30);
            for (std::size_t u = 0; u < c.size(); ++u) {
                Rational cum(0);
                for (std::size_t m = 0; m <= 30; ++m) {
                    CHECK(dp[u][m] >= Rational(0));
                    cum += dp[u][m];
                    CHECK(cum <= Rational(1));
                }
            }
        }
    }
}

TEST_CASE("dp oracle equals the recursion-based law everywhere") {
    SplitMix64 rng(2);
    std::vector<Chain> chains{sec3_chain(), swap_chain(), lazy_chain()};
    for (int i = 0; i < 4; ++i) chains.push_back(random_chain(rng, 2 + rng.next() % 5));
    for (const Chain& c : chains)
        for (std::size_t v = 0; v < c.size(); ++v) {
            const auto dp = dp_hitting_oracle(c, v, 50);
            for (std::size_t u = 0; u < c.size(); ++u)
                CHECK(hitting_distribution(c, u, v, 50) == dp[u]);
        }
}

TEST_CASE("simulation is deterministic per seed") {
    const Chain c = sec3_chain();
    const SimConfig cfg{.seed = 12345, .n_paths = 2000, .max_steps = 100000};
    const SimSummary a = simulate_hitting(c, 0, 1, 1, cfg);
    const SimSummary b = simulate_hitting(c, 0, 1, 1, cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.variance == b.variance);
    CHECK(a.histogram == b.histogram);

    const SimSummary other = simulate_hitting(c, 0, 1, 1,
                                              {.seed = 54321, .n_paths = 2000, .max_steps = 100000});
    CHECK(a.histogram != other.histogram);
}

TEST_CASE("swap chain hits deterministically") {
    const SimSummary s = simulate_hitting(swap_chain(), 0, 1, 0, {.seed = 7, .n_paths = 500});
    CHECK(s.mean == 1.0);
    CHECK(s.variance == 0.0);
    CHECK(s.histogram.at(1) == 500);
}

TEST_CASE("empirical mean within 3 SE of the exact value") {
    const Chain c = sec3_chain();
    const SimConfig cfg{.seed = 99, .n_paths = 20000, .max_steps = 100000};
    const SimSummary s = simulate_hitting(c, 0, std::nullopt, 1, cfg);  // X ~ rho
    const double exact = Rational(727, 172).to_double();
    CHECK(std::abs(s.mean - exact) <= 3.0 * s.std_error);
}

TEST_CASE("shifted simulation matches the exact shifted mean") {
    const Chain c = sec3_chain();
    const SimConfig cfg{.seed = 4, .n_paths = 20000, .max_steps = 100000};
    const SimSummary s = simulate_hitting(c, 0, 2, 3, cfg);
    const double exact = mean_hitting_shifted(c, 0, 2, 3).to_double();
    CHECK(std::abs(s.mean - exact) <= 3.0 * s.std_error);
}

TEST_CASE("standard error shrinks when paths triple") {
    const Chain c = lazy_chain();
    const SimSummary small = simulate_hitting(c, 0, 1, 1, {.seed = 11, .n_paths = 3000});
    const SimSummary big = simulate_hitting(c, 0, 1, 1, {.seed = 11, .n_paths = 9000});
    CHECK(big.std_error * std::sqrt(2.0) <= small.std_error * 1.10);
}

TEST_CASE("geometric stop: swap chain exact law and empirical agreement") {
    const Chain c = swap_chain();
    const SimConfig cfg{.seed = 31, .n_paths = 20000};
    const auto sim = simulate_geometric_stop(c, 0, Rational(1, 2), cfg);
    const auto exact = geometric_stop_law(c, 0, Rational(1, 2));
    REQUIRE(exact == std::vector<Rational>{rat("2/3"), rat("1/3")});
    const double n = static_cast<double>(cfg.n_paths);
    for (std::size_t s = 0; s < 2; ++s) {
        const double p = exact[s].to_double();
        const double se = std::sqrt(p * (1.0 - p) / n);
        CHECK(std::abs(static_cast<double>(sim.counts[s]) / n - p) <= 3.0 * se);
    }
}

TEST_CASE("config validation and the step cap") {
    const Chain c = lazy_chain();
    CHECK_THROWS_AS(simulate_hitting(c, 0, 1, 0, {.seed = 1, .n_paths = 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_hitting(c, 0, 1, 0, {.seed = 1, .n_paths = 10, .max_steps = 1}),
                    std::invalid_argument);
    // a cap this small is a misconfiguration: some path will outrun it
    CHECK_THROWS_AS(simulate_hitting(c, 0, 1, 0, {.seed = 1, .n_paths = 5000, .max_steps = 2}),
                    StepCapExceeded);
}
