#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "possver/errors.hpp"
#include "possver/scorecard.hpp"

using namespace possver;
using testutil::forecast;

namespace {
bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
}  // namespace

TEST_CASE("scorecard reproduces the three worked scenarios") {
    const auto a = score_pair(testutil::scenario_a());
    CHECK(a.alpha_star == 1.00);
    CHECK(near(a.eta, 0.222, 1e-3));
    CHECK(near(a.delta, 0.778, 1e-3));
    CHECK(a.ignorance == doctest::Approx(0.10));
    CHECK(near(a.nc_star, 0.833, 1e-3));

    const auto b = score_pair(testutil::scenario_b());
    CHECK(b.alpha_star == 1.00);
    CHECK(near(b.eta, 0.439, 1e-3));
    CHECK(near(b.delta, 0.561, 1e-3));
    CHECK(b.ignorance == doctest::Approx(0.45));
    CHECK(near(b.nc_star, 0.273, 1e-3));

    const auto c = score_pair(testutil::scenario_c());
    CHECK(c.alpha_star == 0.0);
    CHECK(near(c.eta, 0.196, 1e-3));
    CHECK(near(c.delta, -0.196, 1e-3));
    CHECK(c.ignorance == doctest::Approx(0.15));
    CHECK(c.nc_star == 0.0);
}

TEST_CASE("joint skill") {
    const auto a = score_pair(testutil::scenario_a());
    CHECK(near(joint_skill(a), 0.778, 1e-3));

    auto uniform = score_pair({forecast({0.5, 0.5, 0.5, 0.5, 0.5, 0.5}), 2, "", ""});
    CHECK(uniform.eta == doctest::Approx(1.0));
    CHECK(joint_skill(uniform) == doctest::Approx(0.0));

    const auto c = score_pair(testutil::scenario_c());
    CHECK(joint_skill(c) == 0.0);
}

TEST_CASE("row invariants hold on random pairs") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto pair = testutil::random_pair(rng);
        auto row = score_pair(pair);
        CHECK(row.delta == row.alpha_star - row.eta);
        CHECK(row.joint_skill == doctest::Approx(row.alpha_star * (1.0 - row.eta)).epsilon(1e-12));
        CHECK(row.eta >= 1.0 / 6 - 1e-12);
        CHECK(row.eta <= 1.0 + 1e-12);
        CHECK(std::fabs(row.delta) <= 1.0 - 1.0 / 6 + 1e-12);
        if (row.nc_star > 0.0) CHECK(row.alpha_star == 1.0);
    }
}

TEST_CASE("shape metrics are invariant under rescaling") {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        auto pair = testutil::random_pair(rng);
        const double lambda = rng.uniform(0.05, 1.0);
        std::vector<double> scaled = pair.forecast.pi();
        for (double& v : scaled) v *= lambda;
        VerificationPair scaled_pair{validate(scaled, pair.forecast.universe()), pair.observed,
                                     "", ""};

        const auto r0 = score_pair(pair);
        const auto r1 = score_pair(scaled_pair);
        CHECK(r1.alpha_star == doctest::Approx(r0.alpha_star).epsilon(1e-12));
        CHECK(r1.eta == doctest::Approx(r0.eta).epsilon(1e-12));
        CHECK(r1.delta == doctest::Approx(r0.delta).epsilon(1e-12));
        CHECK(r1.nc_star == doctest::Approx(r0.nc_star).epsilon(1e-12));
        CHECK(r1.ignorance ==
              doctest::Approx(1.0 - lambda * pair.forecast.commitment()).epsilon(1e-12));
    }
}

TEST_CASE("nc_star structure: unique peak vs tie") {
    // observed at the unique peak: nc_star = 1 - runner-up / m
    auto f = testutil::example1();
    auto row = score_pair({f, 4, "", ""});
    CHECK(row.nc_star == doctest::Approx(1.0 - 0.20 / 0.75));

    // observed ties the peak: nc_star = 0, no special-casing
    auto tie = score_pair({testutil::example2(), 1, "", ""});
    CHECK(tie.alpha_star == 1.0);
    CHECK(tie.nc_star == 0.0);

    // observed off-peak: structurally zero
    auto off = score_pair({f, 3, "", ""});
    CHECK(off.nc_star == 0.0);
}

TEST_CASE("flooring experiment: helps the miss, taxes the hit") {
    auto floored = [](const VerificationPair& pair, double eps) {
        std::vector<double> pi = pair.forecast.pi();
        for (double& v : pi) v = std::max(v, eps);
        return VerificationPair{validate(pi, pair.forecast.universe()), pair.observed, "", ""};
    };
    const double dc = score_pair(floored(testutil::scenario_c(), 0.01)).delta -
                      score_pair(testutil::scenario_c()).delta;
    const double da = score_pair(floored(testutil::scenario_a(), 0.01)).delta -
                      score_pair(testutil::scenario_a()).delta;
    CHECK(near(dc, 0.006, 1e-3));
    CHECK(near(da, -0.004, 1e-3));
}

TEST_CASE("aggregate means") {
    const std::vector<VerificationPair> pairs{testutil::scenario_a(), testutil::scenario_b()};
    std::vector<ScorecardRow> rows;
    std::vector<std::size_t> observed;
    for (const auto& p : pairs) {
        rows.push_back(score_pair(p));
        observed.push_back(p.observed);
    }

    const auto agg = aggregate(rows, observed);
    CHECK(agg.count == 2);
    CHECK(agg.overall.alpha_star == doctest::Approx(1.0));
    CHECK(agg.overall.delta == doctest::Approx(0.669192).epsilon(1e-4));
    CHECK(agg.category_counts[4] == 1);
    CHECK(agg.category_counts[3] == 1);
    CHECK(agg.category_means[4].delta == doctest::Approx(rows[0].delta));

    // mean of one equals the row
    const auto single = aggregate({rows.data(), 1}, {observed.data(), 1});
    CHECK(single.overall.eta == rows[0].eta);
    CHECK(single.overall.nc_star == rows[0].nc_star);

    CHECK_THROWS_AS(aggregate({}, {}), EmptySample);
}

TEST_CASE("stratified counts sum to the total") {
    Rng rng(19);
    std::vector<ScorecardRow> rows;
    std::vector<std::size_t> observed;
    for (int i = 0; i < 257; ++i) {
        auto pair = testutil::random_pair(rng);
        rows.push_back(score_pair(pair));
        observed.push_back(pair.observed);
    }
    const auto agg = aggregate(rows, observed);
    std::size_t total = 0;
    for (std::size_t c : agg.category_counts) total += c;
    CHECK(total == agg.count);
}
