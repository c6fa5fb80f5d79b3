#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "possver/compare.hpp"
#include "possver/errors.hpp"
#include "possver/synthgen.hpp"

using namespace possver;

namespace {

std::vector<VerificationPair> synth_pairs(std::uint64_t seed, std::size_t n) {
    SynthConfig config;
    config.n = n;
    config.seed = seed;
    const auto sample = generate(config, testutil::spc());
    std::vector<VerificationPair> pairs;
    for (const auto& rec : sample.records) pairs.push_back(rec.pair);
    return pairs;
}

}  // namespace

TEST_CASE("orientation registry") {
    CHECK(orientation_of("far") == Orientation::LowerBetter);
    CHECK(orientation_of("ignorance") == Orientation::ContextDependent);
    CHECK(orientation_of("delta") == Orientation::HigherBetter);
    CHECK(orientation_of("mean_surprise") == Orientation::LowerBetter);
    CHECK_THROWS_AS(orientation_of("rmse"), ValidationError);
    CHECK(orientation_registry().size() == 14);
}

TEST_CASE("self-comparison yields zero deltas and no flags") {
    const auto pairs = synth_pairs(5, 120);
    CompareSettings settings;
    settings.resamples = 200;
    const auto report = compare(pairs, pairs, settings);

    CHECK(report.baseline_n == 120);
    CHECK(report.candidate_n == 120);
    std::set<std::string> seen;
    for (const auto& row : report.rows) {
        CHECK(seen.insert(row.metric).second);  // each metric exactly once
        if (row.delta) CHECK(*row.delta == 0.0);
        CHECK_FALSE(row.significant);
    }
    // every registered metric appears
    for (const auto& [name, orientation] : orientation_registry()) CHECK(seen.count(name) == 1);
}

TEST_CASE("a constant +0.2 alpha-star improvement is flagged significant") {
    // peak fixed at NONE, truth raised from 0.5 to 0.7 of the peak: every
    // pair's alpha* moves by exactly +0.2, so every bootstrap resample's
    // mean delta is exactly +0.2 and the interval cannot cover zero.
    std::vector<VerificationPair> baseline, candidate;
    Rng rng(55);
    for (int i = 0; i < 40; ++i) {
        const std::size_t obs = 1 + rng.below(5);
        std::vector<double> lo(6, 0.0), hi(6, 0.0);
        lo[0] = hi[0] = 1.0;
        lo[obs] = 0.5;
        hi[obs] = 0.7;
        baseline.push_back({validate(lo, testutil::spc()), obs, "", ""});
        candidate.push_back({validate(hi, testutil::spc()), obs, "", ""});
    }

    CompareSettings settings;
    settings.resamples = 250;
    const auto report = compare(baseline, candidate, settings);
    for (const auto& row : report.rows) {
        if (row.metric == "alpha_star") {
            CHECK(*row.delta == doctest::Approx(0.2).epsilon(1e-12));
            CHECK(row.significant);
            CHECK(row.magnitude == "large");
        }
        if (row.metric == "delta") {
            // eta rises by 0.2/K, so delta improves by 0.2 * (1 - 1/K)
            CHECK(*row.delta == doctest::Approx(0.2 * (1.0 - 1.0 / 6)).epsilon(1e-12));
            CHECK(row.significant);
        }
        if (row.metric == "ignorance") CHECK(*row.delta == 0.0);  // both normal
    }
}

TEST_CASE("a uniform alpha-star improvement is flagged significant") {
    // baseline: truth never at the peak; candidate: same shapes with the
    // observed category raised to a clear unique peak.
    std::vector<VerificationPair> baseline, candidate;
    Rng rng(71);
    for (int i = 0; i < 60; ++i) {
        std::vector<double> pi{0.9, 0.4, 0.3, 0.2, 0.1, 0.05};
        std::rotate(pi.begin(), pi.begin() + rng.below(3), pi.end());
        const std::size_t obs = 1 + rng.below(4);
        baseline.push_back({validate(pi, testutil::spc()), obs, "", "base"});
        std::vector<double> better = pi;
        better[obs] = 1.0;
        candidate.push_back({validate(better, testutil::spc()), obs, "", "cand"});
    }

    CompareSettings settings;
    settings.resamples = 300;
    settings.seed = 9;
    const auto report = compare(baseline, candidate, settings);

    for (const auto& row : report.rows) {
        if (row.metric == "alpha_star" || row.metric == "delta") {
            REQUIRE(row.delta.has_value());
            CHECK(*row.delta > 0.1);
            CHECK(row.significant);
            CHECK(row.orientation == Orientation::HigherBetter);
        }
        if (row.metric == "ignorance") {
            // commitment changed: context-dependent, reported but not judged
            CHECK(row.orientation == Orientation::ContextDependent);
        }
    }
}

TEST_CASE("bootstrap is deterministic in the seed") {
    const auto baseline = synth_pairs(11, 80);
    const auto candidate = synth_pairs(12, 80);

    // unpaired: the two samples observe different outcomes
    CompareSettings settings;
    settings.resamples = 150;
    settings.seed = 4;
    settings.paired = false;
    const auto r1 = compare(baseline, candidate, settings);
    const auto r2 = compare(baseline, candidate, settings);
    REQUIRE(r1.rows.size() == r2.rows.size());
    for (std::size_t i = 0; i < r1.rows.size(); ++i) {
        CHECK(r1.rows[i].significant == r2.rows[i].significant);
        if (r1.rows[i].delta) CHECK(*r1.rows[i].delta == *r2.rows[i].delta);
        CHECK(r1.rows[i].magnitude == r2.rows[i].magnitude);
    }
}

TEST_CASE("facets and magnitude buckets") {
    const auto pairs = synth_pairs(21, 100);
    CompareSettings settings;
    settings.resamples = 100;
    const auto report = compare(pairs, pairs, settings);

    std::set<std::string> facets;
    for (const auto& row : report.rows) facets.insert(row.facet);
    CHECK(facets == std::set<std::string>{"possibilistic", "probabilistic", "categorical"});
    for (const auto& row : report.rows)
        if (row.delta) CHECK(row.magnitude == "small");  // zero delta
}

TEST_CASE("input validation") {
    const auto pairs = synth_pairs(31, 40);
    CHECK_THROWS_AS(compare({}, pairs, {}), EmptySample);
    CHECK_THROWS_AS(compare(pairs, {}, {}), EmptySample);

    auto shorter = pairs;
    shorter.pop_back();
    CHECK_THROWS_AS(compare(pairs, shorter, {}), UnpairedSamples);

    auto reobserved = pairs;
    reobserved[0].observed = (reobserved[0].observed + 1) % 6;
    CHECK_THROWS_AS(compare(pairs, reobserved, {}), UnpairedSamples);

    // unpaired mode accepts differing observation sets
    CompareSettings unpaired;
    unpaired.paired = false;
    unpaired.resamples = 50;
    CHECK_NOTHROW(compare(pairs, reobserved, unpaired));

    auto other = std::make_shared<Universe>(std::vector<std::string>{"a", "b"},
                                            std::vector<double>{0.5, 0.5});
    std::vector<VerificationPair> alien{{validate({1.0, 0.5}, other), 0, "", ""}};
    CHECK_THROWS_AS(compare(pairs, alien, {}), UniverseMismatch);
}
