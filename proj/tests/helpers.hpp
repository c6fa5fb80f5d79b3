#pragma once

// Shared fixtures for the test suites: the SPC universe, the worked
// scenarios, and small generators for property-style checks.

#include <cstdint>
#include <vector>

#include "possver/core.hpp"
#include "possver/rng.hpp"
#include "possver/scorecard.hpp"
#include "possver/universe.hpp"

namespace testutil {

inline possver::UniversePtr spc() { return possver::spc_universe(); }

inline possver::PossibilityForecast forecast(std::vector<double> pi) {
    return possver::validate(std::move(pi), spc());
}

// Worked scenarios: sharp-correct MDT, hedged-correct ENH, sharp-wrong NONE.
inline possver::VerificationPair scenario_a() {
    return {forecast({0.00, 0.00, 0.05, 0.15, 0.90, 0.10}), 4, "A", ""};
}
inline possver::VerificationPair scenario_b() {
    return {forecast({0.10, 0.10, 0.40, 0.55, 0.30, 0.00}), 3, "B", ""};
}
inline possver::VerificationPair scenario_c() {
    return {forecast({0.85, 0.10, 0.05, 0.00, 0.00, 0.00}), 4, "C", ""};
}

inline possver::PossibilityForecast example1() {
    return forecast({0.05, 0.0, 0.1, 0.2, 0.75, 0.15});
}
inline possver::PossibilityForecast example2() {
    return forecast({0.30, 0.50, 0.50, 0.0, 0.0, 0.0});
}

// Random valid forecast over the SPC universe; occasionally sharp or flat.
inline possver::PossibilityForecast random_forecast(possver::Rng& rng) {
    std::vector<double> pi(6);
    double peak = 0.0;
    for (double& v : pi) {
        v = rng.uniform();
        if (rng.uniform() < 0.2) v = 0.0;
        peak = peak < v ? v : peak;
    }
    if (peak == 0.0) pi[rng.below(6)] = rng.uniform(0.05, 1.0);
    return forecast(std::move(pi));
}

inline possver::VerificationPair random_pair(possver::Rng& rng) {
    return {random_forecast(rng), static_cast<std::size_t>(rng.below(6)), "", ""};
}

}  // namespace testutil
