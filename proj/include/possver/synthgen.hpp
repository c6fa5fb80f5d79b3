#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "possver/scorecard.hpp"

namespace possver {

// Parameters of the synthetic possibilistic reforecast. Endpoint pairs
// (first = least severe category, last = most severe) are interpolated
// linearly in category index. Defaults reproduce the 800-day SPC-like sample.
struct SynthConfig {
    std::size_t n = 800;
    std::vector<double> climatology = {0.60, 0.18, 0.12, 0.06, 0.032, 0.008};

    double p_correct_first = 0.82;  // chance the peak lands on the observed category
    double p_correct_last = 0.18;
    double shift_one_prob = 0.4;  // each of the +/-1 near-miss shifts
    double shift_two_prob = 0.1;  // each of the +/-2 shifts

    double sigma_mean_first = 2.6;  // exponential decay rate around the peak
    double sigma_mean_last = 0.7;
    double sigma_spread = 0.3;
    double sigma_floor = 0.1;

    double ignorance_mean_first = 0.06;
    double ignorance_mean_last = 0.52;
    double ignorance_spread = 0.10;
    double ignorance_max = 0.95;

    double noise_amplitude = 0.03;
    std::uint64_t seed = 0;
};

struct SynthRecord {
    VerificationPair pair;
    double sigma;
    double drawn_ignorance;  // h; peak possibility equals 1 - h
    std::size_t peak;
};

struct SynthSample {
    UniversePtr universe;
    std::vector<SynthRecord> records;
};

struct SampleStats {
    std::vector<std::size_t> observed_counts;
    std::vector<double> mean_ignorance_by_observed;  // zero where the count is zero
    double peak_accuracy;
    std::size_t n;
};

// Deterministic given the config: record i consumes only the substream
// derived from (seed, i), so generation order never alters the output.
// Throws InvalidConfig.
SynthSample generate(const SynthConfig& config, const UniversePtr& universe);

// Throws EmptySample.
SampleStats sample_stats(const SynthSample& sample);

}  // namespace possver
