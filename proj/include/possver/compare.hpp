#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "possver/scorecard.hpp"

namespace possver {

enum class Orientation { HigherBetter, LowerBetter, ContextDependent };

struct MetricDelta {
    std::string facet;   // possibilistic | probabilistic | categorical
    std::string metric;
    std::optional<double> baseline;
    std::optional<double> candidate;
    std::optional<double> delta;  // candidate - baseline
    Orientation orientation;
    bool significant = false;
    std::string magnitude;  // small | medium | large; empty when delta undefined
};

struct CompareSettings {
    std::size_t resamples = 1000;
    double confidence = 0.95;
    std::uint64_t seed = 0;
    std::size_t threshold = 1;  // severity threshold for the categorical facet
    double epsilon = 0.01;
    bool paired = true;
};

struct ComparisonReport {
    std::vector<MetricDelta> rows;
    std::size_t baseline_n = 0;
    std::size_t candidate_n = 0;
    CompareSettings settings;
};

// Facet metrics for both samples with paired-bootstrap significance flags:
// resample pair indices with replacement, flag when the two-sided percentile
// interval of the metric delta excludes zero.
// Throws EmptySample, UniverseMismatch, UnpairedSamples, MissingClimatology.
ComparisonReport compare(std::span<const VerificationPair> baseline,
                         std::span<const VerificationPair> candidate,
                         const CompareSettings& settings = {});

// Fixed metric -> orientation map; every metric the report carries.
const std::vector<std::pair<std::string, Orientation>>& orientation_registry();

// Throws ValidationError on unknown metric names.
Orientation orientation_of(const std::string& metric);

std::string to_string(Orientation o);

}  // namespace possver
