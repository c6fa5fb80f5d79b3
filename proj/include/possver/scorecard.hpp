#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "possver/core.hpp"

namespace possver {

struct VerificationPair {
    PossibilityForecast forecast;
    std::size_t observed;  // index into the universe
    std::string id;
    std::string model;
};

// Per-pair five-number scorecard plus the derived joint skill.
// alpha_star, eta, delta, nc_star evaluate the normalised shape; ignorance is
// the only raw-distribution quantity.
struct ScorecardRow {
    double alpha_star;   // normalised possibility of the observed category
    double eta;          // mean of the normalised shape, in [1/K, 1]
    double delta;        // alpha_star - eta
    double ignorance;    // 1 - m
    double nc_star;      // dominance margin; 0 unless observed is the unique peak
    double commitment;   // m
    std::size_t peak;    // argmax with severity tie-break
    double joint_skill;  // alpha_star * (1 - eta)
};

struct ScorecardMeans {
    double alpha_star = 0.0;
    double eta = 0.0;
    double delta = 0.0;
    double ignorance = 0.0;
    double nc_star = 0.0;
    double commitment = 0.0;
    double joint_skill = 0.0;
};

struct ScorecardAggregate {
    std::size_t count = 0;
    ScorecardMeans overall;
    // Indexed by observed category; count 0 leaves the means zeroed.
    std::vector<std::size_t> category_counts;
    std::vector<ScorecardMeans> category_means;
};

ScorecardRow score_pair(const VerificationPair& pair);

double joint_skill(const ScorecardRow& row);

// Unweighted arithmetic means, overall and stratified by observed category.
// Throws EmptySample.
ScorecardAggregate aggregate(std::span<const ScorecardRow> rows,
                             std::span<const std::size_t> observed);

}  // namespace possver
