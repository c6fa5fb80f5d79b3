#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "possver/scorecard.hpp"

namespace possver {

struct DiagramPoint {
    double x;
    double y;
    double ignorance;
    std::size_t observed;
    std::string id;
};

struct HexBinCell {
    double x;  // cell center
    double y;
    std::size_t count;
    // Mean ignorance of binned pairs (performance diagram); unset on the
    // count-only commitment diagram.
    std::optional<double> mean_ignorance;
};

struct CategoryMean {
    std::size_t category;
    double x;
    double y;
    std::size_t count;
};

struct DiagramData {
    std::vector<DiagramPoint> points;
    std::vector<HexBinCell> hexbins;
    std::vector<CategoryMean> category_means;
};

// Pointy-top hexagonal lattice; gridsize = number of columns across the
// diagram's x range. Cell geometry is an implementation detail — the
// contract is that bin counts sum to the sample size.
struct HexBinConfig {
    std::size_t gridsize = 18;
};

struct ReliabilityPoint {
    double tau;
    std::optional<double> hit_rate;  // unset when no pairs survive the filter
    std::size_t sample_count;
};

struct ReliabilityCurve {
    std::vector<ReliabilityPoint> points;
    double baseline_random;    // 1/K
    double baseline_accuracy;  // unconditional peak hit rate
};

// Shape-quality diagram: x = 1 - eta (specificity), y = alpha_star,
// colour = ignorance. Throws EmptySample.
DiagramData performance_points(std::span<const ScorecardRow> rows,
                               std::span<const VerificationPair> pairs,
                               const HexBinConfig& config = {});

// Commitment diagram: x = m, y = delta; count-coloured bins.
DiagramData commitment_points(std::span<const ScorecardRow> rows,
                              std::span<const VerificationPair> pairs,
                              const HexBinConfig& config = {});

// Conditional hit rate of pairs whose peak-category conditional necessity
// N_c(peak) >= tau, per tau in the ascending grid. Throws EmptySample.
ReliabilityCurve reliability_curve(std::span<const VerificationPair> pairs,
                                   std::span<const double> tau_grid);

// 0.00 .. 0.95 in the given step.
std::vector<double> default_tau_grid(double step = 0.05);

}  // namespace possver
