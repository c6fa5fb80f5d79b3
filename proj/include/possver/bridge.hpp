#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "possver/core.hpp"

namespace possver {

inline constexpr double kDefaultEpsilon = 0.01;

// (K+1)-entry probability vector; the last entry is the explicit ignorance
// outcome, which is never observed (closed world).
struct ProbabilityVector {
    std::vector<double> p;
    UniversePtr universe;

    std::size_t categories() const { return p.size() - 1; }
    double ignorance_mass() const { return p.back(); }
};

struct SurpriseReport {
    double bits;     // -log2(max(p(obs), epsilon))
    bool floored;    // true when the epsilon floor engaged
    double epsilon;
};

// Mean-surprise decomposition over a verification sample, in bits.
// mean_surprise is computed from the per-group adjusted vectors (observed
// zero-probability entries floored at epsilon, group renormalised when a
// floor engages), so the identity mean = unc - dsc + rel holds exactly.
struct Decomposition {
    double mean_surprise;
    double unc;  // entropy of the sample base rate
    double dsc;  // discrimination
    double rel;  // reliability penalty
    std::size_t groups;
};

// Reserve p_ign = H, distribute the committed mass proportionally:
// p_i = pi_i * (1 - H) / sum(pi). Reduces to plain proportional
// normalisation when the forecast is normal.
ProbabilityVector convert(const PossibilityForecast& f);

// Simple normalisation pi_i / sum(pi) with p_ign = 0; erases the ignorance
// signal — kept for the contrast experiment only.
ProbabilityVector naive_normalise(const PossibilityForecast& f);

// Climatology as a (K+1)-vector with zero ignorance mass.
// Throws MissingClimatology.
ProbabilityVector climatology_vector(const UniversePtr& universe);

// Log score at the observed category. Throws InvalidEpsilon unless
// epsilon in (0, 0.5); throws OutOfRange when c_obs names the ignorance slot.
SurpriseReport surprise(const ProbabilityVector& p, std::size_t c_obs,
                        double epsilon = kDefaultEpsilon);

// S(baseline) - S(forecast); positive when the forecast beat the baseline.
// Throws UniverseMismatch.
double information_gain(const ProbabilityVector& baseline, const ProbabilityVector& forecast,
                        std::size_t c_obs, double epsilon = kDefaultEpsilon);

// Groups the sample by forecast vector (quantised to 6 decimals) and splits
// mean surprise into UNC - DSC + REL. Throws EmptySample.
Decomposition decompose(std::span<const ProbabilityVector> forecasts,
                        std::span<const std::size_t> observed,
                        double epsilon = kDefaultEpsilon);

}  // namespace possver
