#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "possver/universe.hpp"

namespace possver {

// A validated possibility distribution over a universe. Values live in [0,1]
// and at least one is positive; the peak may be below 1 (subnormal), in which
// case the gap 1 - max(pi) is the forecast's self-reported ignorance.
class PossibilityForecast {
public:
    const std::vector<double>& pi() const { return pi_; }
    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return pi_.size(); }

    // Peak possibility, the commitment m in (0, 1].
    double commitment() const { return commitment_; }
    double ignorance() const { return 1.0 - commitment_; }
    bool normal() const { return commitment_ == 1.0; }

private:
    friend PossibilityForecast validate(std::vector<double> pi, UniversePtr universe);
    PossibilityForecast(std::vector<double> pi, UniversePtr universe, double commitment)
        : pi_(std::move(pi)), universe_(std::move(universe)), commitment_(commitment) {}

    std::vector<double> pi_;
    UniversePtr universe_;
    double commitment_;
};

// Shape-only view of a forecast: pi / m, peak exactly 1.
class NormalisedForecast {
public:
    NormalisedForecast(std::vector<double> pi_norm, UniversePtr universe)
        : pi_norm_(std::move(pi_norm)), universe_(std::move(universe)) {}

    const std::vector<double>& pi_norm() const { return pi_norm_; }
    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return pi_norm_.size(); }

private:
    std::vector<double> pi_norm_;
    UniversePtr universe_;
};

// Event = subset of category indices.
using EventSet = std::vector<std::size_t>;

// Checks arity, range, and the "something must be possible" axiom.
// Throws WrongArity, OutOfRange, AllZero.
PossibilityForecast validate(std::vector<double> pi, UniversePtr universe);

// Pi(A) = max over members. Throws EmptyEvent / OutOfRange.
double possibility(const PossibilityForecast& f, std::span<const std::size_t> event);

// N(A) = 1 - max over complement (empty complement -> 0, so N(Omega) = 1).
// On subnormal forecasts this raw form can sit below Pi(A); use
// conditional_necessity for the coherent normalised quantity.
double necessity(const PossibilityForecast& f, std::span<const std::size_t> event);
double necessity(const NormalisedForecast& f, std::span<const std::size_t> event);

// pi' = pi / m with the peak pinned to exactly 1.
NormalisedForecast normalise(const PossibilityForecast& f);

// H = 1 - m.
double ignorance(const PossibilityForecast& f);

// N_c(A) = 1 - max_{w not in A} pi(w)/m, clamped to [0,1]; equals necessity
// of the normalised shape. Throws EmptyEvent / OutOfRange.
double conditional_necessity(const PossibilityForecast& f, std::span<const std::size_t> event);

}  // namespace possver
