#include "possver/core.hpp"

#include <algorithm>
#include <string>

#include "possver/errors.hpp"

namespace possver {

namespace {

void check_event_indices(std::span<const std::size_t> event, std::size_t k) {
    for (std::size_t idx : event)
        if (idx >= k)
            throw OutOfRange("event index " + std::to_string(idx) + " out of range for K=" +
                             std::to_string(k));
}

// max(pi) over indices NOT in the event; 0 when the complement is empty.
double complement_max(std::span<const double> pi, std::span<const std::size_t> event) {
    double best = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (std::find(event.begin(), event.end(), i) != event.end()) continue;
        best = std::max(best, pi[i]);
    }
    return best;
}

}  // namespace

PossibilityForecast validate(std::vector<double> pi, UniversePtr universe) {
    if (!universe) throw InvalidConfig("null universe");
    if (pi.size() != universe->size())
        throw WrongArity("forecast has " + std::to_string(pi.size()) + " values for K=" +
                         std::to_string(universe->size()));
    double peak = 0.0;
    for (double v : pi) {
        if (!(v >= 0.0 && v <= 1.0))
            throw OutOfRange("possibility value " + std::to_string(v) + " outside [0,1]");
        peak = std::max(peak, v);
    }
    if (peak <= 0.0) throw AllZero("all possibilities are zero; something must be possible");
    return PossibilityForecast(std::move(pi), std::move(universe), peak);
}

double possibility(const PossibilityForecast& f, std::span<const std::size_t> event) {
    if (event.empty()) throw EmptyEvent("possibility of the empty event is undefined");
    check_event_indices(event, f.size());
    double best = 0.0;
    for (std::size_t idx : event) best = std::max(best, f.pi()[idx]);
    return best;
}

double necessity(const PossibilityForecast& f, std::span<const std::size_t> event) {
    check_event_indices(event, f.size());
    return 1.0 - complement_max(f.pi(), event);
}

double necessity(const NormalisedForecast& f, std::span<const std::size_t> event) {
    check_event_indices(event, f.size());
    return 1.0 - complement_max(f.pi_norm(), event);
}

NormalisedForecast normalise(const PossibilityForecast& f) {
    const double m = f.commitment();
    std::vector<double> out(f.size());
    std::size_t peak_index = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = f.pi()[i] / m;
        if (f.pi()[i] == m) peak_index = i;
    }
    out[peak_index] = 1.0;  // absorb division rounding at the peak
    return NormalisedForecast(std::move(out), f.universe());
}

double ignorance(const PossibilityForecast& f) { return f.ignorance(); }

double conditional_necessity(const PossibilityForecast& f, std::span<const std::size_t> event) {
    if (event.empty()) throw EmptyEvent("conditional necessity of the empty event is undefined");
    check_event_indices(event, f.size());
    double nc = 1.0 - complement_max(f.pi(), event) / f.commitment();
    return std::clamp(nc, 0.0, 1.0);
}

}  // namespace possver
