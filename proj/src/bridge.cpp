#include "possver/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "possver/errors.hpp"

namespace possver {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw InvalidEpsilon("epsilon must lie in (0, 0.5), got " + std::to_string(epsilon));
}

double log2_checked(double x) { return std::log2(x); }

}  // namespace

ProbabilityVector convert(const PossibilityForecast& f) {
    const double h = f.ignorance();
    double sum = 0.0;
    for (double v : f.pi()) sum += v;

    ProbabilityVector out;
    out.universe = f.universe();
    out.p.resize(f.size() + 1);
    // multiply-then-divide so the normal case (h = 0) matches plain
    // proportional normalisation bit for bit
    for (std::size_t i = 0; i < f.size(); ++i) out.p[i] = f.pi()[i] * (1.0 - h) / sum;
    out.p.back() = h;
    return out;
}

ProbabilityVector naive_normalise(const PossibilityForecast& f) {
    double sum = 0.0;
    for (double v : f.pi()) sum += v;

    ProbabilityVector out;
    out.universe = f.universe();
    out.p.resize(f.size() + 1);
    for (std::size_t i = 0; i < f.size(); ++i) out.p[i] = f.pi()[i] / sum;
    out.p.back() = 0.0;
    return out;
}

ProbabilityVector climatology_vector(const UniversePtr& universe) {
    if (!universe) throw InvalidConfig("null universe");
    if (!universe->climatology())
        throw MissingClimatology("universe has no climatological frequencies");

    ProbabilityVector out;
    out.universe = universe;
    out.p = *universe->climatology();
    out.p.push_back(0.0);
    return out;
}

SurpriseReport surprise(const ProbabilityVector& p, std::size_t c_obs, double epsilon) {
    check_epsilon(epsilon);
    if (c_obs >= p.categories())
        throw OutOfRange("observed index " + std::to_string(c_obs) +
                         " out of range (the ignorance outcome is never observed)");
    const double raw = p.p[c_obs];
    const bool floored = raw < epsilon;
    SurpriseReport r;
    r.bits = -log2_checked(floored ? epsilon : raw);
    r.floored = floored;
    r.epsilon = epsilon;
    return r;
}

double information_gain(const ProbabilityVector& baseline, const ProbabilityVector& forecast,
                        std::size_t c_obs, double epsilon) {
    if (baseline.p.size() != forecast.p.size() ||
        (baseline.universe && forecast.universe && *baseline.universe != *forecast.universe))
        throw UniverseMismatch("baseline and forecast describe different universes");
    return surprise(baseline, c_obs, epsilon).bits - surprise(forecast, c_obs, epsilon).bits;
}

namespace {

// 6-decimal quantisation used as the grouping key: merges float-noise
// duplicates without disturbing genuinely distinct vectors.
std::vector<std::int64_t> quantise(const std::vector<double>& p) {
    std::vector<std::int64_t> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = std::llround(p[i] * 1e6);
    return q;
}

struct Group {
    std::vector<double> forecast;        // representative vector
    std::vector<std::size_t> obs_count;  // per outcome, length K+1
    std::size_t n = 0;
};

}  // namespace

Decomposition decompose(std::span<const ProbabilityVector> forecasts,
                        std::span<const std::size_t> observed, double epsilon) {
    check_epsilon(epsilon);
    if (forecasts.empty()) throw EmptySample("cannot decompose an empty sample");
    if (forecasts.size() != observed.size())
        throw WrongArity("forecasts and observations differ in length");

    const std::size_t width = forecasts[0].p.size();  // K+1 outcomes
    const std::size_t n_total = forecasts.size();

    std::map<std::vector<std::int64_t>, Group> groups;
    std::vector<std::size_t> base_count(width, 0);
    for (std::size_t i = 0; i < n_total; ++i) {
        if (forecasts[i].p.size() != width)
            throw UniverseMismatch("sample mixes probability vectors of different widths");
        if (observed[i] >= width - 1)
            throw OutOfRange("observed index out of range in decomposition sample");
        auto key = quantise(forecasts[i].p);
        Group& g = groups[std::move(key)];
        if (g.n == 0) {
            g.forecast = forecasts[i].p;
            g.obs_count.assign(width, 0);
        }
        ++g.obs_count[observed[i]];
        ++g.n;
        ++base_count[observed[i]];
    }

    const double n = static_cast<double>(n_total);

    // UNC: entropy of the base rate over all K+1 outcomes.
    double unc = 0.0;
    for (std::size_t j = 0; j < width; ++j) {
        if (base_count[j] == 0) continue;
        const double oj = static_cast<double>(base_count[j]) / n;
        unc -= oj * log2_checked(oj);
    }

    double dsc = 0.0;
    double rel = 0.0;
    double mean_surprise = 0.0;
    for (auto& [key, g] : groups) {
        const double nk = static_cast<double>(g.n);

        // Floor observed-in-group zero entries; renormalise only if a floor
        // engaged, so untouched vectors keep exact equality with the base rate.
        std::vector<double> q = g.forecast;
        bool floored = false;
        for (std::size_t j = 0; j < width; ++j) {
            if (g.obs_count[j] > 0 && q[j] < epsilon) {
                q[j] = epsilon;
                floored = true;
            }
        }
        if (floored) {
            double qsum = 0.0;
            for (double v : q) qsum += v;
            for (double& v : q) v /= qsum;
        }

        for (std::size_t j = 0; j < width; ++j) {
            if (g.obs_count[j] == 0) continue;
            const double okj = static_cast<double>(g.obs_count[j]) / nk;
            const double oj = static_cast<double>(base_count[j]) / n;
            dsc += nk * okj * log2_checked(okj / oj);
            rel += nk * okj * log2_checked(okj / q[j]);
            mean_surprise -= nk * okj * log2_checked(q[j]);
        }
    }

    Decomposition d;
    d.unc = unc;
    d.dsc = dsc / n;
    d.rel = rel / n;
    d.mean_surprise = mean_surprise / n;
    d.groups = groups.size();
    return d;
}

}  // namespace possver
