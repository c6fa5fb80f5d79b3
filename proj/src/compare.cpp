#include "possver/compare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "possver/bridge.hpp"
#include "possver/categorical.hpp"
#include "possver/errors.hpp"
#include "possver/rng.hpp"

namespace possver {

const std::vector<std::pair<std::string, Orientation>>& orientation_registry() {
    static const std::vector<std::pair<std::string, Orientation>> registry = {
        {"alpha_star", Orientation::HigherBetter},
        {"eta", Orientation::LowerBetter},
        {"delta", Orientation::HigherBetter},
        {"ignorance", Orientation::ContextDependent},
        {"nc_star", Orientation::HigherBetter},
        {"ig", Orientation::HigherBetter},
        {"mean_surprise", Orientation::LowerBetter},
        {"dsc", Orientation::HigherBetter},
        {"rel", Orientation::LowerBetter},
        {"pod", Orientation::HigherBetter},
        {"far", Orientation::LowerBetter},
        {"csi", Orientation::HigherBetter},
        {"pss", Orientation::HigherBetter},
        {"hss", Orientation::HigherBetter},
    };
    return registry;
}

Orientation orientation_of(const std::string& metric) {
    for (const auto& [name, o] : orientation_registry())
        if (name == metric) return o;
    throw ValidationError("unknown metric: " + metric);
}

std::string to_string(Orientation o) {
    switch (o) {
        case Orientation::HigherBetter: return "higher-better";
        case Orientation::LowerBetter: return "lower-better";
        case Orientation::ContextDependent: return "context-dependent";
    }
    return "?";
}

namespace {

// Everything a metric can need, computed once per pair.
struct RecordCache {
    ScorecardRow row;
    ProbabilityVector prob;
    double surprise_bits;
    double ig_bits;
    std::size_t peak;
    std::size_t observed;
};

std::vector<RecordCache> build_cache(std::span<const VerificationPair> pairs,
                                     const ProbabilityVector& clim, double epsilon) {
    std::vector<RecordCache> cache;
    cache.reserve(pairs.size());
    for (const auto& pair : pairs) {
        RecordCache rc;
        rc.row = score_pair(pair);
        rc.prob = convert(pair.forecast);
        rc.surprise_bits = surprise(rc.prob, pair.observed, epsilon).bits;
        rc.ig_bits = information_gain(clim, rc.prob, pair.observed, epsilon);
        rc.peak = rc.row.peak;
        rc.observed = pair.observed;
        cache.push_back(std::move(rc));
    }
    return cache;
}

using MetricFn = std::function<std::optional<double>(std::span<const RecordCache>,
                                                     std::span<const std::size_t>)>;

std::optional<double> mean_of(std::span<const RecordCache> cache,
                              std::span<const std::size_t> idx,
                              double (*pick)(const RecordCache&)) {
    double sum = 0.0;
    for (std::size_t i : idx) sum += pick(cache[i]);
    return sum / static_cast<double>(idx.size());
}

struct MetricSpec {
    std::string facet;
    std::string name;
    MetricFn fn;
};

std::vector<MetricSpec> build_metrics(std::size_t k, std::size_t threshold, double epsilon) {
    auto tally = [threshold](std::span<const RecordCache> cache,
                             std::span<const std::size_t> idx) {
        ContingencyTable t;
        t.threshold = threshold;
        for (std::size_t i : idx) {
            const bool fc = cache[i].peak >= threshold;
            const bool ob = cache[i].observed >= threshold;
            if (fc && ob) ++t.hits;
            else if (fc) ++t.false_alarms;
            else if (ob) ++t.misses;
            else ++t.correct_negatives;
        }
        return t;
    };
    auto decomp = [epsilon](std::span<const RecordCache> cache,
                            std::span<const std::size_t> idx) {
        std::vector<ProbabilityVector> probs;
        std::vector<std::size_t> obs;
        probs.reserve(idx.size());
        obs.reserve(idx.size());
        for (std::size_t i : idx) {
            probs.push_back(cache[i].prob);
            obs.push_back(cache[i].observed);
        }
        return decompose(probs, obs, epsilon);
    };

    std::vector<MetricSpec> metrics;
    auto add = [&](std::string facet, std::string name, MetricFn fn) {
        metrics.push_back({std::move(facet), std::move(name), std::move(fn)});
    };
    add("possibilistic", "alpha_star", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.row.alpha_star; });
    });
    add("possibilistic", "eta", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.row.eta; });
    });
    add("possibilistic", "delta", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.row.delta; });
    });
    add("possibilistic", "ignorance", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.row.ignorance; });
    });
    add("possibilistic", "nc_star", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.row.nc_star; });
    });
    add("probabilistic", "ig", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.ig_bits; });
    });
    add("probabilistic", "mean_surprise", [](auto c, auto i) {
        return mean_of(c, i, +[](const RecordCache& r) { return r.surprise_bits; });
    });
    add("probabilistic", "dsc",
        [decomp](auto c, auto i) { return std::optional<double>(decomp(c, i).dsc); });
    add("probabilistic", "rel",
        [decomp](auto c, auto i) { return std::optional<double>(decomp(c, i).rel); });
    add("categorical", "pod", [tally](auto c, auto i) { return binary_scores(tally(c, i)).pod; });
    add("categorical", "far", [tally](auto c, auto i) { return binary_scores(tally(c, i)).far; });
    add("categorical", "csi", [tally](auto c, auto i) { return binary_scores(tally(c, i)).csi; });
    add("categorical", "pss", [tally](auto c, auto i) { return binary_scores(tally(c, i)).pss; });
    add("categorical", "hss", [k](std::span<const RecordCache> cache,
                                  std::span<const std::size_t> idx) {
        ConfusionMatrix cm(k);
        for (std::size_t i : idx) ++cm.at(cache[i].peak, cache[i].observed);
        return hss_multicategory(cm);
    });
    return metrics;
}

// Nominal per-metric scale used only for the magnitude bucket.
double metric_range(const std::string& name, std::size_t k) {
    if (name == "delta" || name == "pss" || name == "hss") return 2.0;
    if (name == "ig" || name == "mean_surprise" || name == "dsc" || name == "rel")
        return std::log2(static_cast<double>(k + 1));
    return 1.0;
}

double quantile(std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

ComparisonReport compare(std::span<const VerificationPair> baseline,
                         std::span<const VerificationPair> candidate,
                         const CompareSettings& settings) {
    if (baseline.empty() || candidate.empty())
        throw EmptySample("both comparison samples must be nonempty");
    const UniversePtr universe = baseline[0].forecast.universe();
    for (const auto& p : candidate)
        if (*p.forecast.universe() != *universe)
            throw UniverseMismatch("samples describe different universes");
    if (settings.paired) {
        if (baseline.size() != candidate.size())
            throw UnpairedSamples("paired comparison requires equal sample sizes");
        for (std::size_t i = 0; i < baseline.size(); ++i)
            if (baseline[i].observed != candidate[i].observed)
                throw UnpairedSamples("paired comparison requires identical observation sets");
    }
    if (settings.resamples == 0) throw InvalidConfig("resample count must be positive");
    if (!(settings.confidence > 0.0 && settings.confidence < 1.0))
        throw InvalidConfig("confidence level must lie in (0,1)");

    const std::size_t k = universe->size();
    const ProbabilityVector clim = climatology_vector(universe);
    const auto base_cache = build_cache(baseline, clim, settings.epsilon);
    const auto cand_cache = build_cache(candidate, clim, settings.epsilon);
    const auto metrics = build_metrics(k, settings.threshold, settings.epsilon);

    std::vector<std::size_t> all_base(baseline.size()), all_cand(candidate.size());
    for (std::size_t i = 0; i < all_base.size(); ++i) all_base[i] = i;
    for (std::size_t i = 0; i < all_cand.size(); ++i) all_cand[i] = i;

    // Bootstrap deltas; resample r is a fixed function of (seed, r).
    std::vector<std::vector<double>> deltas(metrics.size());
    const std::size_t n_base = baseline.size();
    const std::size_t n_cand = candidate.size();
    std::vector<std::size_t> idx_base(n_base), idx_cand(n_cand);
    for (std::size_t r = 0; r < settings.resamples; ++r) {
        Rng rng = Rng::for_stream(settings.seed, r);
        for (std::size_t i = 0; i < n_base; ++i) idx_base[i] = rng.below(n_base);
        if (settings.paired) {
            idx_cand = idx_base;
        } else {
            for (std::size_t i = 0; i < n_cand; ++i) idx_cand[i] = rng.below(n_cand);
        }
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            const auto vb = metrics[m].fn(base_cache, idx_base);
            const auto vc = metrics[m].fn(cand_cache, idx_cand);
            if (vb && vc) deltas[m].push_back(*vc - *vb);
        }
    }

    ComparisonReport report;
    report.baseline_n = baseline.size();
    report.candidate_n = candidate.size();
    report.settings = settings;
    const double alpha = 1.0 - settings.confidence;
    for (std::size_t m = 0; m < metrics.size(); ++m) {
        MetricDelta row;
        row.facet = metrics[m].facet;
        row.metric = metrics[m].name;
        row.orientation = orientation_of(metrics[m].name);
        row.baseline = metrics[m].fn(base_cache, all_base);
        row.candidate = metrics[m].fn(cand_cache, all_cand);
        if (row.baseline && row.candidate) {
            row.delta = *row.candidate - *row.baseline;
            const double rel = std::fabs(*row.delta) / metric_range(row.metric, k);
            row.magnitude = rel < 0.02 ? "small" : rel < 0.05 ? "medium" : "large";
        }
        if (!deltas[m].empty() && row.delta) {
            std::sort(deltas[m].begin(), deltas[m].end());
            const double lo = quantile(deltas[m], alpha / 2.0);
            const double hi = quantile(deltas[m], 1.0 - alpha / 2.0);
            row.significant = lo > 0.0 || hi < 0.0;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace possver
