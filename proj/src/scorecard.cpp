#include "possver/scorecard.hpp"

#include <string>

#include "possver/categorical.hpp"
#include "possver/errors.hpp"

namespace possver {

ScorecardRow score_pair(const VerificationPair& pair) {
    const auto& f = pair.forecast;
    if (pair.observed >= f.size())
        throw OutOfRange("observed index " + std::to_string(pair.observed) +
                         " out of range for K=" + std::to_string(f.size()));
    NormalisedForecast shape = normalise(f);
    const auto& pn = shape.pi_norm();
    const std::size_t k = pn.size();

    double sum = 0.0;
    double rival = 0.0;  // largest normalised possibility among non-observed categories
    for (std::size_t i = 0; i < k; ++i) {
        sum += pn[i];
        if (i != pair.observed && pn[i] > rival) rival = pn[i];
    }

    ScorecardRow row;
    row.alpha_star = pn[pair.observed];
    row.eta = sum / static_cast<double>(k);
    row.delta = row.alpha_star - row.eta;
    row.ignorance = f.ignorance();
    row.nc_star = std::clamp(1.0 - rival, 0.0, 1.0);
    row.commitment = f.commitment();
    row.peak = peak_category(f);
    row.joint_skill = row.alpha_star * (1.0 - row.eta);
    return row;
}

double joint_skill(const ScorecardRow& row) { return row.alpha_star * (1.0 - row.eta); }

namespace {

struct MeanAccum {
    ScorecardMeans sums;
    std::size_t n = 0;

    void add(const ScorecardRow& r) {
        sums.alpha_star += r.alpha_star;
        sums.eta += r.eta;
        sums.delta += r.delta;
        sums.ignorance += r.ignorance;
        sums.nc_star += r.nc_star;
        sums.commitment += r.commitment;
        sums.joint_skill += r.joint_skill;
        ++n;
    }

    ScorecardMeans means() const {
        ScorecardMeans m = sums;
        const double d = static_cast<double>(n);
        m.alpha_star /= d;
        m.eta /= d;
        m.delta /= d;
        m.ignorance /= d;
        m.nc_star /= d;
        m.commitment /= d;
        m.joint_skill /= d;
        return m;
    }
};

}  // namespace

ScorecardAggregate aggregate(std::span<const ScorecardRow> rows,
                             std::span<const std::size_t> observed) {
    if (rows.empty()) throw EmptySample("cannot aggregate an empty scorecard sample");
    if (rows.size() != observed.size())
        throw WrongArity("rows and observed sequences differ in length");

    std::size_t k = 0;
    for (std::size_t obs : observed) k = std::max(k, obs + 1);

    MeanAccum overall;
    std::vector<MeanAccum> strata(k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        overall.add(rows[i]);
        strata[observed[i]].add(rows[i]);
    }

    ScorecardAggregate agg;
    agg.count = overall.n;
    agg.overall = overall.means();
    agg.category_counts.resize(k, 0);
    agg.category_means.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        agg.category_counts[c] = strata[c].n;
        if (strata[c].n > 0) agg.category_means[c] = strata[c].means();
    }
    return agg;
}

}  // namespace possver
