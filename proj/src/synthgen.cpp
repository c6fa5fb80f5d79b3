#include "possver/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "possver/categorical.hpp"
#include "possver/errors.hpp"
#include "possver/rng.hpp"

namespace possver {

namespace {

void check_config(const SynthConfig& c, const UniversePtr& universe) {
    if (!universe) throw InvalidConfig("null universe");
    if (c.n == 0) throw InvalidConfig("sample size must be positive");
    if (c.climatology.size() != universe->size())
        throw InvalidConfig("climatology arity does not match the universe");
    double sum = 0.0;
    for (double p : c.climatology) {
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidConfig("climatology entry outside [0,1]");
        sum += p;
    }
    if (std::fabs(sum - 1.0) > 1e-9) throw InvalidConfig("climatology must sum to 1");
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(c.p_correct_first) || !in_unit(c.p_correct_last))
        throw InvalidConfig("p_correct endpoints outside [0,1]");
    if (c.shift_one_prob < 0.0 || c.shift_two_prob < 0.0 ||
        2.0 * (c.shift_one_prob + c.shift_two_prob) > 1.0 + 1e-12)
        throw InvalidConfig("shift probabilities must be nonnegative and sum to at most 1");
    if (!in_unit(c.ignorance_mean_first) || !in_unit(c.ignorance_mean_last) ||
        !in_unit(c.ignorance_max))
        throw InvalidConfig("ignorance endpoints outside [0,1]");
    if (c.sigma_mean_first <= 0.0 || c.sigma_mean_last <= 0.0 || c.sigma_floor <= 0.0)
        throw InvalidConfig("sigma parameters must be positive");
    if (c.noise_amplitude < 0.0) throw InvalidConfig("noise amplitude must be nonnegative");
}

double lerp_by_category(double first, double last, std::size_t c, std::size_t k) {
    return first + (last - first) * static_cast<double>(c) / static_cast<double>(k - 1);
}

std::size_t draw_category(Rng& rng, const std::vector<double>& climatology) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t c = 0; c < climatology.size(); ++c) {
        acc += climatology[c];
        if (u < acc) return c;
    }
    return climatology.size() - 1;
}

}  // namespace

SynthSample generate(const SynthConfig& config, const UniversePtr& universe) {
    check_config(config, universe);
    const std::size_t k = universe->size();

    SynthSample sample;
    sample.universe = universe;
    sample.records.reserve(config.n);

    for (std::size_t i = 0; i < config.n; ++i) {
        Rng rng = Rng::for_stream(config.seed, i);

        // 1. observed category from climatology
        const std::size_t obs = draw_category(rng, config.climatology);

        // 2. peak: correct with p_correct(obs), otherwise near-miss shifted;
        //    shifts falling outside the universe clamp to the nearest category
        //    (which may be the observed one).
        const double p_correct =
            lerp_by_category(config.p_correct_first, config.p_correct_last, obs, k);
        std::size_t peak = obs;
        if (rng.uniform() >= p_correct) {
            const double u = rng.uniform();
            const double s1 = config.shift_one_prob, s2 = config.shift_two_prob;
            int shift;
            if (u < s1) shift = -1;
            else if (u < 2.0 * s1) shift = 1;
            else if (u < 2.0 * s1 + s2) shift = -2;
            else shift = 2;
            const long shifted = static_cast<long>(obs) + shift;
            peak = static_cast<std::size_t>(std::clamp(shifted, 0L, static_cast<long>(k - 1)));
        }

        // 3. exponential decay from the peak plus uniform noise
        const double sigma_mean =
            lerp_by_category(config.sigma_mean_first, config.sigma_mean_last, obs, k);
        const double sigma = std::max(config.sigma_floor, rng.normal(sigma_mean, config.sigma_spread));
        std::vector<double> pi(k);
        for (std::size_t c = 0; c < k; ++c) {
            const double dist = std::fabs(static_cast<double>(c) - static_cast<double>(peak));
            pi[c] = std::exp(-sigma * dist) + rng.uniform(0.0, config.noise_amplitude);
        }

        // 4. rescale so the peak value equals 1 - h
        const double ign_mean =
            lerp_by_category(config.ignorance_mean_first, config.ignorance_mean_last, obs, k);
        const double h = std::clamp(rng.normal(ign_mean, config.ignorance_spread), 0.0,
                                    config.ignorance_max);
        const double raw_peak = *std::max_element(pi.begin(), pi.end());
        const double target = 1.0 - h;
        for (double& v : pi) v = v / raw_peak * target;

        // 5. clamp to [0,1] and pin the peak so max(pi) == 1 - h exactly
        for (double& v : pi) v = std::clamp(v, 0.0, 1.0);
        *std::max_element(pi.begin(), pi.end()) = target;

        SynthRecord rec{
            {validate(std::move(pi), universe), obs, "r" + std::to_string(i), "synth"},
            sigma,
            h,
            peak};
        sample.records.push_back(std::move(rec));
    }
    return sample;
}

SampleStats sample_stats(const SynthSample& sample) {
    if (sample.records.empty()) throw EmptySample("cannot summarise an empty sample");
    const std::size_t k = sample.universe->size();

    SampleStats stats;
    stats.n = sample.records.size();
    stats.observed_counts.assign(k, 0);
    std::vector<double> ign_sum(k, 0.0);
    std::size_t correct = 0;
    for (const auto& rec : sample.records) {
        ++stats.observed_counts[rec.pair.observed];
        ign_sum[rec.pair.observed] += rec.pair.forecast.ignorance();
        const std::size_t peak = peak_category(rec.pair.forecast);
        correct += peak == rec.pair.observed ? 1 : 0;
    }
    stats.mean_ignorance_by_observed.assign(k, 0.0);
    for (std::size_t c = 0; c < k; ++c)
        if (stats.observed_counts[c] > 0)
            stats.mean_ignorance_by_observed[c] =
                ign_sum[c] / static_cast<double>(stats.observed_counts[c]);
    stats.peak_accuracy = static_cast<double>(correct) / static_cast<double>(stats.n);
    return stats;
}

}  // namespace possver
