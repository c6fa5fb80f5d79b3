#include "possver/categorical.hpp"

#include <numeric>
#include <string>

#include "possver/errors.hpp"
#include "possver/scorecard.hpp"

namespace possver {

std::int64_t ConfusionMatrix::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::size_t peak_category(const PossibilityForecast& f) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f.pi()[i] >= f.pi()[best]) best = i;  // >= keeps the severest tied category
    return best;
}

ContingencyTable contingency(std::span<const VerificationPair> pairs, std::size_t threshold) {
    if (pairs.empty()) throw EmptySample("cannot tally an empty sample");
    const std::size_t k = pairs[0].forecast.size();
    if (threshold < 1 || threshold > k - 1)
        throw BadThreshold("threshold " + std::to_string(threshold) + " outside [1, " +
                           std::to_string(k - 1) + "]");

    ContingencyTable t;
    t.threshold = threshold;
    for (const auto& pair : pairs) {
        const bool fc_yes = peak_category(pair.forecast) >= threshold;
        const bool ob_yes = pair.observed >= threshold;
        if (fc_yes && ob_yes) ++t.hits;
        else if (fc_yes) ++t.false_alarms;
        else if (ob_yes) ++t.misses;
        else ++t.correct_negatives;
    }
    return t;
}

CategoricalScores binary_scores(const ContingencyTable& t) {
    const double a = static_cast<double>(t.hits);
    const double b = static_cast<double>(t.false_alarms);
    const double c = static_cast<double>(t.misses);
    const double d = static_cast<double>(t.correct_negatives);

    CategoricalScores s;
    if (a + c > 0) s.pod = a / (a + c);
    if (a + b > 0) s.far = b / (a + b);
    if (a + b + c > 0) s.csi = a / (a + b + c);
    if (a + c > 0 && b + d > 0) s.pss = a / (a + c) - b / (b + d);
    const double hss_den = (a + c) * (c + d) + (a + b) * (b + d);
    if (hss_den > 0) s.hss = 2.0 * (a * d - b * c) / hss_den;
    return s;
}

ConfusionMatrix confusion(std::span<const VerificationPair> pairs) {
    if (pairs.empty()) throw EmptySample("cannot tally an empty sample");
    ConfusionMatrix cm(pairs[0].forecast.size());
    for (const auto& pair : pairs) ++cm.at(peak_category(pair.forecast), pair.observed);
    return cm;
}

std::optional<double> hss_multicategory(const ConfusionMatrix& cm) {
    const double n = static_cast<double>(cm.total());
    if (n <= 0) throw EmptySample("confusion matrix is empty");

    double trace = 0.0;
    double expected = 0.0;
    for (std::size_t i = 0; i < cm.k(); ++i) {
        trace += static_cast<double>(cm.at(i, i));
        double row = 0.0, col = 0.0;
        for (std::size_t j = 0; j < cm.k(); ++j) {
            row += static_cast<double>(cm.at(i, j));
            col += static_cast<double>(cm.at(j, i));
        }
        expected += row * col / n;
    }
    if (n == expected) return std::nullopt;
    return (trace - expected) / (n - expected);
}

}  // namespace possver
