#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "possver/core.hpp"

namespace possver {

struct VerificationPair;

// 2x2 counts at one severity threshold: forecast-yes iff peak >= threshold,
// observation-yes iff observed >= threshold.
struct ContingencyTable {
    std::int64_t hits = 0;             // a
    std::int64_t false_alarms = 0;     // b
    std::int64_t misses = 0;           // c
    std::int64_t correct_negatives = 0;  // d
    std::size_t threshold = 0;

    std::int64_t total() const { return hits + false_alarms + misses + correct_negatives; }
};

// Zero-denominator scores are reported as nullopt, never NaN.
struct CategoricalScores {
    std::optional<double> pod;
    std::optional<double> far;
    std::optional<double> csi;
    std::optional<double> pss;
    std::optional<double> hss;
};

// K x K counts; rows index the forecast peak, columns the observed category.
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::size_t k) : k_(k), counts_(k * k, 0) {}

    std::size_t k() const { return k_; }
    std::int64_t& at(std::size_t peak, std::size_t observed) { return counts_[peak * k_ + observed]; }
    std::int64_t at(std::size_t peak, std::size_t observed) const { return counts_[peak * k_ + observed]; }
    std::int64_t total() const;

private:
    std::size_t k_;
    std::vector<std::int64_t> counts_;
};

// Argmax of pi; ties go to the highest-severity (largest-index) category.
std::size_t peak_category(const PossibilityForecast& f);

// Tallies the 2x2 table at threshold t in [1, K-1]. Throws BadThreshold.
ContingencyTable contingency(std::span<const VerificationPair> pairs, std::size_t threshold);

// POD, FAR, CSI, PSS and the 2x2 Heidke skill score.
CategoricalScores binary_scores(const ContingencyTable& table);

// Throws EmptySample.
ConfusionMatrix confusion(std::span<const VerificationPair> pairs);

// (n_correct - n_expected) / (n - n_expected) with n_expected the
// chance-agreement count under marginal matching; nullopt when n == n_expected.
std::optional<double> hss_multicategory(const ConfusionMatrix& cm);

}  // namespace possver
