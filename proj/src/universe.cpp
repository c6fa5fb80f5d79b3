#include "possver/universe.hpp"

#include <cmath>
#include <unordered_set>

#include "possver/errors.hpp"

namespace possver {

Universe::Universe(std::vector<std::string> categories,
                   std::optional<std::vector<double>> climatology)
    : categories_(std::move(categories)), climatology_(std::move(climatology)) {
    if (categories_.size() < 2)
        throw InvalidConfig("universe needs at least 2 categories, got " +
                            std::to_string(categories_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& label : categories_) {
        if (!seen.insert(label).second)
            throw InvalidConfig("duplicate category label: " + label);
    }
    if (climatology_) {
        if (climatology_->size() != categories_.size())
            throw WrongArity("climatology has " + std::to_string(climatology_->size()) +
                             " entries for " + std::to_string(categories_.size()) + " categories");
        double sum = 0.0;
        for (double p : *climatology_) {
            if (!(p >= 0.0 && p <= 1.0))
                throw OutOfRange("climatology entry outside [0,1]");
            sum += p;
        }
        if (std::fabs(sum - 1.0) > 1e-9)
            throw OutOfRange("climatology sums to " + std::to_string(sum) + ", expected 1");
    }
}

const std::string& Universe::label(std::size_t index) const {
    if (index >= categories_.size())
        throw OutOfRange("category index " + std::to_string(index) + " out of range");
    return categories_[index];
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < categories_.size(); ++i)
        if (categories_[i] == label) return i;
    return std::nullopt;
}

UniversePtr spc_universe() {
    static const UniversePtr instance = std::make_shared<Universe>(
        std::vector<std::string>{"NONE", "MRGL", "SLGT", "ENH", "MDT", "HIGH"},
        std::vector<double>{0.60, 0.18, 0.12, 0.06, 0.032, 0.008});
    return instance;
}

}  // namespace possver
