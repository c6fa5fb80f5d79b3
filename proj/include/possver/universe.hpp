#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace possver {

// Ordered universe of discourse: K mutually exclusive category labels in
// severity-ascending order, with an optional climatological frequency vector.
class Universe {
public:
    explicit Universe(std::vector<std::string> categories,
                      std::optional<std::vector<double>> climatology = std::nullopt);

    std::size_t size() const { return categories_.size(); }
    const std::vector<std::string>& categories() const { return categories_; }
    const std::string& label(std::size_t index) const;
    const std::optional<std::vector<double>>& climatology() const { return climatology_; }

    std::optional<std::size_t> index_of(std::string_view label) const;

    // Same universe of discourse = same ordered label list.
    bool operator==(const Universe& other) const { return categories_ == other.categories_; }
    bool operator!=(const Universe& other) const { return !(*this == other); }

private:
    std::vector<std::string> categories_;
    std::optional<std::vector<double>> climatology_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// The six SPC convective-outlook categories with their climatological
// frequencies; the built-in default for the CLI.
UniversePtr spc_universe();

}  // namespace possver
