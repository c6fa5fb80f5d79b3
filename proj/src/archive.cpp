#include "possver/archive.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "possver/errors.hpp"

namespace possver {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

VerificationPair parse_record(const std::string& line, std::size_t lineno,
                              const UniversePtr& universe) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(lineno, "record is not a JSON object");
    if (!obj.contains("pi") || !obj["pi"].is_array())
        throw ParseError(lineno, "missing numeric array field 'pi'");
    if (!obj.contains("obs")) throw ParseError(lineno, "missing field 'obs'");

    std::vector<double> pi;
    pi.reserve(obj["pi"].size());
    for (const auto& v : obj["pi"]) {
        if (!v.is_number()) throw ParseError(lineno, "'pi' contains a non-numeric entry");
        pi.push_back(v.get<double>());
    }
    if (pi.size() != universe->size())
        throw ParseError(lineno, "'pi' has " + std::to_string(pi.size()) + " values for K=" +
                                     std::to_string(universe->size()));

    std::size_t obs;
    const auto& obs_field = obj["obs"];
    if (obs_field.is_string()) {
        const auto idx = universe->index_of(obs_field.get<std::string>());
        if (!idx)
            throw RecordValidationError(lineno,
                                        "unknown category '" + obs_field.get<std::string>() + "'");
        obs = *idx;
    } else if (obs_field.is_number_unsigned() || obs_field.is_number_integer()) {
        const auto raw = obs_field.get<long long>();
        if (raw < 0 || static_cast<std::size_t>(raw) >= universe->size())
            throw RecordValidationError(lineno, "observed index " + std::to_string(raw) +
                                                    " out of range");
        obs = static_cast<std::size_t>(raw);
    } else {
        throw ParseError(lineno, "'obs' must be a category label or index");
    }

    std::string id = obj.value("id", std::string{});
    std::string model = obj.value("model", std::string{});
    try {
        return {validate(std::move(pi), universe), obs, std::move(id), std::move(model)};
    } catch (const ValidationError& e) {
        throw RecordValidationError(lineno, e.what());
    }
}

}  // namespace

std::vector<VerificationPair> read_archive(std::istream& in, const UniversePtr& universe) {
    std::vector<VerificationPair> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        pairs.push_back(parse_record(line, lineno, universe));
    }
    if (pairs.empty()) throw EmptySample("archive contains no records");
    return pairs;
}

std::vector<VerificationPair> read_archive(const std::filesystem::path& path,
                                           const UniversePtr& universe) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_archive(in, universe);
}

void write_archive(std::span<const VerificationPair> pairs, std::ostream& out) {
    for (const auto& pair : pairs) {
        ordered_json obj;
        obj["id"] = pair.id;
        obj["pi"] = pair.forecast.pi();
        obj["obs"] = pair.forecast.universe()->label(pair.observed);
        if (!pair.model.empty()) obj["model"] = pair.model;
        out << obj.dump() << '\n';
    }
}

UniversePtr read_universe(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid universe file: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("categories") || !obj["categories"].is_array())
        throw ValidationError("universe file needs a 'categories' array");
    std::vector<std::string> categories;
    for (const auto& c : obj["categories"]) {
        if (!c.is_string()) throw ValidationError("'categories' entries must be strings");
        categories.push_back(c.get<std::string>());
    }
    std::optional<std::vector<double>> climatology;
    if (obj.contains("climatology")) {
        if (!obj["climatology"].is_array())
            throw ValidationError("'climatology' must be a numeric array");
        std::vector<double> clim;
        for (const auto& v : obj["climatology"]) {
            if (!v.is_number()) throw ValidationError("'climatology' entries must be numbers");
            clim.push_back(v.get<double>());
        }
        climatology = std::move(clim);
    }
    return std::make_shared<Universe>(std::move(categories), std::move(climatology));
}

}  // namespace possver
