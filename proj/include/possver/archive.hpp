#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "possver/scorecard.hpp"

namespace possver {

// One line of the newline-delimited JSON forecast archive.
struct ForecastArchiveRecord {
    std::string id;
    std::vector<double> pi;
    std::size_t obs;
    std::string model;
};

// Parses an NDJSON archive: one object per line with fields
// id (string, optional), pi (array of K numbers), obs (label or index),
// model (string, optional). The whole file is rejected on the first bad
// record. Throws ParseError / RecordValidationError with the line number,
// EmptySample when no records remain, IoError when the file cannot be read.
std::vector<VerificationPair> read_archive(const std::filesystem::path& path,
                                           const UniversePtr& universe);
std::vector<VerificationPair> read_archive(std::istream& in, const UniversePtr& universe);

// Emits records as NDJSON; observations are written as labels.
void write_archive(std::span<const VerificationPair> pairs, std::ostream& out);

// Loads {"categories": [...], "climatology": [...]} (climatology optional).
UniversePtr read_universe(const std::filesystem::path& path);

}  // namespace possver
