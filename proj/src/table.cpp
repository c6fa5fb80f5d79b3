#include "possver/table.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "possver/errors.hpp"

namespace possver {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw ValidationError("row width " + std::to_string(row.size()) +
                              " does not match schema width " + std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// Minimal CSV quoting; numeric output never needs it.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(table.columns[i]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        // empty cell
                    } else if constexpr (std::is_same_v<T, double>) {
                        out << fixed6(cell);
                    } else if constexpr (std::is_same_v<T, bool>) {
                        out << (cell ? "true" : "false");
                    } else if constexpr (std::is_same_v<T, std::string>) {
                        out << csv_escape(cell);
                    } else {
                        out << cell;
                    }
                },
                row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        obj[table.columns[i]] = nullptr;
                    } else {
                        obj[table.columns[i]] = cell;
                    }
                },
                row[i]);
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Csv)
        write_csv(table, out);
    else
        write_json(table, out);
    if (!out) throw IoError("failed writing output");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw ValidationError("unknown format '" + name + "' (expected json or csv)");
}

}  // namespace possver
