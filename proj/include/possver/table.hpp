#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace possver {

enum class OutputFormat { Json, Csv };

// A uniform-schema result table. Monostate cells are "undefined" and
// serialise as an empty CSV cell / JSON null.
struct Table {
    using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

// CSV: header row, doubles in fixed 6-decimal notation.
// JSON: array of column->value objects, full double precision.
void write_table(const Table& table, OutputFormat format, std::ostream& out);

OutputFormat parse_format(const std::string& name);  // throws ValidationError

}  // namespace possver
