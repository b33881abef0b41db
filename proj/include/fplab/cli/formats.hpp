#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fplab/property_report.hpp"

namespace fplab::cli {

using Json = nlohmann::ordered_json;

/// Shortest representation that reads back to the same double; "nan",
/// "inf" and "-inf" for non-finite values.
std::string format_double(double v);

/// Comma-separated, '\n' line endings, header row first.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    /// Cells are preformatted; an empty string leaves the cell blank.
    void add_row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::size_t width_;
    std::string text_;
};

/// {property, verdict, samples, worst_margin, witnesses[]}; witnesses are
/// objects mapping quantity names to numbers. Non-finite numbers become null.
Json to_json(const PropertyReport& r);
Json to_json(const std::vector<PropertyReport>& reports);
Json number(double v);

/// Writes `content` to `path`, or to `fallback` when no path is given.
/// Throws std::runtime_error on I/O failure.
void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& fallback);

}  // namespace fplab::cli
