#include "fplab/cli/formats.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace fplab::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) { add_row(std::move(header)); }

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (cells.size() != width_) throw std::logic_error("CSV row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
}

std::string CsvWriter::str() const { return text_; }

Json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

Json to_json(const PropertyReport& r) {
    Json j;
    j["property"] = r.property;
    j["verdict"] = std::string(to_string(r.verdict));
    j["samples"] = r.samples_checked;
    j["worst_margin"] = number(r.worst_margin);
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json obj = Json::object();
        for (const auto& [k, v] : w.values) obj[k] = number(v);
        witnesses.push_back(std::move(obj));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json to_json(const std::vector<PropertyReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& fallback) {
    if (!path) {
        fallback << content;
        return;
    }
    std::ofstream f(*path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + *path + "' for writing");
    f << content;
    if (!f) throw std::runtime_error("write to '" + *path + "' failed");
}

}  // namespace fplab::cli
