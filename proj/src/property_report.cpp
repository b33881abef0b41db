#include "fplab/property_report.hpp"

#include <stdexcept>

namespace fplab {

std::string_view to_string(Verdict v) {
    return v == Verdict::holds_on_samples ? "holds-on-samples" : "refuted";
}

Witness& Witness::add(std::string name, double value) {
    values.emplace_back(std::move(name), value);
    return *this;
}

Witness& Witness::add(const std::string& name, const Point& p) {
    if (p.size() == 1) return add(name, p[0]);
    for (std::size_t i = 0; i < p.size(); ++i) {
        add(name + "[" + std::to_string(i) + "]", p[i]);
    }
    return *this;
}

double Witness::get(std::string_view name) const {
    for (const auto& [k, v] : values) {
        if (k == name) return v;
    }
    throw std::out_of_range("witness has no value '" + std::string(name) + "'");
}

std::vector<double> Witness::get_vector(std::string_view name) const {
    std::vector<double> out;
    const std::string prefix = std::string(name) + "[";
    for (const auto& [k, v] : values) {
        if (k == name) return {v};
        if (k.rfind(prefix, 0) == 0) out.push_back(v);
    }
    if (out.empty()) throw std::out_of_range("witness has no value '" + std::string(name) + "'");
    return out;
}

ReportBuilder::ReportBuilder(std::string property, double slack, std::size_t max_extra_witnesses)
    : property_(std::move(property)), slack_(slack), max_extra_(max_extra_witnesses) {}

PropertyReport ReportBuilder::finish() && {
    PropertyReport r;
    r.property = std::move(property_);
    r.samples_checked = samples_;
    r.worst_margin = worst_;
    r.verdict = refuted_ ? Verdict::refuted : Verdict::holds_on_samples;
    if (!first_) r.witnesses.push_back(std::move(worst_witness_));
    for (auto& w : extra_) r.witnesses.push_back(std::move(w));
    return r;
}

}  // namespace fplab
