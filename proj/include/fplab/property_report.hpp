#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fplab/point.hpp"

namespace fplab {

enum class Verdict { holds_on_samples, refuted };

std::string_view to_string(Verdict v);

/// Named quantities of one sampled configuration, in insertion order.
/// Points are flattened as name[0], name[1], ...
struct Witness {
    std::vector<std::pair<std::string, double>> values;

    Witness& add(std::string name, double value);
    Witness& add(const std::string& name, const Point& p);
    /// Throws std::out_of_range when the name is absent.
    double get(std::string_view name) const;
    /// Reassembles a flattened point; grid handle is not restored.
    std::vector<double> get_vector(std::string_view name) const;
};

/// Outcome of a sampling-based check. `worst_margin` is the smallest observed
/// value of (allowed - observed) over every checked sample; a check is refuted
/// when some margin falls below -slack. `witnesses` holds the tightest sample
/// first, followed by up to a few further violations in sampling order.
struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::holds_on_samples;
    std::size_t samples_checked = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<Witness> witnesses;

    bool holds() const noexcept { return verdict == Verdict::holds_on_samples; }
};

/// Accumulates margins sample by sample and produces a PropertyReport.
/// Deterministic: ties keep the first sample seen.
class ReportBuilder {
public:
    ReportBuilder(std::string property, double slack, std::size_t max_extra_witnesses = 4);

    /// Records one sample with margin `allowed - observed`. The witness
    /// factory is invoked only when the sample needs to be stored.
    template <class MakeWitness>
    void record(double margin, MakeWitness&& make) {
        ++samples_;
        const bool violation = !(margin >= -slack_);
        if (first_ || margin < worst_ || (std::isnan(margin) && !std::isnan(worst_))) {
            if (!first_ && !(worst_ >= -slack_) && extra_.size() < max_extra_) {
                extra_.push_back(std::move(worst_witness_));
            }
            worst_ = margin;
            worst_witness_ = make();
            first_ = false;
        } else if (violation && extra_.size() < max_extra_) {
            extra_.push_back(make());
        }
        if (violation) refuted_ = true;
    }

    std::size_t samples() const noexcept { return samples_; }
    PropertyReport finish() &&;

private:
    std::string property_;
    double slack_;
    std::size_t max_extra_;
    std::size_t samples_ = 0;
    bool first_ = true;
    bool refuted_ = false;
    double worst_ = std::numeric_limits<double>::infinity();
    Witness worst_witness_;
    std::vector<Witness> extra_;
};

}  // namespace fplab
