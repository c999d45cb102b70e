#pragma once

#include <optional>
#include <string>
#include <vector>

#include "astf/core.hpp"
#include "astf/metrics.hpp"

namespace astf::seg {

struct SegmentationConfig {
    int n_min = 30;
    int n_max = 50;
    metrics::LossWeights weights;

    bool valid() const { return n_min >= 1 && n_min <= n_max && weights.valid(); }
};

struct SegmentationResult {
    Segmentation segmentation;
    double loss = 0.0;
    int slice_count = 0;
    int iterations = 0;      // Stage II accepted moves (0 for reference bodies)
    double elapsed_s = 0.0;  // wall clock around the segmentation call
};

// Precomputed view of a sequence for fast loss evaluation: the sorted CSCP
// list, the 1-bit count, and the initial state. Slice classification and
// aggregated locations are derived by binary search instead of bit scans,
// so evaluating a segmentation costs O(n log C) rather than O(T).
class LossEvaluator {
public:
    explicit LossEvaluator(const StateSequence& seq);

    struct SliceData {
        metrics::CellClass cls = metrics::CellClass::C1;
        std::optional<double> rising_mean;   // aggregated rising location
        std::optional<double> falling_mean;  // aggregated falling location
    };

    SliceData slice_data(std::int64_t lo, std::int64_t hi) const;

    // |D/T - V/L| contribution of one slice when rendered as cell i of n.
    double sim_term(const SliceData& d, std::size_t cell_index, std::size_t n) const;

    double loss_of(const std::vector<SliceData>& data,
                   const std::vector<double>& spans,
                   const metrics::LossWeights& w) const;

    double evaluate(const Segmentation& seg, const metrics::LossWeights& w) const;

    std::int64_t span() const { return span_; }
    std::int64_t ones() const { return ones_; }
    const std::vector<Cscp>& cscps() const { return cscps_; }
    const std::vector<std::int64_t>& cscp_locations() const { return locations_; }

private:
    std::int64_t span_ = 0;
    std::int64_t ones_ = 0;
    int initial_state_ = 0;
    std::vector<Cscp> cscps_;
    std::vector<std::int64_t> locations_;

    int state_at(std::int64_t t) const;  // bit value at second t
};

// Evenly spaced dividing points round(i*T/n), half away from zero.
Segmentation segment_equal(std::int64_t span, int n);

struct Stage1Result {
    int n = 0;
    Segmentation segmentation;
    double loss = 0.0;
};

// Stage I: scan every n in the clamped range over equal-length divisions
// and keep the minimum-loss n (ties to the smallest n).
Stage1Result bssva_stage1(const LossEvaluator& ev, const SegmentationConfig& cfg);

struct CandidateMove {
    std::size_t point_index = 0;  // index into dividing_points
    std::int64_t new_location = 0;
};

// At most two candidates per active dividing point: the nearest rising edge
// belonging to the slice before it and the nearest falling edge belonging to
// the slice after it. Candidates breaking the 1 s minimum span or matching
// the current location are dropped. Equidistant edges resolve to the earlier
// location.
std::vector<CandidateMove> candidate_moves(const LossEvaluator& ev,
                                           const Segmentation& seg,
                                           const std::vector<bool>& active);

// Stage II: greedy single-move descent. Each iteration applies the
// minimum-loss candidate move if it improves on the previously accepted
// loss, then retires the moved point.
SegmentationResult bssva_stage2(const LossEvaluator& ev, const Stage1Result& seed,
                                const SegmentationConfig& cfg);

SegmentationResult bssva(const StateSequence& seq, const SegmentationConfig& cfg);

// Reference strategies under the same loss function and n range.
SegmentationResult segment_el(const StateSequence& seq, const SegmentationConfig& cfg);
SegmentationResult segment_sw(const StateSequence& seq, const SegmentationConfig& cfg);
SegmentationResult segment_bu(const StateSequence& seq, const SegmentationConfig& cfg);
SegmentationResult segment_td(const StateSequence& seq, const SegmentationConfig& cfg);
SegmentationResult segment_fp(const StateSequence& seq, const SegmentationConfig& cfg);

using SegmentFn = SegmentationResult (*)(const StateSequence&,
                                         const SegmentationConfig&);

// Lookup by name: bssva, el, sw, bu, td, fp.
SegmentFn algorithm_by_name(const std::string& name);
const std::vector<std::string>& algorithm_names();

}  // namespace astf::seg
