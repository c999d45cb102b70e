#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "astf/core.hpp"

namespace astf::metrics {

struct LossWeights {
    double w1 = 1.0 / 3.0;  // Sim_CD
    double w2 = 1.0 / 3.0;  // Dif_DR
    double w3 = 1.0 / 3.0;  // CV_TS

    bool valid() const;
};

// Equal-length cells tiling a time axis of length L.
struct VisualGeometry {
    double axis_length = 0.0;  // L; defaults to T when constructed from a sequence
};

enum class CellClass : int {
    C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10,
};

// A tagged location on the time axis (data or visual space).
struct TaggedLocation {
    CscpKind kind;
    double position;
};

// Classification of a slice's CSCP distribution by count level, first kind,
// and last kind. entry_state is the communication state when entering the
// slice and must be consistent with the first CSCP's kind.
CellClass classify_slice(const std::vector<Cscp>& cscps, int entry_state);

// Entry state of slice [lo, ...): the pre-transition state when a rising
// CSCP sits exactly on lo (the belonging rule pulls it into this slice).
int slice_entry_state(const StateSequence& seq, const std::vector<Cscp>& all_cscps,
                      std::int64_t lo);

// Visual CSCP locations of a cell [c_lo, c_hi): half-cell centers at the
// quarter points, per class. 0..2 tagged locations.
std::vector<TaggedLocation> visual_cscp_locations(CellClass cls, double c_lo,
                                                  double c_hi);

// Per-kind means of the exact CSCP locations in one slice. 0..2 tagged
// locations, rising first.
std::vector<TaggedLocation> aggregate_data_locations(const std::vector<Cscp>& cscps);

// Fraction of a cell's area covered by the class glyph's fill.
double visual_duty_ratio(CellClass cls);

// Sum over location pairs of |D_i/T - V_i/L|.
double sim_cd(const StateSequence& seq, const Segmentation& seg,
              const VisualGeometry& geom);

// |actual duty ratio - mean visual duty ratio over cells|.
double dif_dr(const StateSequence& seq, const Segmentation& seg);

// Coefficient of variation of slice spans (population std dev / mean).
double cv_ts(const Segmentation& seg);

// Same quantity computed from an explicit span list; the incremental loss
// evaluator shares this arithmetic so stored losses match recomputation.
double cv_of_spans(const std::vector<double>& spans);

// w1*Sim_CD + w2*Dif_DR + w3*CV_TS.
double loss(const StateSequence& seq, const Segmentation& seg,
            const VisualGeometry& geom, const LossWeights& w);

}  // namespace astf::metrics
