#pragma once

#include <string>
#include <vector>

#include "astf/abstraction.hpp"

namespace astf::svg {

struct RenderSpec {
    double canvas_width = 900.0;
    double canvas_height = 600.0;
    double freq_lo_hz = 0.0;
    double freq_hi_hz = 0.0;
    std::int64_t time_start = 0;
    std::int64_t time_span = 0;
    double margin_left = 70.0;
    double margin_right = 20.0;
    double margin_top = 20.0;
    double margin_bottom = 50.0;
    std::string color_high = "#08519c";
    std::string color_medium = "#3182bd";
    std::string color_low = "#9ecae1";
    std::string color_cue = "#e31a1c";
    double font_size = 12.0;
    int time_ticks = 8;
    int freq_ticks = 6;
    double min_stripe_width_px = 4.0;

    bool valid() const {
        return canvas_width > 0 && canvas_height > 0 && freq_lo_hz < freq_hi_hz &&
               time_span > 0;
    }
};

struct Rect {
    double x = 0, y = 0, w = 0, h = 0;
};

struct StripeGeometry {
    std::string signal_id;
    double x_center = 0;  // px
    double width = 0;     // px, clamped to the minimum stripe width
    Rect body;            // full stripe rectangle (time extent)
};

// Linear frequency-to-x mapping of every stripe. Throws, listing offenders,
// when a signal's center frequency falls outside the configured range.
std::vector<StripeGeometry> layout(const std::vector<abstraction::SignalAbstraction>& signals,
                                   const RenderSpec& spec);

// One cell glyph: class geometry, strength fill, anomaly cues. Earlier time
// is the top edge of the cell rect.
std::string render_cell(const abstraction::CellAbstraction& cell, const Rect& r,
                        const RenderSpec& spec);

// Complete standalone SVG document; byte-deterministic for identical inputs.
std::string render_diagram(const std::vector<abstraction::SignalAbstraction>& signals,
                           const RenderSpec& spec);

}  // namespace astf::svg
