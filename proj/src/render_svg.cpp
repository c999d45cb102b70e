#include "astf/render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

namespace astf::svg {

namespace {

using abstraction::CellAbstraction;
using abstraction::SignalAbstraction;
using abstraction::StrengthLevel;
using metrics::CellClass;

// Coordinates are printed with two decimals; this is the determinism contract.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    // avoid the two representations of zero
    if (std::string_view(buf) == "-0.00") return "0.00";
    return buf;
}

const std::string& fill_color(StrengthLevel level, const RenderSpec& spec) {
    switch (level) {
        case StrengthLevel::High: return spec.color_high;
        case StrengthLevel::Medium: return spec.color_medium;
        default: return spec.color_low;
    }
}

void rect(std::ostringstream& o, double x, double y, double w, double h,
          const std::string& fill) {
    o << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
      << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"/>";
}

void triangle(std::ostringstream& o, double ax, double ay, double b1x, double b1y,
              double b2x, double b2y, const std::string& fill) {
    o << "<polygon points=\"" << num(ax) << "," << num(ay) << " " << num(b1x)
      << "," << num(b1y) << " " << num(b2x) << "," << num(b2y) << "\" fill=\""
      << fill << "\"/>";
}

void line(std::ostringstream& o, double x1, double y1, double x2, double y2,
          const std::string& stroke, double width) {
    o << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\""
      << num(x2) << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << num(width) << "\"/>";
}

// Two slope lines on a triangle apex marking more than two CSCPs.
void umbrella(std::ostringstream& o, double apex_x, double apex_y, bool apex_down,
              double half_cell_h, const RenderSpec& spec) {
    const double len = 0.3 * half_cell_h;
    const double d = len / std::sqrt(2.0);
    const double dy = apex_down ? -d : d;  // back over the triangle body
    line(o, apex_x, apex_y, apex_x - d, apex_y + dy, "#000000", 1.0);
    line(o, apex_x, apex_y, apex_x + d, apex_y + dy, "#000000", 1.0);
}

}  // namespace

std::vector<StripeGeometry> layout(const std::vector<SignalAbstraction>& signals,
                                   const RenderSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("invalid render spec");

    std::string offenders;
    for (const auto& s : signals)
        if (s.center_freq_hz < spec.freq_lo_hz || s.center_freq_hz > spec.freq_hi_hz)
            offenders += (offenders.empty() ? "" : ", ") + s.signal_id;
    if (!offenders.empty())
        throw std::out_of_range("signals outside frequency range: " + offenders);

    const double plot_w = spec.canvas_width - spec.margin_left - spec.margin_right;
    const double plot_h = spec.canvas_height - spec.margin_top - spec.margin_bottom;
    const double f_span = spec.freq_hi_hz - spec.freq_lo_hz;

    std::vector<StripeGeometry> out;
    out.reserve(signals.size());
    for (const auto& s : signals) {
        StripeGeometry g;
        g.signal_id = s.signal_id;
        g.x_center = spec.margin_left +
                     (s.center_freq_hz - spec.freq_lo_hz) / f_span * plot_w;
        g.width = std::max(s.bandwidth_hz / f_span * plot_w,
                           spec.min_stripe_width_px);
        g.body = {g.x_center - g.width / 2, spec.margin_top, g.width, plot_h};
        out.push_back(std::move(g));
    }
    return out;
}

std::string render_cell(const CellAbstraction& cell, const Rect& r,
                        const RenderSpec& spec) {
    std::ostringstream o;
    o << "<g class=\"cell\">";

    const double mid_y = r.y + r.h / 2;
    const double cx = r.x + r.w / 2;
    const std::string& fill = fill_color(cell.strength_level, spec);
    const bool multi = static_cast<int>(cell.cell_class) >= 7;

    switch (cell.cell_class) {
        case CellClass::C1:
            break;
        case CellClass::C2:
            rect(o, r.x, r.y, r.w, r.h, fill);
            break;
        case CellClass::C3:
        case CellClass::C7:
            // appearing on entry, falling edge: earlier-half rect, later-half
            // triangle with the apex toward later time
            rect(o, r.x, r.y, r.w, r.h / 2, fill);
            triangle(o, cx, r.y + r.h, r.x, mid_y, r.x + r.w, mid_y, fill);
            if (multi) umbrella(o, cx, r.y + r.h, true, r.h / 2, spec);
            break;
        case CellClass::C4:
        case CellClass::C8:
            // rising edge then appearing: earlier-half triangle with the apex
            // toward earlier time, later-half rect
            triangle(o, cx, r.y, r.x, mid_y, r.x + r.w, mid_y, fill);
            rect(o, r.x, mid_y, r.w, r.h / 2, fill);
            if (multi) umbrella(o, cx, r.y, false, r.h / 2, spec);
            break;
        case CellClass::C5:
        case CellClass::C9:
            // short communication: rising triangle then falling triangle
            triangle(o, cx, r.y, r.x, mid_y, r.x + r.w, mid_y, fill);
            triangle(o, cx, r.y + r.h, r.x, mid_y, r.x + r.w, mid_y, fill);
            if (multi) {
                umbrella(o, cx, r.y, false, r.h / 2, spec);
                umbrella(o, cx, r.y + r.h, true, r.h / 2, spec);
            }
            break;
        case CellClass::C6:
        case CellClass::C10:
            // short discontinuity: falling triangle then rising triangle
            triangle(o, cx, mid_y, r.x, r.y, r.x + r.w, r.y, fill);
            triangle(o, cx, mid_y, r.x, r.y + r.h, r.x + r.w, r.y + r.h, fill);
            if (multi) {
                umbrella(o, cx, mid_y, true, r.h / 2, spec);
                umbrella(o, cx, mid_y, false, r.h / 2, spec);
            }
            break;
    }

    if (cell.anomaly_time_axis) {
        const double len = 0.4 * r.h;
        line(o, cx, mid_y - len / 2, cx, mid_y + len / 2, spec.color_cue, 1.5);
    }
    if (cell.anomaly_freq_axis) {
        const double len = 0.4 * r.w;
        line(o, cx - len / 2, mid_y, cx + len / 2, mid_y, spec.color_cue, 1.5);
    }

    o << "</g>";
    return o.str();
}

namespace {

std::string time_label(std::int64_t offset_s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld",
                  static_cast<long long>(offset_s / 3600),
                  static_cast<long long>(offset_s / 60 % 60),
                  static_cast<long long>(offset_s % 60));
    return buf;
}

std::string freq_label_mhz(double hz) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", hz / 1e6);
    return buf;
}

}  // namespace

std::string render_diagram(const std::vector<SignalAbstraction>& signals,
                           const RenderSpec& spec) {
    std::vector<SignalAbstraction> sorted = signals;
    std::sort(sorted.begin(), sorted.end(),
              [](const SignalAbstraction& a, const SignalAbstraction& b) {
                  if (a.center_freq_hz != b.center_freq_hz)
                      return a.center_freq_hz < b.center_freq_hz;
                  return a.signal_id < b.signal_id;
              });
    const auto stripes = layout(sorted, spec);

    const double plot_w = spec.canvas_width - spec.margin_left - spec.margin_right;
    const double plot_h = spec.canvas_height - spec.margin_top - spec.margin_bottom;
    const double x0 = spec.margin_left;
    const double y0 = spec.margin_top;

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << num(spec.canvas_width) << "\" height=\"" << num(spec.canvas_height)
      << "\" viewBox=\"0 0 " << num(spec.canvas_width) << " "
      << num(spec.canvas_height) << "\" font-family=\"sans-serif\" font-size=\""
      << num(spec.font_size) << "\">\n";

    // axes
    o << "<g class=\"axes\">";
    line(o, x0, y0, x0, y0 + plot_h, "#000000", 1.0);
    line(o, x0, y0 + plot_h, x0 + plot_w, y0 + plot_h, "#000000", 1.0);
    for (int k = 0; k <= spec.freq_ticks; ++k) {
        const double f = spec.freq_lo_hz +
                         (spec.freq_hi_hz - spec.freq_lo_hz) * k / spec.freq_ticks;
        const double x = x0 + plot_w * k / spec.freq_ticks;
        line(o, x, y0 + plot_h, x, y0 + plot_h + 5, "#000000", 1.0);
        o << "<text x=\"" << num(x) << "\" y=\"" << num(y0 + plot_h + 20)
          << "\" text-anchor=\"middle\">" << freq_label_mhz(f) << "</text>";
    }
    for (int k = 0; k <= spec.time_ticks; ++k) {
        const std::int64_t t = spec.time_span * k / spec.time_ticks;
        const double y = y0 + plot_h * k / spec.time_ticks;
        line(o, x0 - 5, y, x0, y, "#000000", 1.0);
        o << "<text x=\"" << num(x0 - 8) << "\" y=\""
          << num(y + spec.font_size / 3)
          << "\" text-anchor=\"end\">" << time_label(t) << "</text>";
    }
    o << "<text x=\"" << num(x0 + plot_w / 2) << "\" y=\""
      << num(spec.canvas_height - 10) << "\" text-anchor=\"middle\">"
      << "Frequency (MHz)</text>";
    o << "</g>\n";

    for (std::size_t si = 0; si < sorted.size(); ++si) {
        const auto& s = sorted[si];
        const auto& g = stripes[si];
        const std::size_t n = s.cells.size();
        o << "<g class=\"stripe\" data-signal=\"" << s.signal_id << "\">";
        for (std::size_t i = 0; i < n; ++i) {
            Rect r;
            r.x = g.body.x;
            r.w = g.body.w;
            r.y = g.body.y + g.body.h * static_cast<double>(i) /
                                 static_cast<double>(n);
            r.h = g.body.y +
                  g.body.h * static_cast<double>(i + 1) / static_cast<double>(n) -
                  r.y;
            o << render_cell(s.cells[i], r, spec);
        }
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace astf::svg
