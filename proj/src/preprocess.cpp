#include "astf/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace astf::preprocess {

namespace {

struct Interval {
    double lo = 0, hi = 0;
    double width() const { return hi - lo; }
};

double overlap_ratio(const Interval& a, const Interval& b) {
    const double inter = std::min(a.hi, b.hi) - std::max(a.lo, b.lo);
    if (inter <= 0) return 0.0;
    return inter / std::min(a.width(), b.width());
}

struct Detection {
    Interval band;
    double strength = 0;  // mean amplitude over the run
};

struct Track {
    std::string id;
    Interval band;
    std::int64_t last_seen = 0;
};

std::string make_id(int counter) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "S%03d", counter);
    return buf;
}

std::vector<Detection> detect_in_frame(const FrequencyFrame& f, double threshold,
                                       int min_bins) {
    std::vector<Detection> out;
    const std::size_t bins = f.amplitudes.size();
    std::size_t i = 0;
    while (i < bins) {
        if (f.amplitudes[i] < threshold) {
            ++i;
            continue;
        }
        std::size_t j = i;
        double sum = 0;
        while (j < bins && f.amplitudes[j] >= threshold) sum += f.amplitudes[j++];
        const auto run = j - i;
        if (static_cast<int>(run) >= min_bins) {
            Detection d;
            d.band.lo = f.start_freq_hz + static_cast<double>(i) * f.bin_width_hz;
            d.band.hi = f.start_freq_hz + static_cast<double>(j) * f.bin_width_hz;
            d.strength = sum / static_cast<double>(run);
            out.push_back(d);
        }
        i = j;
    }
    return out;
}

}  // namespace

double estimate_noise_floor(const std::vector<FrequencyFrame>& frames) {
    std::vector<double> all;
    for (const auto& f : frames)
        all.insert(all.end(), f.amplitudes.begin(), f.amplitudes.end());
    if (all.empty()) throw std::invalid_argument("no frames");
    const std::size_t mid = all.size() / 2;
    std::nth_element(all.begin(), all.begin() + mid, all.end());
    double upper = all[mid];
    if (all.size() % 2 == 0) {
        // even count: mean of the two middle values
        const double lower = *std::max_element(all.begin(), all.begin() + mid);
        return (lower + upper) / 2.0;
    }
    return upper;
}

std::vector<SignalRecord> identify_signals(const std::vector<FrequencyFrame>& frames,
                                           const PreprocessConfig& cfg) {
    if (frames.empty()) return {};
    for (const auto& f : frames) {
        if (f.start_freq_hz != frames.front().start_freq_hz ||
            f.bin_width_hz != frames.front().bin_width_hz ||
            f.amplitudes.size() != frames.front().amplitudes.size())
            throw std::invalid_argument("frequency frames disagree on the bin grid");
    }

    const double floor = estimate_noise_floor(frames);
    const double threshold = floor + cfg.noise_margin_db;

    std::vector<SignalRecord> records;
    std::vector<Track> open;
    int id_counter = 0;

    for (const auto& frame : frames) {
        std::erase_if(open, [&](const Track& t) {
            return frame.timestamp - t.last_seen > cfg.track_timeout_s;
        });

        const auto detections =
            detect_in_frame(frame, threshold, cfg.min_bandwidth_bins);

        // Greedy best-overlap-first assignment of detections to open tracks.
        struct Link {
            double ratio;
            std::size_t det, track;
        };
        std::vector<Link> links;
        for (std::size_t d = 0; d < detections.size(); ++d)
            for (std::size_t t = 0; t < open.size(); ++t) {
                const double r = overlap_ratio(detections[d].band, open[t].band);
                if (r >= cfg.track_overlap_ratio) links.push_back({r, d, t});
            }
        std::stable_sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
            return a.ratio > b.ratio;
        });

        std::vector<bool> det_used(detections.size(), false);
        std::vector<bool> track_used(open.size(), false);
        std::vector<std::size_t> det_track(detections.size(), SIZE_MAX);
        for (const Link& l : links) {
            if (det_used[l.det] || track_used[l.track]) continue;
            det_used[l.det] = true;
            track_used[l.track] = true;
            det_track[l.det] = l.track;
        }

        for (std::size_t d = 0; d < detections.size(); ++d) {
            std::size_t ti = det_track[d];
            if (ti == SIZE_MAX) {
                open.push_back({make_id(id_counter++), detections[d].band,
                                frame.timestamp});
                ti = open.size() - 1;
            }
            Track& track = open[ti];
            track.band = detections[d].band;
            track.last_seen = frame.timestamp;

            SignalRecord r;
            r.timestamp = frame.timestamp;
            r.signal_id = track.id;
            r.center_freq_hz = (detections[d].band.lo + detections[d].band.hi) / 2.0;
            r.bandwidth_hz = detections[d].band.width();
            r.strength_dbm = detections[d].strength;
            r.snr_db = detections[d].strength - floor;
            records.push_back(std::move(r));
        }
    }
    return records;
}

StateSequence binarize_states(const std::string& signal_id,
                              const std::vector<SignalRecord>& records,
                              std::int64_t capture_start, std::int64_t capture_span,
                              const PreprocessConfig& cfg) {
    StateSequence seq;
    seq.signal_id = signal_id;
    seq.start_time = capture_start;
    seq.bits.assign(static_cast<std::size_t>(capture_span), 0);
    for (const auto& r : records) {
        if (r.timestamp < capture_start ||
            r.timestamp >= capture_start + capture_span)
            throw std::invalid_argument("record outside capture span");
        const std::int64_t from = r.timestamp - capture_start;
        const std::int64_t to =
            std::min(from + cfg.state_window_s, capture_span);
        for (std::int64_t t = from; t < to; ++t)
            seq.bits[static_cast<std::size_t>(t)] = 1;
    }
    return seq;
}

std::vector<AnomalyRecord> detect_anomalies(const std::vector<SignalRecord>& records,
                                            const PreprocessConfig& cfg) {
    if (records.size() < 2) return {};

    const AnomalyKind kinds[4] = {AnomalyKind::Frequency, AnomalyKind::Bandwidth,
                                  AnomalyKind::Strength, AnomalyKind::Snr};
    auto value_of = [](const SignalRecord& r, AnomalyKind k) {
        switch (k) {
            case AnomalyKind::Frequency: return r.center_freq_hz;
            case AnomalyKind::Bandwidth: return r.bandwidth_hz;
            case AnomalyKind::Strength: return r.strength_dbm;
            case AnomalyKind::Snr: return r.snr_db;
        }
        return 0.0;
    };

    std::vector<AnomalyRecord> out;
    const double n = static_cast<double>(records.size());
    for (AnomalyKind k : kinds) {
        double sum = 0;
        for (const auto& r : records) sum += value_of(r, k);
        const double mu = sum / n;
        double sqdev = 0;
        for (const auto& r : records) {
            const double d = value_of(r, k) - mu;
            sqdev += d * d;
        }
        const double sigma = std::sqrt(sqdev / n);
        const double lo = mu - cfg.pauta_k * sigma;
        const double hi = mu + cfg.pauta_k * sigma;
        for (const auto& r : records) {
            const double v = value_of(r, k);
            if (v < lo || v > hi) out.push_back({r.timestamp, r.signal_id, k});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const AnomalyRecord& a, const AnomalyRecord& b) {
                         return a.timestamp < b.timestamp;
                     });
    return out;
}

std::map<std::string, std::vector<SignalRecord>> group_by_signal(
    const std::vector<SignalRecord>& records) {
    std::map<std::string, std::vector<SignalRecord>> out;
    for (const auto& r : records) out[r.signal_id].push_back(r);
    for (auto& [id, rs] : out)
        std::stable_sort(rs.begin(), rs.end(),
                         [](const SignalRecord& a, const SignalRecord& b) {
                             return a.timestamp < b.timestamp;
                         });
    return out;
}

}  // namespace astf::preprocess
