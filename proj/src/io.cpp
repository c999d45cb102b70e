#include "astf/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace astf::io {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

double parse_double(std::string_view s, const char* what, std::size_t line_no) {
    double v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw DataError("line " + std::to_string(line_no) + ": bad " + what +
                        " value '" + std::string(s) + "'");
    return v;
}

std::int64_t parse_int(std::string_view s, const char* what, std::size_t line_no) {
    std::int64_t v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw DataError("line " + std::to_string(line_no) + ": bad " + what +
                        " value '" + std::string(s) + "'");
    return v;
}

AnomalyKind anomaly_kind_from_string(const std::string& s) {
    if (s == "frequency") return AnomalyKind::Frequency;
    if (s == "bandwidth") return AnomalyKind::Bandwidth;
    if (s == "strength") return AnomalyKind::Strength;
    if (s == "snr") return AnomalyKind::Snr;
    throw DataError("unknown anomaly kind: " + s);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << content;
}

std::vector<FrequencyFrame> read_spectrum_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    std::vector<FrequencyFrame> frames;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line_no == 1 && line.starts_with("timestamp")))
            continue;
        const auto fields = split(line, ',');
        if (fields.size() < 4)
            throw DataError("line " + std::to_string(line_no) +
                            ": expected at least 4 fields");
        FrequencyFrame f;
        f.timestamp = parse_int(fields[0], "timestamp", line_no);
        f.start_freq_hz = parse_double(fields[1], "start_freq_hz", line_no);
        f.bin_width_hz = parse_double(fields[2], "bin_width_hz", line_no);
        if (f.bin_width_hz <= 0)
            throw DataError("line " + std::to_string(line_no) +
                            ": bin_width_hz must be positive");
        f.amplitudes.reserve(fields.size() - 3);
        for (std::size_t i = 3; i < fields.size(); ++i)
            f.amplitudes.push_back(parse_double(fields[i], "amplitude", line_no));
        frames.push_back(std::move(f));
    }
    return frames;
}

void write_spectrum_csv(const std::filesystem::path& path,
                        const std::vector<FrequencyFrame>& frames) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    char buf[64];
    for (const auto& f : frames) {
        out << f.timestamp;
        std::snprintf(buf, sizeof buf, ",%.6f,%.6f", f.start_freq_hz,
                      f.bin_width_hz);
        out << buf;
        for (double a : f.amplitudes) {
            std::snprintf(buf, sizeof buf, ",%.2f", a);
            out << buf;
        }
        out << "\n";
    }
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<SignalRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << "timestamp,signal_id,center_freq_hz,bandwidth_hz,strength_dbm,snr_db\n";
    char buf[128];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%lld,%s,%.6f,%.6f,%.6f,%.6f",
                      static_cast<long long>(r.timestamp), r.signal_id.c_str(),
                      r.center_freq_hz, r.bandwidth_hz, r.strength_dbm, r.snr_db);
        out << buf << "\n";
    }
}

std::vector<SignalRecord> read_records_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    std::vector<SignalRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line_no == 1 && line.starts_with("timestamp")))
            continue;
        const auto fields = split(line, ',');
        if (fields.size() != 6)
            throw DataError("line " + std::to_string(line_no) +
                            ": expected 6 fields");
        SignalRecord r;
        r.timestamp = parse_int(fields[0], "timestamp", line_no);
        r.signal_id = std::string(fields[1]);
        r.center_freq_hz = parse_double(fields[2], "center_freq_hz", line_no);
        r.bandwidth_hz = parse_double(fields[3], "bandwidth_hz", line_no);
        r.strength_dbm = parse_double(fields[4], "strength_dbm", line_no);
        r.snr_db = parse_double(fields[5], "snr_db", line_no);
        out.push_back(std::move(r));
    }
    return out;
}

std::string sequence_to_text(const StateSequence& seq) {
    std::string out = seq.signal_id + "," + std::to_string(seq.start_time) + "," +
                      std::to_string(seq.span()) + "\n";
    out.reserve(out.size() + seq.bits.size() + 1);
    for (std::uint8_t b : seq.bits) out.push_back(b ? '1' : '0');
    out.push_back('\n');
    return out;
}

StateSequence sequence_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header, bits;
    if (!std::getline(in, header) || !std::getline(in, bits))
        throw DataError("sequence text needs a header line and a bit line");
    const auto fields = split(header, ',');
    if (fields.size() != 3)
        throw DataError("sequence header must be signal_id,start_time,T");
    StateSequence seq;
    seq.signal_id = std::string(fields[0]);
    seq.start_time = parse_int(fields[1], "start_time", 1);
    const std::int64_t span = parse_int(fields[2], "T", 1);
    if (span < 1 || static_cast<std::size_t>(span) != bits.size())
        throw DataError("sequence length disagrees with header T");
    seq.bits.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw DataError("bit string may only contain 0/1");
        seq.bits.push_back(c == '1');
    }
    return seq;
}

void write_sequence(const std::filesystem::path& path, const StateSequence& seq) {
    write_file(path, sequence_to_text(seq));
}

StateSequence read_sequence(const std::filesystem::path& path) {
    return sequence_from_text(read_file(path));
}

std::vector<StateSequence> read_sequences(const std::filesystem::path& path) {
    std::vector<StateSequence> out;
    if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(path))
            if (e.path().extension() == ".seq") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.push_back(read_sequence(f));
    } else {
        out.push_back(read_sequence(path));
    }
    return out;
}

std::string anomalies_to_json(const std::vector<AnomalyRecord>& anomalies) {
    json arr = json::array();
    for (const auto& a : anomalies)
        arr.push_back({{"timestamp", a.timestamp},
                       {"signal_id", a.signal_id},
                       {"kind", to_string(a.kind)}});
    return arr.dump(2) + "\n";
}

std::vector<AnomalyRecord> anomalies_from_json(const std::string& text) {
    std::vector<AnomalyRecord> out;
    for (const auto& a : json::parse(text))
        out.push_back({a.at("timestamp").get<std::int64_t>(),
                       a.at("signal_id").get<std::string>(),
                       anomaly_kind_from_string(a.at("kind").get<std::string>())});
    return out;
}

std::string segmentations_to_json(
    const std::vector<std::string>& signal_ids,
    const std::vector<seg::SegmentationResult>& results,
    const std::string& algorithm, const metrics::LossWeights& weights) {
    json arr = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        arr.push_back({{"signal_id", signal_ids[i]},
                       {"T", r.segmentation.span},
                       {"n", r.segmentation.slice_count()},
                       {"dividing_points", r.segmentation.dividing_points},
                       {"loss", r.loss},
                       {"algorithm", algorithm},
                       {"weights", {weights.w1, weights.w2, weights.w3}}});
    }
    return arr.dump(2) + "\n";
}

std::vector<NamedSegmentation> segmentations_from_json(const std::string& text) {
    std::vector<NamedSegmentation> out;
    for (const auto& s : json::parse(text)) {
        NamedSegmentation ns;
        ns.signal_id = s.at("signal_id").get<std::string>();
        ns.segmentation.span = s.at("T").get<std::int64_t>();
        ns.segmentation.dividing_points =
            s.at("dividing_points").get<std::vector<std::int64_t>>();
        ns.loss = s.at("loss").get<double>();
        ns.algorithm = s.value("algorithm", "");
        if (!ns.segmentation.valid())
            throw DataError("invalid segmentation for " + ns.signal_id);
        out.push_back(std::move(ns));
    }
    return out;
}

std::string abstractions_to_json(
    const std::vector<abstraction::SignalAbstraction>& abstractions) {
    json arr = json::array();
    for (const auto& a : abstractions) {
        json cells = json::array();
        for (const auto& c : a.cells)
            cells.push_back({{"cell_index", c.cell_index},
                             {"cell_class", static_cast<int>(c.cell_class)},
                             {"strength_level", to_string(c.strength_level)},
                             {"anomaly_time_axis", c.anomaly_time_axis},
                             {"anomaly_freq_axis", c.anomaly_freq_axis}});
        arr.push_back({{"signal_id", a.signal_id},
                       {"center_freq_hz", a.center_freq_hz},
                       {"bandwidth_hz", a.bandwidth_hz},
                       {"segmentation",
                        {{"T", a.segmentation.span},
                         {"dividing_points", a.segmentation.dividing_points}}},
                       {"cells", cells}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace astf::io
