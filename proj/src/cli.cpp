#include "astf/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "astf/abstraction.hpp"
#include "astf/bench.hpp"
#include "astf/io.hpp"
#include "astf/preprocess.hpp"
#include "astf/render_svg.hpp"
#include "astf/segmentation.hpp"

namespace astf::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct GlobalOptions {
    std::string config_path;
    int threads = 1;
    bool quiet = false;
};

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::map<std::string, std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key=value: " + line);
        out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

template <typename T>
void config_get(const std::map<std::string, std::string>& cfg,
                const std::string& key, T& value) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return;
    std::istringstream in(it->second);
    in >> value;
    if (in.fail())
        throw CLI::ValidationError("--config", "bad value for " + key);
}

// Runs fn(i) for i in [0, count) across the requested worker count.
// Output slots are per-index, so scheduling does not affect results.
template <typename F>
void parallel_for(std::size_t count, int threads, F&& fn) {
    const int workers =
        std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1))
                fn(i);
        });
    for (auto& t : pool) t.join();
}

void write_manifest(const fs::path& path, const std::string& command,
                    const json& inputs, const json& outputs, const json& config) {
    json m = {{"tool", "astf"},
              {"version", kVersion},
              {"command", command},
              {"inputs", inputs},
              {"outputs", outputs},
              {"config", config}};
    io::write_file(path, m.dump(2) + "\n");
}

metrics::LossWeights parse_weights(const std::string& text) {
    metrics::LossWeights w;
    if (text.empty()) return w;
    const auto parts = [&] {
        std::vector<double> v;
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) v.push_back(std::stod(tok));
        return v;
    }();
    if (parts.size() != 3)
        throw CLI::ValidationError("--weights", "expected w1,w2,w3");
    w = {parts[0], parts[1], parts[2]};
    if (!w.valid())
        throw CLI::ValidationError(
            "--weights", "weights must lie in (0,1] and sum to 1");
    return w;
}

int cmd_process(const GlobalOptions& g, const std::string& input,
                const std::string& out_dir, preprocess::PreprocessConfig cfg) {
    fs::create_directories(out_dir);
    const auto frames = io::read_spectrum_csv(input);

    std::vector<SignalRecord> records;
    std::int64_t start = 0, span = 0;
    if (!frames.empty()) {
        records = preprocess::identify_signals(frames, cfg);
        std::int64_t t_min = frames.front().timestamp;
        std::int64_t t_max = t_min;
        for (const auto& f : frames) {
            t_min = std::min(t_min, f.timestamp);
            t_max = std::max(t_max, f.timestamp);
        }
        start = t_min;
        span = t_max - t_min + 1;
    }
    const auto by_signal = preprocess::group_by_signal(records);

    io::write_records_csv(fs::path(out_dir) / "records.csv", records);

    const fs::path seq_dir = fs::path(out_dir) / "sequences";
    fs::create_directories(seq_dir);

    std::vector<std::string> ids;
    for (const auto& [id, rs] : by_signal) ids.push_back(id);
    std::vector<StateSequence> seqs(ids.size());
    std::vector<std::vector<AnomalyRecord>> anomalies(ids.size());
    parallel_for(ids.size(), g.threads, [&](std::size_t i) {
        const auto& rs = by_signal.at(ids[i]);
        seqs[i] = preprocess::binarize_states(ids[i], rs, start, span, cfg);
        anomalies[i] = preprocess::detect_anomalies(rs, cfg);
    });

    std::vector<AnomalyRecord> all_anomalies;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        io::write_sequence(seq_dir / (ids[i] + ".seq"), seqs[i]);
        all_anomalies.insert(all_anomalies.end(), anomalies[i].begin(),
                             anomalies[i].end());
    }
    io::write_file(fs::path(out_dir) / "anomalies.json",
                   io::anomalies_to_json(all_anomalies));

    write_manifest(fs::path(out_dir) / "manifest.json", "process",
                   {{"spectrum_csv", input}},
                   {{"records_csv", (fs::path(out_dir) / "records.csv").string()},
                    {"sequences_dir", seq_dir.string()},
                    {"anomalies_json",
                     (fs::path(out_dir) / "anomalies.json").string()}},
                   {{"noise_margin_db", cfg.noise_margin_db},
                    {"min_bandwidth_bins", cfg.min_bandwidth_bins},
                    {"track_overlap_ratio", cfg.track_overlap_ratio},
                    {"state_window_s", cfg.state_window_s},
                    {"pauta_k", cfg.pauta_k},
                    {"track_timeout_s", cfg.track_timeout_s},
                    {"config_file", g.config_path},
                    {"capture_start", start},
                    {"capture_span", span}});
    if (!g.quiet)
        std::cout << "processed " << frames.size() << " frames into "
                  << ids.size() << " signals\n";
    return 0;
}

int cmd_segment(const GlobalOptions& g, const std::string& input,
                const std::string& out_file, const std::string& algorithm,
                const seg::SegmentationConfig& cfg) {
    const auto sequences = io::read_sequences(input);
    const auto fn = seg::algorithm_by_name(algorithm);

    std::vector<std::string> ids(sequences.size());
    std::vector<seg::SegmentationResult> results(sequences.size());
    parallel_for(sequences.size(), g.threads, [&](std::size_t i) {
        ids[i] = sequences[i].signal_id;
        results[i] = fn(sequences[i], cfg);
    });

    io::write_file(out_file, io::segmentations_to_json(ids, results, algorithm,
                                                       cfg.weights));
    write_manifest(fs::path(out_file).string() + ".manifest.json", "segment",
                   {{"sequences", input}}, {{"segments_json", out_file}},
                   {{"algorithm", algorithm},
                    {"n_min", cfg.n_min},
                    {"n_max", cfg.n_max},
                    {"weights", {cfg.weights.w1, cfg.weights.w2, cfg.weights.w3}},
                    {"config_file", g.config_path}});
    if (!g.quiet)
        std::cout << "segmented " << sequences.size() << " sequences with "
                  << algorithm << "\n";
    return 0;
}

int cmd_render(const GlobalOptions& g, const std::string& process_dir,
               const std::string& segments_file, const std::string& out_file,
               svg::RenderSpec spec, bool have_freq_range,
               const abstraction::StrengthThresholds& th) {
    const auto records = io::read_records_csv(fs::path(process_dir) / "records.csv");
    const auto anomalies = io::anomalies_from_json(
        io::read_file(fs::path(process_dir) / "anomalies.json"));
    const auto segments = io::segmentations_from_json(io::read_file(segments_file));
    const auto by_signal = preprocess::group_by_signal(records);

    std::map<std::string, std::vector<AnomalyRecord>> anomalies_by_signal;
    for (const auto& a : anomalies) anomalies_by_signal[a.signal_id].push_back(a);

    std::vector<abstraction::SignalAbstraction> abstractions;
    std::int64_t t0 = 0, t_span = 1;
    for (const auto& ns : segments) {
        const auto seq = io::read_sequence(fs::path(process_dir) / "sequences" /
                                           (ns.signal_id + ".seq"));
        t0 = seq.start_time;
        t_span = seq.span();
        const auto rit = by_signal.find(ns.signal_id);
        const auto ait = anomalies_by_signal.find(ns.signal_id);
        abstractions.push_back(abstraction::abstract_signal(
            seq, ns.segmentation,
            rit == by_signal.end() ? std::vector<SignalRecord>{} : rit->second,
            ait == anomalies_by_signal.end() ? std::vector<AnomalyRecord>{}
                                             : ait->second,
            th));
    }

    spec.time_start = t0;
    spec.time_span = t_span;
    if (!have_freq_range) {
        // derive from the stripes, padded by 5% of the occupied band
        double lo = 0, hi = 1;
        bool first = true;
        for (const auto& a : abstractions) {
            const double alo = a.center_freq_hz - a.bandwidth_hz / 2;
            const double ahi = a.center_freq_hz + a.bandwidth_hz / 2;
            lo = first ? alo : std::min(lo, alo);
            hi = first ? ahi : std::max(hi, ahi);
            first = false;
        }
        const double pad = first ? 0.5 : 0.05 * std::max(hi - lo, 1.0);
        spec.freq_lo_hz = lo - pad;
        spec.freq_hi_hz = hi + pad;
    }

    io::write_file(out_file, svg::render_diagram(abstractions, spec));
    write_manifest(fs::path(out_file).string() + ".manifest.json", "render",
                   {{"process_dir", process_dir}, {"segments_json", segments_file}},
                   {{"svg", out_file}},
                   {{"canvas_width", spec.canvas_width},
                    {"canvas_height", spec.canvas_height},
                    {"freq_lo_hz", spec.freq_lo_hz},
                    {"freq_hi_hz", spec.freq_hi_hz},
                    {"high_dbm", th.high_dbm},
                    {"low_dbm", th.low_dbm},
                    {"config_file", g.config_path}});
    if (!g.quiet)
        std::cout << "rendered " << abstractions.size() << " signals to "
                  << out_file << "\n";
    return 0;
}

std::vector<bench::BenchGroup> parse_groups(const std::string& text) {
    if (text.empty()) return {};
    std::vector<bench::BenchGroup> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--groups", "expected span:complexity");
        const std::string span = tok.substr(0, colon);
        const std::string cx = tok.substr(colon + 1);
        bench::BenchGroup g;
        g.span_name = span;
        g.complexity_name = cx;
        if (span == "week")
            g.span_s = bench::kWeekSeconds;
        else if (span == "month")
            g.span_s = bench::kMonthSeconds;
        else
            throw CLI::ValidationError("--groups", "span must be week or month");
        if (cx == "moderate")
            g.cscps_per_day = bench::kModerateCscpsPerDay;
        else if (cx == "high")
            g.cscps_per_day = bench::kHighCscpsPerDay;
        else
            throw CLI::ValidationError("--groups",
                                       "complexity must be moderate or high");
        out.push_back(std::move(g));
    }
    return out;
}

int cmd_bench(const GlobalOptions& g, const bench::BenchOptions& opts,
              const std::string& out_file) {
    const auto report =
        bench::run_benchmark(opts, g.quiet ? nullptr : &std::cerr);
    io::write_file(out_file, bench::report_csv(report));
    const auto summaries = bench::summarize(report);
    std::cout << bench::summary_table(summaries);
    write_manifest(fs::path(out_file).string() + ".manifest.json", "bench",
                   json::object(), {{"report_csv", out_file}},
                   {{"signals_per_group", opts.signals_per_group},
                    {"runs_per_signal", opts.runs_per_signal},
                    {"base_seed", opts.base_seed},
                    {"n_min", opts.seg_cfg.n_min},
                    {"n_max", opts.seg_cfg.n_max},
                    {"weights",
                     {opts.seg_cfg.weights.w1, opts.seg_cfg.weights.w2,
                      opts.seg_cfg.weights.w3}},
                    {"config_file", g.config_path}});
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"ASTF diagram toolkit: spectrum preprocessing, binary state "
                 "sequence segmentation, and abstract time-frequency rendering"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--config", g.config_path, "flat key=value config file");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_flag("--quiet", g.quiet, "suppress progress output");

    // process
    auto* process = app.add_subcommand("process", "spectrum CSV -> signal data");
    std::string in_spectrum, out_dir = "out";
    preprocess::PreprocessConfig pp;
    process->add_option("spectrum_csv", in_spectrum, "input spectrum CSV")
        ->required();
    process->add_option("--out", out_dir, "output directory");
    process->add_option("--noise-margin", pp.noise_margin_db, "dB above noise floor");
    process->add_option("--min-bins", pp.min_bandwidth_bins, "minimum run of bins");
    process->add_option("--overlap", pp.track_overlap_ratio, "track link overlap");

    // segment
    auto* segment = app.add_subcommand("segment", "state sequences -> segmentation");
    std::string in_sequences, out_segments = "segments.json";
    std::string algorithm = "bssva", weights_text;
    seg::SegmentationConfig sc;
    std::string n_range_text;
    segment->add_option("sequences", in_sequences, ".seq file or directory")
        ->required();
    segment->add_option("--out", out_segments, "output JSON path");
    segment->add_option("--algorithm", algorithm, "bssva|el|sw|bu|td|fp")
        ->check(CLI::IsMember(seg::algorithm_names()));
    segment->add_option("--weights", weights_text, "w1,w2,w3 (sum 1, each in (0,1])");
    segment->add_option("--n-range", n_range_text, "slice count range a,b");

    // render
    auto* render = app.add_subcommand("render", "signal data -> ASTF diagram SVG");
    std::string in_process_dir, in_segments, out_svg = "diagram.svg";
    svg::RenderSpec spec;
    abstraction::StrengthThresholds th;
    std::string freq_range_text;
    render->add_option("--process-dir", in_process_dir,
                       "directory written by the process command")
        ->required();
    render->add_option("--segments", in_segments, "segments JSON")->required();
    render->add_option("--out", out_svg, "output SVG path");
    render->add_option("--width", spec.canvas_width, "canvas width px");
    render->add_option("--height", spec.canvas_height, "canvas height px");
    auto* freq_opt =
        render->add_option("--freq-range", freq_range_text, "frequency range lo,hi in Hz");
    render->add_option("--high-dbm", th.high_dbm, "high strength threshold");
    render->add_option("--low-dbm", th.low_dbm, "low strength threshold");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "algorithm comparison harness");
    bench::BenchOptions bo;
    std::string groups_text, out_report = "report.csv";
    bench_cmd->add_option("--groups", groups_text,
                          "comma list of span:complexity (default all four)");
    bench_cmd->add_option("--signals", bo.signals_per_group, "signals per group");
    bench_cmd->add_option("--runs", bo.runs_per_signal, "runs per signal");
    bench_cmd->add_option("--seed", bo.base_seed, "base seed");
    std::string algorithms_text;
    bench_cmd->add_option("--algorithms", algorithms_text,
                          "comma list of algorithms (default all six)");
    bench_cmd->add_option("--out", out_report, "report CSV path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        const auto cfg_file = read_config_file(g.config_path);
        // precedence: flags > config file > defaults
        if (!process->count("--noise-margin"))
            config_get(cfg_file, "noise_margin_db", pp.noise_margin_db);
        if (!process->count("--min-bins"))
            config_get(cfg_file, "min_bandwidth_bins", pp.min_bandwidth_bins);
        if (!process->count("--overlap"))
            config_get(cfg_file, "track_overlap_ratio", pp.track_overlap_ratio);
        if (!segment->count("--n-range")) {
            config_get(cfg_file, "n_min", sc.n_min);
            config_get(cfg_file, "n_max", sc.n_max);
        } else {
            const auto comma = n_range_text.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--n-range", "expected a,b");
            sc.n_min = std::stoi(n_range_text.substr(0, comma));
            sc.n_max = std::stoi(n_range_text.substr(comma + 1));
        }
        if (weights_text.empty()) {
            const auto it = cfg_file.find("weights");
            if (it != cfg_file.end()) weights_text = it->second;
        }
        if (!render->count("--high-dbm")) config_get(cfg_file, "high_dbm", th.high_dbm);
        if (!render->count("--low-dbm")) config_get(cfg_file, "low_dbm", th.low_dbm);

        if (!pp.valid())
            throw CLI::ValidationError("process", "invalid preprocess options");
        sc.weights = parse_weights(weights_text);
        if (!sc.valid())
            throw CLI::ValidationError("segment", "invalid segmentation options");
        if (!th.valid())
            throw CLI::ValidationError("render",
                                       "high threshold must exceed low threshold");

        if (process->parsed()) return cmd_process(g, in_spectrum, out_dir, pp);
        if (segment->parsed()) return cmd_segment(g, in_sequences, out_segments,
                                                  algorithm, sc);
        if (render->parsed()) {
            if (freq_opt->count()) {
                const auto comma = freq_range_text.find(',');
                if (comma == std::string::npos)
                    throw CLI::ValidationError("--freq-range", "expected lo,hi");
                spec.freq_lo_hz = std::stod(freq_range_text.substr(0, comma));
                spec.freq_hi_hz = std::stod(freq_range_text.substr(comma + 1));
            }
            return cmd_render(g, in_process_dir, in_segments, out_svg, spec,
                              freq_opt->count() > 0, th);
        }
        if (bench_cmd->parsed()) {
            bo.groups = parse_groups(groups_text);
            if (!algorithms_text.empty()) {
                std::istringstream in(algorithms_text);
                std::string tok;
                while (std::getline(in, tok, ',')) {
                    seg::algorithm_by_name(tok);  // validate
                    bo.algorithms.push_back(tok);
                }
            }
            bo.seg_cfg = sc;
            return cmd_bench(g, bo, out_report);
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const io::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace astf::cli
