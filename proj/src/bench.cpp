#include "astf/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

namespace astf::bench {

StateSequence generate_sequence(const GeneratorConfig& cfg) {
    StateSequence seq;
    seq.signal_id = "G" + std::to_string(cfg.seed);
    seq.start_time = 0;
    seq.bits.assign(static_cast<std::size_t>(cfg.span_s), 0);

    std::mt19937_64 rng(cfg.seed);
    std::bernoulli_distribution init(0.5);
    std::exponential_distribution<double> duration(cfg.cscps_per_day / 86400.0);

    std::uint8_t state = init(rng) ? 1 : 0;
    std::int64_t t = 0;
    while (t < cfg.span_s) {
        const std::int64_t dur =
            std::max<std::int64_t>(5, std::llround(duration(rng)));
        const std::int64_t end = std::min(t + dur, cfg.span_s);
        if (state)
            std::fill(seq.bits.begin() + t, seq.bits.begin() + end, std::uint8_t{1});
        state ^= 1;
        t = end;
    }
    return seq;
}

const std::vector<BenchGroup>& default_groups() {
    static const std::vector<BenchGroup> groups = {
        {"week", "moderate", kWeekSeconds, kModerateCscpsPerDay},
        {"week", "high", kWeekSeconds, kHighCscpsPerDay},
        {"month", "moderate", kMonthSeconds, kModerateCscpsPerDay},
        {"month", "high", kMonthSeconds, kHighCscpsPerDay},
    };
    return groups;
}

std::uint64_t signal_seed(std::uint64_t base_seed, std::size_t group_index,
                          std::size_t signal_index) {
    // splitmix64 over a combined key
    std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ull * (group_index * 1000 +
                                                           signal_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

BenchReport run_benchmark(const BenchOptions& opts, std::ostream* progress) {
    const auto& groups = opts.groups.empty() ? default_groups() : opts.groups;
    const auto algorithms =
        opts.algorithms.empty() ? seg::algorithm_names() : opts.algorithms;

    BenchReport report;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const BenchGroup& g = groups[gi];
        for (int si = 0; si < opts.signals_per_group; ++si) {
            const std::uint64_t seed =
                signal_seed(opts.base_seed, gi, static_cast<std::size_t>(si));
            const StateSequence seq =
                generate_sequence({g.span_s, g.cscps_per_day, seed});
            if (progress)
                *progress << "group " << g.span_name << "/" << g.complexity_name
                          << " signal " << si + 1 << "/" << opts.signals_per_group
                          << "\n";
            for (int run = 1; run <= opts.runs_per_signal; ++run) {
                for (const std::string& name : algorithms) {
                    BenchRow row;
                    row.algorithm = name;
                    row.group_span = g.span_name;
                    row.group_complexity = g.complexity_name;
                    row.signal_seed = seed;
                    row.run = run;
                    try {
                        const auto result =
                            seg::algorithm_by_name(name)(seq, opts.seg_cfg);
                        row.loss = result.loss;
                        row.time_s = result.elapsed_s;
                    } catch (const std::exception& e) {
                        row.failed = true;
                        row.error = e.what();
                    }
                    report.rows.push_back(std::move(row));
                }
            }
        }
    }
    return report;
}

std::vector<GroupSummary> summarize(const BenchReport& report) {
    std::map<std::tuple<std::string, std::string, std::string>, GroupSummary> acc;
    for (const BenchRow& r : report.rows) {
        auto& s = acc[{r.group_span, r.group_complexity, r.algorithm}];
        s.algorithm = r.algorithm;
        s.group_span = r.group_span;
        s.group_complexity = r.group_complexity;
        if (r.failed) {
            ++s.failures;
            continue;
        }
        s.avg_loss += r.loss;
        s.avg_time_s += r.time_s;
        ++s.runs;
    }
    std::vector<GroupSummary> out;
    for (auto& [key, s] : acc) {
        if (s.runs > 0) {
            s.avg_loss /= s.runs;
            s.avg_time_s /= s.runs;
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string report_csv(const BenchReport& report) {
    std::ostringstream o;
    o << "algorithm,group_span,group_complexity,signal_seed,run,loss,time_s\n";
    char buf[64];
    for (const BenchRow& r : report.rows) {
        o << r.algorithm << "," << r.group_span << "," << r.group_complexity << ","
          << r.signal_seed << "," << r.run << ",";
        if (r.failed) {
            o << "failed,failed\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%.12g,%.6g", r.loss, r.time_s);
        o << buf << "\n";
    }
    return o.str();
}

std::string summary_table(const std::vector<GroupSummary>& summaries) {
    // rows: avg loss then avg time, grouped by span/complexity; columns: algorithms
    std::vector<std::string> algs;
    std::vector<std::pair<std::string, std::string>> groups;
    for (const auto& s : summaries) {
        if (std::find(algs.begin(), algs.end(), s.algorithm) == algs.end())
            algs.push_back(s.algorithm);
        const auto g = std::make_pair(s.group_span, s.group_complexity);
        if (std::find(groups.begin(), groups.end(), g) == groups.end())
            groups.push_back(g);
    }
    auto find = [&](const std::string& sp, const std::string& cx,
                    const std::string& alg) -> const GroupSummary* {
        for (const auto& s : summaries)
            if (s.group_span == sp && s.group_complexity == cx &&
                s.algorithm == alg)
                return &s;
        return nullptr;
    };

    std::ostringstream o;
    char buf[64];
    o << "indicator   span    complexity";
    for (const auto& a : algs) {
        std::snprintf(buf, sizeof buf, " %10s", a.c_str());
        o << buf;
    }
    o << "\n";
    for (const char* indicator : {"avg_loss", "avg_time_s"}) {
        for (const auto& [sp, cx] : groups) {
            std::snprintf(buf, sizeof buf, "%-11s %-7s %-10s", indicator,
                          sp.c_str(), cx.c_str());
            o << buf;
            for (const auto& a : algs) {
                const GroupSummary* s = find(sp, cx, a);
                if (!s || s->runs == 0) {
                    o << "          -";
                } else {
                    std::snprintf(
                        buf, sizeof buf, " %10.4f",
                        std::string(indicator) == "avg_loss" ? s->avg_loss
                                                             : s->avg_time_s);
                    o << buf;
                }
            }
            o << "\n";
        }
    }
    return o.str();
}

}  // namespace astf::bench
