#include "metapool/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "metapool/errors.hpp"
#include "metapool/io.hpp"
#include "metapool/prep.hpp"
#include "metapool/report.hpp"

namespace metapool {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Scheduling-independent per-record seed.
std::uint64_t record_seed(std::uint64_t base, const QuantileSet& q) {
    std::string key(measure_tag(q.measure));
    key += '\x1f';
    key += q.region_id;
    key += '\x1f';
    key += q.model_id;
    return splitmix64(base ^ fnv1a(key));
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
    }
    return out.empty() ? std::string("_") : out;
}

std::string measure_display(OutcomeMeasure m) {
    switch (m) {
    case OutcomeMeasure::ReproductionNumber: return "R(t)";
    case OutcomeMeasure::GrowthRate: return "r";
    case OutcomeMeasure::DailyInfections: return "I";
    }
    return "?";
}

std::optional<double> reference_line(OutcomeMeasure m) {
    switch (m) {
    case OutcomeMeasure::ReproductionNumber: return 1.0;
    case OutcomeMeasure::GrowthRate: return 0.0;
    case OutcomeMeasure::DailyInfections: return std::nullopt;
    }
    return std::nullopt;
}

struct GroupOutput {
    OutcomeMeasure measure = OutcomeMeasure::ReproductionNumber;
    std::string region;
    std::vector<ResultRecord> records;
    std::string svg;
    std::vector<std::string> notes;
    bool skipped = false;
    bool gamma_failed = false;
};

GroupOutput process_group(const Dataset& ds, OutcomeMeasure measure, const std::string& region,
                          const std::set<std::string>& roster,
                          const std::map<std::string, RegionSignal>& signals,
                          const RunConfig& cfg) {
    GroupOutput g;
    g.measure = measure;
    g.region = region;
    const std::vector<QuantileSet> group = ds.group_for_pooling(measure, region);

    for (const auto& model : roster) {
        const bool present = std::any_of(group.begin(), group.end(),
                                         [&](const QuantileSet& q) { return q.model_id == model; });
        if (!present) g.notes.push_back("no estimates from " + model);
    }
    if (group.size() < 2) {
        g.skipped = true;
        g.notes.push_back("skipped: only " + std::to_string(group.size()) + " model(s) reported");
        return g;
    }

    PrepConfig prep;
    prep.alpha = cfg.alpha;
    prep.skew_threshold = cfg.skew_threshold;
    std::vector<FittedSummary> summaries;
    summaries.reserve(group.size());
    for (const auto& q : group) {
        prep.gamma_fit.seed = record_seed(cfg.seed, q);
        try {
            summaries.push_back(fit_summary(q, prep));
        } catch (const GammaFitError& e) {
            g.gamma_failed = true;
            g.notes.push_back(q.model_id + ": " + e.what() +
                              (cfg.strict ? "" : "; falling back to the normal path"));
            if (cfg.strict) return g;
            FittedSummary s;
            s.model_id = q.model_id;
            s.region_id = q.region_id;
            s.measure = q.measure;
            s.se_star = conservative_se(q, prep.alpha);
            s.sk = bowley_skewness(q);
            s.path = FitPath::Normal;
            s.y_hat = q.q50();
            s.se_hat = s.se_star;
            summaries.push_back(std::move(s));
        }
    }

    std::vector<IntervalMethod> methods;
    if (cfg.method == MethodChoice::Wald || cfg.method == MethodChoice::Both) {
        methods.push_back(IntervalMethod::Wald);
    }
    if (cfg.method == MethodChoice::KNHA || cfg.method == MethodChoice::Both) {
        methods.push_back(IntervalMethod::KNHA);
    }

    std::optional<ReliabilityScore> rel;
    if (auto it = signals.find(region); it != signals.end()) {
        rel = reliability_score(it->second, ReliabilityConfig{});
    }

    std::vector<PoolResult> pools;
    for (IntervalMethod m : methods) {
        PoolConfig pc;
        pc.weighting = cfg.weighting;
        pc.method = m;
        pc.alpha = cfg.alpha;
        pc.knha_truncate = cfg.knha_truncate;
        try {
            RegionCombination comb = combine_region(summaries, pc);
            for (const auto& fm : comb.floored_models) {
                g.notes.push_back(fm + ": degenerate (zero spread), variance floored");
            }
            pools.push_back(comb.result);
            g.records.push_back({measure, region, comb.result, rel});
        } catch (const TooFewModelsError&) {
            g.skipped = true;
            g.notes.push_back("skipped: fewer than 2 usable summaries");
            return g;
        }
    }

    const std::string title = measure_display(measure) + " - " + region;
    g.svg = render_svg(build_forest(summaries, pools, cfg.alpha), title, reference_line(measure));
    return g;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Dataset ds;
    std::map<std::string, RegionSignal> signals;
    try {
        ds = parse_input_csv_file(cfg.input_path);
        if (!cfg.signals_path.empty()) signals = parse_signals_csv_file(cfg.signals_path);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    // Per-measure model roster, used to report silently absent models.
    std::map<OutcomeMeasure, std::set<std::string>> rosters;
    for (const auto& r : ds.records()) rosters[r.measure].insert(r.model_id);

    const auto keys = ds.group_keys();
    std::vector<GroupOutput> outputs(keys.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(keys.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1)) {
                const auto& [measure, region] = keys[i];
                outputs[i] = process_group(ds, measure, region, rosters[measure], signals, cfg);
            }
        });
    }
    for (auto& t : pool) t.join();

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) {
        err << "cannot create output directory " << cfg.out_dir << ": " << ec.message() << "\n";
        return 2;
    }

    bool any_skipped = false;
    bool any_gamma_failed = false;
    out << "measure  region            k  weighting          method  estimate\n";
    for (const auto& g : outputs) {
        const std::string key =
            std::string(measure_tag(g.measure)) + ", " + g.region;
        for (const auto& note : g.notes) err << "note (" << key << "): " << note << "\n";
        any_gamma_failed |= g.gamma_failed;
        if (g.skipped || (cfg.strict && g.gamma_failed)) {
            any_skipped |= g.skipped;
            continue;
        }
        const std::string base =
            std::string(measure_tag(g.measure)) + "_" + sanitize(g.region);
        const std::filesystem::path dir(cfg.out_dir);
        write_file(dir / (base + ".json"), serialize_json(g.records));
        write_file(dir / (base + ".csv"), serialize_csv(g.records));
        write_file(dir / (base + ".svg"), g.svg);
        for (const auto& rec : g.records) {
            std::ostringstream line;
            line << std::left << std::setw(8) << measure_tag(g.measure) << " " << std::setw(16)
                 << g.region << " " << std::right << std::setw(2) << rec.pool.k << "  " << std::left
                 << std::setw(17) << weighting_name(rec.pool.weighting) << "  " << std::setw(6)
                 << method_name(rec.pool.method) << "  " << echo_line(rec.pool);
            if (rec.reliability) line << "  reliability=" << rec.reliability->score;
            out << line.str() << "\n";
        }
    }

    if (cfg.strict && any_gamma_failed) return 3;
    if (cfg.strict && any_skipped) return 1;
    return 0;
}

} // namespace metapool
