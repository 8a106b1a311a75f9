#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "metapool/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"metapool: pool per-model epidemic estimates (R(t), r, I) across candidate "
                 "models with an equally weighted random-effects meta-analysis"};

    metapool::RunConfig cfg;
    if (const char* env = std::getenv("METAPOOL_SEED")) {
        cfg.seed = std::strtoull(env, nullptr, 10);
    }

    std::string weights = "equal";
    std::string ci = "both";

    app.add_option("input", cfg.input_path,
                   "Quantile CSV (measure,region,model,q5,q25,q50,q75,q95)")
        ->required();
    app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Interval level parameter (0.10 = 90% intervals)")
        ->check(CLI::Range(1e-6, 1.0 - 1e-6))
        ->capture_default_str();
    app.add_option("--weights", weights, "Point-estimate weights: equal | invvar")
        ->check(CLI::IsMember({"equal", "invvar"}))
        ->capture_default_str();
    app.add_option("--ci", ci, "Interval method: wald | knha | both")
        ->check(CLI::IsMember({"wald", "knha", "both"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed,
                   "Seed for the gamma-fit swarm (overrides METAPOOL_SEED)");
    app.add_option("--skew-threshold", cfg.skew_threshold,
                   "|SK| above this uses the gamma fit")
        ->capture_default_str();
    app.add_flag("--knha-truncate", cfg.knha_truncate,
                 "Floor the Knapp-Hartung scale factor at 1");
    app.add_option("--signals", cfg.signals_path,
                   "Region signals CSV (region,kind,value) for reliability scores");
    app.add_flag("--strict", cfg.strict,
                 "Nonzero exit on skipped groups (1) or gamma-fit failures (3)");

    CLI11_PARSE(app, argc, argv);

    cfg.weighting = weights == "equal" ? metapool::Weighting::Equal
                                       : metapool::Weighting::InverseVariance;
    cfg.method = ci == "wald"   ? metapool::MethodChoice::Wald
                 : ci == "knha" ? metapool::MethodChoice::KNHA
                                : metapool::MethodChoice::Both;

    return metapool::run(cfg, std::cout, std::cerr);
}
