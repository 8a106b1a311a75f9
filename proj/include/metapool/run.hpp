#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "metapool/meta.hpp"

namespace metapool {

/// Which confidence interval constructions to produce per group.
enum class MethodChoice { Wald, KNHA, Both };

/// Full pipeline configuration, one-to-one with the CLI flags.
struct RunConfig {
    std::string input_path;
    std::string signals_path; ///< optional; empty disables reliability scoring
    std::string out_dir = "metapool_out";
    double alpha = 0.10;
    Weighting weighting = Weighting::Equal;
    MethodChoice method = MethodChoice::Both;
    std::uint64_t seed = 0;
    double skew_threshold = 0.5;
    bool knha_truncate = false;
    bool strict = false;
};

/// Runs the pipeline: parse, group by (measure, region), fit summaries, pool
/// under each requested method, attach reliability scores when signals are
/// given, and write <measure>_<region>.{json,csv,svg} under cfg.out_dir.
/// Groups are computed in parallel; files are written sequentially in
/// deterministic order, so identical inputs and seed give a byte-identical
/// output tree.
///
/// Exit status: 0 on success (skipped small groups included), 1 when --strict
/// and a group was skipped, 2 on parse/validation failure, 3 when --strict and
/// a gamma fit failed.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace metapool
