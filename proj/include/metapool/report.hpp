#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metapool/meta.hpp"
#include "metapool/reliability.hpp"
#include "metapool/types.hpp"

namespace metapool {

/// One horizontal interval of a forest plot.
struct ForestRow {
    enum class Kind { Model, CombinedCI, CombinedCR };
    std::string label;
    double center = 0.0;
    double low = 0.0;
    double high = 0.0;
    Kind kind = Kind::Model;
};

/// One pooled result with its context, as serialized to JSON/CSV.
struct ResultRecord {
    OutcomeMeasure measure = OutcomeMeasure::ReproductionNumber;
    std::string region_id;
    PoolResult pool;
    std::optional<ReliabilityScore> reliability;
};

/// Builds forest rows: one Model row per summary (center y_hat, bounds
/// y_hat +/- z(1-alpha/2)*se_hat, lower bound clamped at 0 for count measures)
/// followed by a CombinedCI and a CombinedCR row per pooled result.
std::vector<ForestRow> build_forest(const std::vector<FittedSummary>& summaries,
                                    const std::vector<PoolResult>& results, double alpha);

/// Renders rows as a standalone SVG 1.1 document. Byte-deterministic for
/// identical input. `reference_line` draws a dashed vertical rule (1.0 is the
/// natural choice for R(t), 0.0 for r). Throws EmptyRowsError.
std::string render_svg(const std::vector<ForestRow>& rows, const std::string& title,
                       std::optional<double> reference_line = std::nullopt);

/// Appendix-style 2-dp echo: "0.80 (0.74, 0.86) [0.73, 0.87]".
std::string echo_line(const PoolResult& r);

/// Canonical JSON (array of objects, fixed key order, UTF-8).
std::string serialize_json(const std::vector<ResultRecord>& results);

/// CSV with the same columns, RFC-4180 quoting, full-precision numbers.
std::string serialize_csv(const std::vector<ResultRecord>& results);

} // namespace metapool
