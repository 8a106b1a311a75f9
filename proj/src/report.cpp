#include "metapool/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "metapool/errors.hpp"
#include "metapool/special.hpp"

namespace metapool {

std::vector<ForestRow> build_forest(const std::vector<FittedSummary>& summaries,
                                    const std::vector<PoolResult>& results, double alpha) {
    const double z = normal_quantile(1.0 - alpha / 2.0);
    std::vector<ForestRow> rows;
    rows.reserve(summaries.size() + 2 * results.size());
    for (const auto& s : summaries) {
        ForestRow r;
        r.label = s.model_id;
        r.center = s.y_hat;
        r.low = s.y_hat - z * s.se_hat;
        r.high = s.y_hat + z * s.se_hat;
        if (is_nonnegative(s.measure) && r.low < 0.0) r.low = 0.0;
        r.kind = ForestRow::Kind::Model;
        rows.push_back(std::move(r));
    }
    for (const auto& p : results) {
        std::string base = p.method == IntervalMethod::Wald ? "Combined (REML)"
                                                            : "Combined (REML+KNHA)";
        if (p.weighting == Weighting::InverseVariance) {
            base.insert(base.size() - 1, ", inverse-variance");
        }
        rows.push_back({base, p.theta_hat, p.ci_low, p.ci_high, ForestRow::Kind::CombinedCI});
        rows.push_back({base + " CR", p.theta_hat, p.cr_low, p.cr_high, ForestRow::Kind::CombinedCR});
    }
    return rows;
}

namespace {

std::string fmt(double x, const char* spec = "%.2f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Fixed layout constants; tests invert the x mapping from these proportions.
constexpr double kWidth = 900.0;
constexpr double kLabelGutter = 190.0;
constexpr double kPlotRight = 870.0;
constexpr double kTopMargin = 50.0;
constexpr double kRowHeight = 28.0;
constexpr double kAxisHeight = 40.0;

} // namespace

std::string render_svg(const std::vector<ForestRow>& rows, const std::string& title,
                       std::optional<double> reference_line) {
    if (rows.empty()) throw EmptyRowsError("render_svg: no rows");

    double dmin = rows.front().low, dmax = rows.front().high;
    for (const auto& r : rows) {
        dmin = std::min(dmin, r.low);
        dmax = std::max(dmax, r.high);
    }
    if (reference_line) {
        dmin = std::min(dmin, *reference_line);
        dmax = std::max(dmax, *reference_line);
    }
    if (dmax <= dmin) {
        const double pad = std::max(1.0, std::fabs(dmin) * 0.1);
        dmin -= pad;
        dmax += pad;
    }
    const double pad = 0.05 * (dmax - dmin);
    dmin -= pad;
    dmax += pad;

    const double height = kTopMargin + rows.size() * kRowHeight + kAxisHeight;
    auto px = [&](double v) {
        return kLabelGutter + (v - dmin) / (dmax - dmin) * (kPlotRight - kLabelGutter);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth, "%.0f")
        << "\" height=\"" << fmt(height, "%.0f") << "\" viewBox=\"0 0 " << fmt(kWidth, "%.0f") << " "
        << fmt(height, "%.0f") << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"10\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
        << xml_escape(title) << "</text>\n";

    if (reference_line) {
        svg << "<line class=\"refline\" x1=\"" << fmt(px(*reference_line)) << "\" y1=\""
            << fmt(kTopMargin) << "\" x2=\"" << fmt(px(*reference_line)) << "\" y2=\""
            << fmt(height - kAxisHeight) << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ForestRow& r = rows[i];
        const double y = kTopMargin + i * kRowHeight + kRowHeight / 2.0;
        svg << "<text x=\"10\" y=\"" << fmt(y + 4) << "\" font-family=\"sans-serif\" "
            << "font-size=\"12\">" << xml_escape(r.label) << "</text>\n";
        const double x1 = px(r.low);
        const double x2 = px(r.high);
        const double xc = px(r.center);
        switch (r.kind) {
        case ForestRow::Kind::Model:
            svg << "<line class=\"interval model\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y)
                << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y) << "\" stroke=\"#1f3f77\" "
                << "stroke-width=\"1.5\"/>\n"
                << "<circle cx=\"" << fmt(xc) << "\" cy=\"" << fmt(y)
                << "\" r=\"3\" fill=\"#1f3f77\"/>\n";
            break;
        case ForestRow::Kind::CombinedCI:
            svg << "<rect class=\"interval ci\" x=\"" << fmt(x1) << "\" y=\"" << fmt(y - 6)
                << "\" width=\"" << fmt(x2 - x1) << "\" height=\"12\" fill=\"#b03030\" "
                << "fill-opacity=\"0.35\"/>\n"
                << "<line x1=\"" << fmt(xc) << "\" y1=\"" << fmt(y - 6) << "\" x2=\"" << fmt(xc)
                << "\" y2=\"" << fmt(y + 6) << "\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n";
            break;
        case ForestRow::Kind::CombinedCR:
            svg << "<line class=\"interval cr\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y)
                << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y) << "\" stroke=\"#b03030\" "
                << "stroke-width=\"1.5\"/>\n"
                << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y - 5) << "\" x2=\"" << fmt(x1)
                << "\" y2=\"" << fmt(y + 5) << "\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n"
                << "<line x1=\"" << fmt(x2) << "\" y1=\"" << fmt(y - 5) << "\" x2=\"" << fmt(x2)
                << "\" y2=\"" << fmt(y + 5) << "\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n";
            break;
        }
    }

    // axis with five evenly spaced ticks
    const double ax_y = height - kAxisHeight + 10.0;
    svg << "<line x1=\"" << fmt(kLabelGutter) << "\" y1=\"" << fmt(ax_y) << "\" x2=\""
        << fmt(kPlotRight) << "\" y2=\"" << fmt(ax_y) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = dmin + (dmax - dmin) * t / 4.0;
        svg << "<line x1=\"" << fmt(px(v)) << "\" y1=\"" << fmt(ax_y) << "\" x2=\"" << fmt(px(v))
            << "\" y2=\"" << fmt(ax_y + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fmt(px(v)) << "\" y=\"" << fmt(ax_y + 18)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << fmt(v, "%.4g") << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string echo_line(const PoolResult& r) {
    return fmt(r.theta_hat) + " (" + fmt(r.ci_low) + ", " + fmt(r.ci_high) + ") [" +
           fmt(r.cr_low) + ", " + fmt(r.cr_high) + "]";
}

namespace {

std::string full_precision(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

nlohmann::ordered_json record_json(const ResultRecord& rec) {
    nlohmann::ordered_json j;
    j["measure"] = std::string(measure_tag(rec.measure));
    j["region"] = rec.region_id;
    j["k"] = rec.pool.k;
    j["weighting"] = std::string(weighting_name(rec.pool.weighting));
    j["method"] = std::string(method_name(rec.pool.method));
    j["theta_hat"] = rec.pool.theta_hat;
    j["se"] = rec.pool.se_theta;
    j["tau2"] = rec.pool.tau2;
    j["se_tau2"] = rec.pool.se_tau2;
    j["ci"] = {rec.pool.ci_low, rec.pool.ci_high};
    j["cr"] = {rec.pool.cr_low, rec.pool.cr_high};
    j["clamped_low"] = rec.pool.clamped_low;
    if (rec.reliability) {
        nlohmann::ordered_json rel;
        rel["score"] = rec.reliability->score;
        rel["death_band"] = rec.reliability->death_band;
        rel["heterogeneity_band"] = rec.reliability->heterogeneity_band;
        rel["death_proxy"] = rec.reliability->death_proxy;
        rel["heterogeneity"] = rec.reliability->heterogeneity;
        j["reliability"] = std::move(rel);
    } else {
        j["reliability"] = nullptr;
    }
    j["echo"] = echo_line(rec.pool);
    return j;
}

} // namespace

std::string serialize_json(const std::vector<ResultRecord>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : results) arr.push_back(record_json(rec));
    return arr.dump(2) + "\n";
}

std::string serialize_csv(const std::vector<ResultRecord>& results) {
    std::ostringstream csv;
    csv << "measure,region,k,weighting,method,theta_hat,se,tau2,se_tau2,"
           "ci_low,ci_high,cr_low,cr_high,clamped_low,reliability,echo\r\n";
    for (const auto& rec : results) {
        csv << csv_quote(std::string(measure_tag(rec.measure))) << ','
            << csv_quote(rec.region_id) << ',' << rec.pool.k << ','
            << weighting_name(rec.pool.weighting) << ',' << method_name(rec.pool.method) << ','
            << full_precision(rec.pool.theta_hat) << ',' << full_precision(rec.pool.se_theta)
            << ',' << full_precision(rec.pool.tau2) << ',' << full_precision(rec.pool.se_tau2)
            << ',' << full_precision(rec.pool.ci_low) << ',' << full_precision(rec.pool.ci_high)
            << ',' << full_precision(rec.pool.cr_low) << ',' << full_precision(rec.pool.cr_high)
            << ',' << (rec.pool.clamped_low ? "true" : "false") << ','
            << (rec.reliability ? std::to_string(rec.reliability->score) : std::string()) << ','
            << csv_quote(echo_line(rec.pool)) << "\r\n";
    }
    return csv.str();
}

} // namespace metapool
