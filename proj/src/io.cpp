#include "metapool/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "metapool/errors.hpp"

namespace metapool {

namespace {

// One CSV line -> fields. Quoted fields may contain commas and doubled quotes;
// embedded newlines are not supported by this line-oriented reader.
std::vector<std::string> split_csv(const std::string& line, int lineno,
                                   std::vector<std::string>& diags) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) {
        diags.push_back("line " + std::to_string(lineno) + ": unterminated quoted field");
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(const std::string& source, const std::vector<std::string>& diags) {
    std::ostringstream os;
    os << source << ": " << diags.size() << " error(s)";
    for (const auto& d : diags) os << "\n  " << d;
    throw ParseError(os.str());
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

} // namespace

Dataset parse_input_csv(std::istream& in, const std::string& source_name) {
    static const std::vector<std::string> expected = {"measure", "region", "model",
                                                      "q5", "q25", "q50", "q75", "q95"};
    std::vector<std::string> diags;
    std::string line;
    if (!read_line(in, line)) {
        fail(source_name, {"line 1: missing header"});
    }
    const auto header = split_csv(line, 1, diags);
    if (header.size() != expected.size()) {
        diags.push_back("line 1: expected 8 columns, found " + std::to_string(header.size()));
    } else {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (trim(header[i]) != expected[i]) {
                diags.push_back("line 1: expected column '" + expected[i] + "', found '" +
                                trim(header[i]) + "'");
            }
        }
    }
    if (!diags.empty()) fail(source_name, diags);

    Dataset ds;
    int lineno = 1;
    while (read_line(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line, lineno, diags);
        if (fields.size() != expected.size()) {
            diags.push_back("line " + std::to_string(lineno) + ": expected 8 fields, found " +
                            std::to_string(fields.size()));
            continue;
        }
        std::array<double, 5> q{};
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            if (!parse_double(fields[3 + i], q[i])) {
                diags.push_back("line " + std::to_string(lineno) + ": column '" + expected[3 + i] +
                                "' is not a number: '" + trim(fields[3 + i]) + "'");
                ok = false;
            }
        }
        if (!ok) continue;
        try {
            const OutcomeMeasure m = parse_measure(trim(fields[0]));
            ds.add(validate_quantiles(q, m, trim(fields[2]), trim(fields[1])));
        } catch (const Error& e) {
            diags.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!diags.empty()) fail(source_name, diags);
    return ds;
}

Dataset parse_input_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_input_csv(in, path);
}

std::map<std::string, RegionSignal> parse_signals_csv(std::istream& in,
                                                      const std::string& source_name) {
    std::vector<std::string> diags;
    std::string line;
    if (!read_line(in, line)) fail(source_name, {"line 1: missing header"});
    {
        const auto header = split_csv(line, 1, diags);
        if (header.size() != 3 || trim(header[0]) != "region" || trim(header[1]) != "kind" ||
            trim(header[2]) != "value") {
            fail(source_name, {"line 1: expected header 'region,kind,value'"});
        }
    }
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> acc;
    int lineno = 1;
    while (read_line(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line, lineno, diags);
        if (fields.size() != 3) {
            diags.push_back("line " + std::to_string(lineno) + ": expected 3 fields");
            continue;
        }
        double value = 0.0;
        if (!parse_double(fields[2], value) || value < 0.0) {
            diags.push_back("line " + std::to_string(lineno) +
                            ": 'value' must be a nonnegative number");
            continue;
        }
        const std::string region = trim(fields[0]);
        const std::string kind = trim(fields[1]);
        if (kind == "deaths") {
            acc[region].first.push_back(value);
        } else if (kind == "subareas") {
            acc[region].second.push_back(value);
        } else {
            diags.push_back("line " + std::to_string(lineno) + ": unknown kind '" + kind +
                            "' (expected 'deaths' or 'subareas')");
        }
    }
    if (!diags.empty()) fail(source_name, diags);

    std::map<std::string, RegionSignal> out;
    for (auto& [region, vecs] : acc) {
        RegionSignal sig;
        sig.region_id = region;
        sig.daily_deaths = Eigen::Map<const Eigen::ArrayXd>(vecs.first.data(),
                                                            static_cast<Eigen::Index>(vecs.first.size()));
        sig.subarea_cases = Eigen::Map<const Eigen::ArrayXd>(
            vecs.second.data(), static_cast<Eigen::Index>(vecs.second.size()));
        out.emplace(region, std::move(sig));
    }
    return out;
}

std::map<std::string, RegionSignal> parse_signals_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_signals_csv(in, path);
}

} // namespace metapool
