#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "metapool/reliability.hpp"
#include "metapool/types.hpp"

namespace metapool {

/// Parses the quantile input CSV. Required header:
///   measure,region,model,q5,q25,q50,q75,q95
/// measure is one of R, r, I (case-sensitive). Every row is validated; all
/// offending rows are collected into a single ParseError with line numbers.
Dataset parse_input_csv(std::istream& in, const std::string& source_name = "<input>");
Dataset parse_input_csv_file(const std::string& path);

/// Parses the optional region-signals CSV. Long format, header:
///   region,kind,value
/// kind is "deaths" (daily death count, chronological) or "subareas"
/// (case count of one sub-area). Values accumulate per region in file order.
std::map<std::string, RegionSignal> parse_signals_csv(std::istream& in,
                                                      const std::string& source_name = "<signals>");
std::map<std::string, RegionSignal> parse_signals_csv_file(const std::string& path);

} // namespace metapool
