#pragma once

#include "circpow/eigenbasis.hpp"
#include "circpow/integer_eigs.hpp"
#include "circpow/spectrum.hpp"
#include "circpow/survey.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace circpow {

inline constexpr std::string_view kToolVersion = "1.0.0";
/// Bumped whenever a field of the JSON output changes meaning.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Spectrum& spectrum);
nlohmann::json to_json(const GroupedSpectrum& grouped);
nlohmann::json to_json(const IntegerEigReport& report);
nlohmann::json to_json(const BasisVector& v);
nlohmann::json to_json(const EigenbasisReport& report);
nlohmann::json to_json(const ScanRecord& record, bool include_timing = false);
nlohmann::json to_json(const ScanSummary& summary);

/// {"command", "params", "result", "version", "schema"}.
nlohmann::json envelope(std::string_view command, nlohmann::json params, nlohmann::json result);

/// One line per vector, entries right-aligned in width 2 and comma
/// separated, e.g. "( 1,  0, -1,  0)".
std::string basis_table(const EigenbasisReport& report);

/// CSV rows "n,d,check,outcome" for one record, no header.
std::string scan_csv_rows(const ScanRecord& record);
inline constexpr std::string_view kScanCsvHeader = "n,d,check,outcome";

} // namespace circpow
