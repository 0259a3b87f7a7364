#include "circpow/serialize.hpp"

#include <sstream>

namespace circpow {

using nlohmann::json;

json to_json(const Spectrum& spectrum)
{
    json out = json::array();
    for (const auto& e : spectrum) out.push_back({{"r", e.r}, {"value", e.value}});
    return out;
}

json to_json(const GroupedSpectrum& grouped)
{
    json groups = json::array();
    for (const auto& g : grouped.groups) {
        groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}, {"indices", g.indices}});
    }
    json out = {{"groups", std::move(groups)}, {"ill_conditioned", grouped.ill_conditioned}};
    if (!grouped.warnings.empty()) out["warnings"] = grouped.warnings;
    return out;
}

json to_json(const IntegerEigReport& report)
{
    return {{"eigenvalue", report.eigenvalue},
            {"multiplicity", report.multiplicity},
            {"case", to_string(report.case_tag)},
            {"params",
             {{"g", report.params.g},
              {"h", report.params.h},
              {"ord2_n", report.params.ord2_n},
              {"ord2_d", report.params.ord2_d},
              {"ord2_d1", report.params.ord2_d1}}}};
}

json to_json(const BasisVector& v)
{
    return {{"family", to_string(v.family)}, {"k", v.k}, {"period", v.period}, {"verified", v.verified},
            {"entries", v.entries}};
}

json to_json(const EigenbasisReport& report)
{
    json vectors = json::array();
    for (const auto& v : report.vectors) vectors.push_back(to_json(v));
    return {{"eigenvalue", report.eigenvalue},
            {"predicted_multiplicity", report.predicted_multiplicity},
            {"rank", report.rank},
            {"candidates", report.candidates},
            {"reduced", report.reduced},
            {"orthogonal", report.orthogonal},
            {"verified", report.all_verified()},
            {"simply_structured", report.simply_structured()},
            {"vectors", std::move(vectors)}};
}

json to_json(const ScanRecord& record, bool include_timing)
{
    json checks = json::object();
    for (const auto& [key, result] : record.checks) {
        checks[key] = {{"outcome", to_string(result.outcome)}, {"payload", result.payload}};
    }
    json out = {{"type", "record"}, {"n", record.n}, {"d", record.d}, {"checks", std::move(checks)}};
    if (include_timing) {
        out["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(record.elapsed).count();
    }
    return out;
}

json to_json(const ScanSummary& summary)
{
    json tallies = json::object();
    for (const auto& [key, t] : summary.tallies) {
        json failures = json::array();
        for (const auto& [n, d] : t.failures) failures.push_back({n, d});
        tallies[key] = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}, {"failures", std::move(failures)}};
        if (is_conjecture_key(key)) {
            tallies[key]["finding"] = t.fail == 0 ? "no counterexample in range" : "counterexample found";
        }
    }
    json out = {{"type", "summary"}, {"tallies", std::move(tallies)}, {"theorem_failure", summary.theorem_failure()}};
    if (summary.tallies.contains(check_key::integrality)) {
        json cells = json::array();
        for (const auto& [n, d] : summary.integral_cells) cells.push_back({n, d});
        out["integral_cells"] = std::move(cells);
    }
    if (summary.tallies.contains(check_key::mult_two)) {
        json relaxed = json::object();
        json sharp = json::object();
        for (const auto& [d, n] : summary.first_relaxed_hit) relaxed[std::to_string(d)] = n;
        for (const auto& [d, n] : summary.first_sharp_hit) sharp[std::to_string(d)] = n;
        out["first_window_hit"] = {{"relaxed", std::move(relaxed)}, {"sharp", std::move(sharp)}};
    }
    if (summary.tallies.contains(check_key::path_c1)) {
        json found = json::array();
        for (const auto& [k, cell] : summary.path_integer_eigenvalues) {
            found.push_back({{"eigenvalue", k}, {"first", {cell.first, cell.second}}});
        }
        out["path_integer_eigenvalues"] = std::move(found);
    }
    return out;
}

json envelope(std::string_view command, json params, json result)
{
    return {{"command", command},
            {"params", std::move(params)},
            {"result", std::move(result)},
            {"version", kToolVersion},
            {"schema", kSchemaVersion}};
}

std::string basis_table(const EigenbasisReport& report)
{
    std::ostringstream out;
    for (const auto& v : report.vectors) {
        out << '(';
        for (std::size_t i = 0; i < v.entries.size(); ++i) {
            if (i != 0) out << ", ";
            out << (v.entries[i] < 0 ? "" : " ") << v.entries[i];
        }
        out << ")  " << to_string(v.family) << '_' << v.k << '\n';
    }
    return out.str();
}

std::string scan_csv_rows(const ScanRecord& record)
{
    std::ostringstream out;
    for (const auto& [key, result] : record.checks) {
        out << record.n << ',' << record.d << ',' << key << ',' << to_string(result.outcome) << '\n';
    }
    return out.str();
}

} // namespace circpow
