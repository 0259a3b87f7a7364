#include "commands.hpp"

#include "circpow/circulant.hpp"
#include "circpow/eigenbasis.hpp"
#include "circpow/integer_eigs.hpp"
#include "circpow/oracle.hpp"
#include "circpow/serialize.hpp"
#include "circpow/spectrum.hpp"
#include "circpow/survey.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace circpow::cli {

namespace {

using nlohmann::json;

constexpr const char* kExitCodeHelp = R"(Exit codes:
  0  success
  1  scan: a theorem-validation check failed (conjecture findings never count)
  2  usage error: bad arguments, ranges or configuration
  3  the requested circuit power is complete (spectrum still printed)
  4  basis requested for an eigenvalue the graph does not have
  5  internal error: eigensolver non-convergence or inconsistent theorem cases

Environment:
  CIRCPOW_THREADS  default worker count for `scan`
All vertex indices in output are 0-based.)";

struct SpectrumArgs {
    std::int64_t n = 0;
    std::int64_t d = 0;
    bool grouped = false;
    std::string format = "json";
    double tol = kDefaultGroupTolerance;
};

struct GraphArgs {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::string format = "json";
};

struct BasisArgs {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t lambda = 0;
    std::string format = "json";
};

struct ScanArgs {
    std::string config;
    std::string checks;
    std::string n_range;
    std::string d_range;
    unsigned threads = 0;
    std::string format = "jsonl";
    std::string out;
    bool timing = false;
    std::int64_t path_cap = 0;
};

struct FplotArgs {
    std::int64_t d = 0;
    std::int64_t samples = 9;
};

struct IntegralArgs {
    std::int64_t n = 0;
    std::vector<std::int64_t> jumps;
    std::string format = "json";
};

std::string format_value(double v)
{
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err)
{
    const CircuitPower g(a.n, a.d);
    const auto spectrum = circuit_power_spectrum(g);
    json params = {{"n", a.n}, {"d", a.d}, {"grouped", a.grouped}, {"format", a.format}, {"tol", a.tol}};
    json result = {{"graph", g.name()}, {"complete", g.complete()}};
    GroupedSpectrum grouped;
    if (a.grouped) {
        grouped = group_spectrum(spectrum, a.tol);
        result["grouped"] = to_json(grouped);
        for (const auto& w : grouped.warnings) err << "warning: " << w << '\n';
    } else {
        result["spectrum"] = to_json(spectrum);
    }
    if (g.complete()) {
        result["notice"] = g.name() + " is the complete graph K_" + std::to_string(a.n);
        err << "notice: " << result["notice"].get<std::string>() << '\n';
    }

    if (a.format == "json") {
        out << envelope("spectrum", params, result).dump() << '\n';
    } else if (a.format == "csv") {
        if (a.grouped) {
            out << "value,multiplicity\n";
            for (const auto& grp : grouped.groups) out << format_value(grp.value) << ',' << grp.multiplicity << '\n';
        } else {
            out << "r,value\n";
            for (const auto& e : spectrum) out << e.r << ',' << format_value(e.value) << '\n';
        }
    } else {
        out << g.name() << (g.complete() ? " (complete)" : "") << '\n';
        if (a.grouped) {
            for (const auto& grp : grouped.groups) {
                out << std::setw(24) << format_value(grp.value) << "  x" << grp.multiplicity << '\n';
            }
        } else {
            for (const auto& e : spectrum) out << "lambda_" << e.r << " = " << format_value(e.value) << '\n';
        }
    }
    return g.complete() ? kCompleteGraph : kOk;
}

int cmd_int_eigs(const GraphArgs& a, std::ostream& out)
{
    const CircuitPower g(a.n, a.d);
    const auto reports = integer_spectrum(g);
    if (a.format == "json") {
        json list = json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        out << envelope("int-eigs", {{"n", a.n}, {"d", a.d}, {"format", a.format}},
                        {{"graph", g.name()}, {"reports", std::move(list)}})
                   .dump()
            << '\n';
    } else {
        out << g.name() << '\n';
        out << std::setw(12) << "eigenvalue" << std::setw(14) << "multiplicity"
            << "  case (g, h, ord2 n, ord2 d, ord2 d+1)\n";
        for (const auto& r : reports) {
            out << std::setw(12) << r.eigenvalue << std::setw(14) << r.multiplicity << "  " << to_string(r.case_tag)
                << " (" << r.params.g << ", " << r.params.h << ", " << r.params.ord2_n << ", " << r.params.ord2_d
                << ", " << r.params.ord2_d1 << ")\n";
        }
    }
    return kOk;
}

int cmd_basis(const BasisArgs& a, std::ostream& out)
{
    const CircuitPower g(a.n, a.d);
    const auto report = eigenbasis(g, a.lambda);
    if (a.format == "json") {
        json result = to_json(report);
        result["graph"] = g.name();
        out << envelope("basis", {{"n", a.n}, {"d", a.d}, {"lambda", a.lambda}, {"format", a.format}}, result).dump()
            << '\n';
    } else {
        out << g.name() << ", eigenvalue " << report.eigenvalue << ": rank " << report.rank << " of predicted "
            << report.predicted_multiplicity << (report.all_verified() ? ", verified" : ", NOT verified")
            << (report.orthogonal ? ", orthogonal" : "") << (report.reduced ? ", reduced" : "") << '\n';
        out << basis_table(report);
    }
    return kOk;
}

ScanConfig scan_config(const ScanArgs& a)
{
    ScanConfig cfg;
    cfg.checks = {Check::theorems};
    if (const char* env = std::getenv(kThreadsEnv)) {
        const auto parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) cfg.threads = static_cast<unsigned>(parsed);
    }
    if (!a.config.empty()) {
        std::ifstream in(a.config);
        if (!in) throw std::invalid_argument("cannot open config " + a.config);
        const json file = json::parse(in);
        if (file.contains("n")) cfg.n_range = parse_range(file["n"].get<std::string>());
        if (file.contains("d")) cfg.d_range = parse_range(file["d"].get<std::string>());
        if (file.contains("threads")) cfg.threads = file["threads"].get<unsigned>();
        if (file.contains("path_cap")) cfg.path_n_cap = file["path_cap"].get<std::int64_t>();
        if (file.contains("checks")) {
            cfg.checks.clear();
            for (const auto& c : file["checks"]) {
                const auto parsed = parse_check(c.get<std::string>());
                if (!parsed) throw std::invalid_argument("unknown check " + c.get<std::string>());
                cfg.checks.push_back(*parsed);
            }
        }
        if (file.contains("tolerances")) {
            const auto& t = file["tolerances"];
            cfg.tol.integer = t.value("integer", cfg.tol.integer);
            cfg.tol.group = t.value("group", cfg.tol.group);
            cfg.tol.path_integer = t.value("path_integer", cfg.tol.path_integer);
        }
    }
    if (!a.checks.empty()) {
        cfg.checks.clear();
        std::stringstream list(a.checks);
        std::string name;
        while (std::getline(list, name, ',')) {
            if (name == "all") {
                cfg.checks = all_checks();
                break;
            }
            const auto parsed = parse_check(name);
            if (!parsed) throw std::invalid_argument("unknown check '" + name + "'");
            cfg.checks.push_back(*parsed);
        }
    }
    if (!a.n_range.empty()) cfg.n_range = parse_range(a.n_range);
    if (!a.d_range.empty()) cfg.d_range = parse_range(a.d_range);
    if (a.threads > 0) cfg.threads = a.threads;
    if (a.path_cap > 0) cfg.path_n_cap = a.path_cap;
    cfg.validate();
    return cfg;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err)
{
    const auto cfg = scan_config(a);
    const auto records = run_scan(cfg);
    const auto summary = summarize(records);

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw std::invalid_argument("cannot write " + a.out);
    }
    std::ostream& sink = a.out.empty() ? out : file;

    if (a.format == "csv") {
        sink << kScanCsvHeader << '\n';
        for (const auto& r : records) sink << scan_csv_rows(r);
        err << "check,pass,fail,skip\n";
        for (const auto& [key, t] : summary.tallies) {
            err << key << ',' << t.pass << ',' << t.fail << ',' << t.skip << '\n';
        }
    } else {
        for (const auto& r : records) sink << to_json(r, a.timing).dump() << '\n';
        json checks = json::array();
        for (auto c : cfg.checks) checks.push_back(to_string(c));
        json s = to_json(summary);
        s["command"] = "scan";
        s["params"] = {{"n", std::to_string(cfg.n_range.lo) + ".." + std::to_string(cfg.n_range.hi)},
                       {"checks", checks},
                       {"cells", records.size()}};
        if (cfg.d_range) s["params"]["d"] = std::to_string(cfg.d_range->lo) + ".." + std::to_string(cfg.d_range->hi);
        s["version"] = kToolVersion;
        sink << s.dump() << '\n';
    }
    return summary.theorem_failure() ? kValidationFailure : kOk;
}

int cmd_fplot(const FplotArgs& a, std::ostream& out)
{
    if (a.samples < 2) throw std::invalid_argument("--samples must be at least 2");
    const DirichletKernel kernel(a.d);
    const auto bound = mult_two_bound(a.d);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    out << "# d=" << a.d << '\n';
    out << "# q=" << format_value(kernel.q()) << '\n';
    out << "# sharp_bound=" << format_value(bound.sharp) << '\n';
    out << "# relaxed_bound=" << format_value(bound.relaxed) << '\n';
    out << "phi,f_d\n";
    const auto last = a.samples - 1;
    for (std::int64_t i = 0; i <= last; ++i) {
        double phi;
        if (i == last) {
            phi = two_pi;
        } else if (2 * i == last) {
            phi = std::numbers::pi;
        } else {
            phi = two_pi * static_cast<double>(i) / static_cast<double>(last);
        }
        out << format_value(phi) << ',' << format_value(kernel(phi)) << '\n';
    }
    return kOk;
}

int cmd_integral(const IntegralArgs& a, std::ostream& out)
{
    const CirculantGraph g(a.n, a.jumps);
    const auto verdict = is_integral(g);
    json result = {{"integral", verdict.integral}};
    if (verdict.violating_class) {
        result["witness"] = {{"gcd", verdict.violating_class->divisor},
                             {"class", verdict.violating_class->members},
                             {"missing", verdict.violating_class->missing}};
    }
    if (a.format == "json") {
        out << envelope("integral", {{"n", a.n}, {"jumps", a.jumps}, {"format", a.format}}, result).dump() << '\n';
    } else {
        out << (verdict.integral ? "integral" : "not integral");
        if (verdict.violating_class) {
            out << ": gcd class " << verdict.violating_class->divisor << " misses "
                << verdict.violating_class->missing;
        }
        out << '\n';
    }
    return kOk;
}

int cmd_path_spectrum(const GraphArgs& a, std::ostream& out)
{
    const PathPower p(a.n, a.d);
    JacobiOptions opts;
    opts.compute_vectors = false;
    const auto dec = path_power_spectrum(p, opts);
    const auto grouped = group_values(dec.values, 1e-6);
    if (a.format == "json") {
        out << envelope("path-spectrum", {{"n", a.n}, {"d", a.d}, {"format", a.format}},
                        {{"graph", p.name()}, {"values", dec.values}, {"grouped", to_json(grouped)}})
                   .dump()
            << '\n';
    } else {
        out << p.name() << '\n';
        for (const auto& grp : grouped.groups) {
            out << std::setw(24) << format_value(grp.value) << "  x" << grp.multiplicity << '\n';
        }
    }
    return kOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectra, integer eigenvalues and {-1,0,1} eigenspace bases of circuit distance powers C_n^(d)",
                 "circpow"};
    app.footer(kExitCodeHelp);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    const std::vector<std::string> formats = {"json", "csv", "text"};
    const std::vector<std::string> json_text = {"json", "text"};

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form eigenvalues lambda_0..lambda_{n-1} of C_n^(d)");
    spectrum->add_option("n", spectrum_args.n, "number of vertices (>= 3)")->required();
    spectrum->add_option("d", spectrum_args.d, "distance power (>= 1)")->required();
    spectrum->add_flag("--grouped", spectrum_args.grouped, "group equal eigenvalues into multiplicities");
    spectrum->add_option("--format", spectrum_args.format)->check(CLI::IsMember(formats));
    spectrum->add_option("--tol", spectrum_args.tol, "grouping tolerance")->check(CLI::PositiveNumber);

    GraphArgs int_args;
    auto* int_eigs = app.add_subcommand("int-eigs", "Multiplicities of the integer eigenvalue candidates");
    int_eigs->add_option("n", int_args.n)->required();
    int_eigs->add_option("d", int_args.d)->required();
    int_eigs->add_option("--format", int_args.format)->check(CLI::IsMember(json_text));

    BasisArgs basis_args;
    auto* basis = app.add_subcommand("basis", "Verified {-1,0,1} eigenspace basis for an integer eigenvalue");
    basis->add_option("n", basis_args.n)->required();
    basis->add_option("d", basis_args.d)->required();
    basis->add_option("lambda", basis_args.lambda)->required()->allow_extra_args(false);
    basis->add_option("--format", basis_args.format)->check(CLI::IsMember(json_text));

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Validate theorems and conjectures over an (n, d) grid");
    scan->add_option("--config", scan_args.config, "JSON config file; flags override it");
    scan->add_option("--checks", scan_args.checks,
                     "comma list of theorems, odd-multiplicity, mult-two, integrality, path-conjectures, or all");
    scan->add_option("--n", scan_args.n_range, "n range a..b");
    scan->add_option("--d", scan_args.d_range, "d range a..b (default 1..n-1)");
    scan->add_option("--threads", scan_args.threads, "worker count");
    scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"jsonl", "csv"}));
    scan->add_option("--out", scan_args.out, "write records to a file instead of stdout");
    scan->add_flag("--timing", scan_args.timing, "include per-cell elapsed time");
    scan->add_option("--path-cap", scan_args.path_cap, "largest n for path-power checks");

    FplotArgs fplot_args;
    auto* fplot = app.add_subcommand("fplot", "CSV samples of f_d(phi) on [0, 2 pi] with the bound lines");
    fplot->add_option("d", fplot_args.d)->required();
    fplot->add_option("--samples", fplot_args.samples, "number of samples (>= 2)");

    IntegralArgs integral_args;
    auto* integral = app.add_subcommand("integral", "So's integrality criterion for a circulant graph");
    integral->add_option("n", integral_args.n)->required();
    integral->add_option("jumps", integral_args.jumps, "symmetric jump set")->required();
    integral->add_option("--format", integral_args.format)->check(CLI::IsMember(json_text));

    GraphArgs path_args;
    auto* path = app.add_subcommand("path-spectrum", "Numeric spectrum of the path power P_n^(d)");
    path->add_option("n", path_args.n)->required();
    path->add_option("d", path_args.d)->required();
    path->add_option("--format", path_args.format)->check(CLI::IsMember(json_text));

    std::vector<const char*> argv;
    argv.push_back("circpow");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*spectrum) return cmd_spectrum(spectrum_args, out, err);
        if (*int_eigs) return cmd_int_eigs(int_args, out);
        if (*basis) return cmd_basis(basis_args, out);
        if (*scan) return cmd_scan(scan_args, out, err);
        if (*fplot) return cmd_fplot(fplot_args, out);
        if (*integral) return cmd_integral(integral_args, out);
        if (*path) return cmd_path_spectrum(path_args, out);
    } catch (const CompleteGraphError& e) {
        err << "error: " << e.what() << '\n';
        return kCompleteGraph;
    } catch (const EigenvalueAbsentError& e) {
        err << "error: eigenvalue absent: " << e.what() << '\n';
        return kEigenvalueAbsent;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::logic_error& e) {
        // domain_error, invalid_argument and length_error are usage problems.
        if (dynamic_cast<const std::domain_error*>(&e) != nullptr
            || dynamic_cast<const std::invalid_argument*>(&e) != nullptr
            || dynamic_cast<const std::length_error*>(&e) != nullptr) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const nlohmann::json::exception& e) {
        err << "error: bad config: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace circpow::cli
