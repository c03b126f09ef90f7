#include "torsion/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "torsion/certificate.hpp"
#include "torsion/constructors.hpp"
#include "torsion/errors.hpp"
#include "torsion/json_io.hpp"
#include "torsion/oracle.hpp"
#include "torsion/verdict.hpp"

namespace torsion::cli {

namespace {

struct Range {
    long lo = 0;
    long hi = -1;
};

std::optional<long> parse_long(std::string_view s)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

/// "7" or "2..11"; lo > hi is an empty range.
std::optional<Range> parse_range(std::string_view text)
{
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_long(text);
        if (!v) {
            return std::nullopt;
        }
        return Range{*v, *v};
    }
    auto lo = parse_long(text.substr(0, dots));
    auto hi = parse_long(text.substr(dots + 2));
    if (!lo || !hi) {
        return std::nullopt;
    }
    return Range{*lo, *hi};
}

long search_limit_from_env()
{
    if (const char* env = std::getenv("TORSION_FORGE_SEARCH_LIMIT")) {
        if (auto v = parse_long(env); v && *v > 0) {
            return *v;
        }
    }
    return kDefaultSearchLimit;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message,
                 const std::string& rule = {})
{
    json j{{"error", kind}, {"message", message}};
    if (!rule.empty()) {
        j["rule"] = rule;
    }
    err << j.dump() << "\n";
}

int exit_code_for(const Error& ex)
{
    if (dynamic_cast<const SearchExhausted*>(&ex) != nullptr) {
        return kSearchExhausted;
    }
    if (dynamic_cast<const InvalidInput*>(&ex) != nullptr) {
        return kInvalidArguments;
    }
    return kRejected;
}

std::size_t oracle_bound(long m)
{
    return static_cast<std::size_t>(2 * m + 2);
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err)
{
    std::ofstream file(path);
    if (!file) {
        print_error(err, "IOError", "cannot write " + path);
        return false;
    }
    file << text;
    return static_cast<bool>(file);
}

// construct ------------------------------------------------------------------

struct ConstructOptions {
    long n = 0;
    long d = 0;
    std::optional<long> m;
    std::string style;
    std::optional<long> e;
    std::optional<long> c_range;
    bool oracle = false;
    std::string out_path;
};

int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        validate_curve_parameters(opt.d, opt.n);
    } catch (const Error& ex) {
        print_error(err, ex.kind(), ex.what());
        return kInvalidArguments;
    }

    ConstructionRequest request;
    request.n = opt.n;
    request.d = opt.d;
    request.m = opt.m.value_or(0);
    request.e = opt.e;
    request.search_limit = opt.c_range.value_or(search_limit_from_env());
    if (opt.style == "order-d") {
        request.style = ConstructionStyle::OrderD;
    } else if (opt.style == "order-n") {
        request.style = ConstructionStyle::OrderN;
    } else if (opt.style == "div-d") {
        request.style = ConstructionStyle::DivisibleByD;
    } else if (opt.style == "n-plus-ed") {
        request.style = ConstructionStyle::NPlusED;
    } else if (!opt.style.empty()) {
        print_error(err, "InvalidInput", "unknown style '" + opt.style + "'");
        return kInvalidArguments;
    }
    if (!request.style && !opt.m) {
        print_error(err, "InvalidInput", "--m is required unless --style is given");
        return kInvalidArguments;
    }
    if (request.style == ConstructionStyle::DivisibleByD && !opt.m) {
        print_error(err, "InvalidInput", "--style div-d needs --m");
        return kInvalidArguments;
    }
    if (request.style == ConstructionStyle::NPlusED && !opt.m && !opt.e) {
        print_error(err, "InvalidInput", "--style n-plus-ed needs --e or --m");
        return kInvalidArguments;
    }
    if (request.search_limit < 1) {
        print_error(err, "InvalidInput", "--c-range must be positive");
        return kInvalidArguments;
    }

    try {
        const Construction built = construct(request);
        const TorsionCertificate& cert = built.certificate;
        const VerificationReport report = verify_certificate(cert);
        if (!report.ok) {
            print_error(err, "InternalError", "constructed certificate failed verification");
            return kFailed;
        }
        if (opt.oracle) {
            if (cert.curve.d != 2) {
                print_error(err, "UnsupportedDegree", "--oracle needs d = 2");
                return kInvalidArguments;
            }
            auto order = oracle_order(cert, oracle_bound(cert.m));
            err << json{{"oracle_order", order ? json(*order) : json(nullptr)}, {"claimed", cert.m}}.dump()
                << "\n";
            if (order != static_cast<std::size_t>(cert.m)) {
                return kFailed;
            }
        }
        const std::string text = dump(to_json(cert));
        if (opt.out_path.empty()) {
            out << text;
        } else if (!write_file(opt.out_path, text, err)) {
            return kFailed;
        }
        return kOk;
    } catch (const Error& ex) {
        print_error(err, ex.kind(), ex.what(), ex.rule());
        return exit_code_for(ex);
    }
}

// verify ---------------------------------------------------------------------

std::optional<TorsionCertificate> load_certificate(const std::string& path, std::ostream& err)
{
    std::ifstream file(path);
    if (!file) {
        print_error(err, "IOError", "cannot read " + path);
        return std::nullopt;
    }
    try {
        return certificate_from_json(json::parse(file));
    } catch (const json::exception& ex) {
        print_error(err, "ParseError", ex.what());
    } catch (const Error& ex) {
        print_error(err, ex.kind(), ex.what());
    }
    return std::nullopt;
}

int cmd_verify(const std::string& path, const std::string& format, std::ostream& out, std::ostream& err)
{
    auto cert = load_certificate(path, err);
    if (!cert) {
        return kInvalidArguments;
    }
    const VerificationReport report = verify_certificate(*cert);
    if (format == "json") {
        out << dump(to_json(report));
    } else {
        for (const auto& check : report.checks) {
            out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
            if (!check.detail.empty()) {
                out << ": " << check.detail;
            }
            out << "\n";
        }
        for (const auto& check : report.checks) {
            if (!check.passed) {
                out << check.name << " check failed\n";
            }
        }
        out << (report.ok ? "certificate verified" : "certificate rejected") << "\n";
    }
    return report.ok ? kOk : kFailed;
}

// oracle ---------------------------------------------------------------------

int cmd_oracle(const std::string& path, std::optional<long> bound, std::ostream& out, std::ostream& err)
{
    auto cert = load_certificate(path, err);
    if (!cert) {
        return kInvalidArguments;
    }
    try {
        const std::size_t b = bound ? static_cast<std::size_t>(*bound) : oracle_bound(cert->m);
        auto order = oracle_order(*cert, b);
        const bool agrees = order == static_cast<std::size_t>(cert->m);
        out << dump(json{{"order", order ? json(*order) : json(nullptr)},
                         {"claimed", cert->m},
                         {"bound", b},
                         {"agrees", agrees}});
        return agrees ? kOk : kFailed;
    } catch (const Error& ex) {
        print_error(err, ex.kind(), ex.what());
        return kRejected;
    }
}

// scan -----------------------------------------------------------------------

struct ScanOptions {
    std::string n;
    std::string d;
    std::string m;
    std::string preset;
    bool construct = false;
    bool oracle = false;
    std::string out_dir;
    std::string format = "json";
};

struct ScanRow {
    long n = 0;
    long d = 0;
    long m = 0;
    std::string status;
    std::string rule;
    std::optional<std::string> certificate_path;
    std::optional<json> certificate;
    std::optional<bool> verified;
    std::optional<long> oracle_order;
    std::string error;
};

ScanRow scan_one(long n, long d, long m, const ScanOptions& opt, long search_limit)
{
    ScanRow row;
    row.n = n;
    row.d = d;
    row.m = m;
    const Verdict verdict = reachability_verdict(n, d, m);
    row.status = std::string(to_string(verdict.status));
    row.rule = verdict.deciding_rule;
    if (!opt.construct || verdict.status != VerdictStatus::ReachableConstructive) {
        return row;
    }
    try {
        ConstructionRequest request;
        request.n = n;
        request.d = d;
        request.m = m;
        request.search_limit = search_limit;
        const Construction built = construct(request);
        row.verified = verify_certificate(built.certificate).ok;
        if (opt.oracle && d == 2) {
            auto order = oracle_order(built.certificate, oracle_bound(m));
            row.oracle_order = order ? std::optional<long>(static_cast<long>(*order)) : std::optional<long>();
        }
        json cert = to_json(built.certificate);
        if (!opt.out_dir.empty()) {
            row.certificate_path = (std::filesystem::path(opt.out_dir)
                                    / ("cert_n" + std::to_string(n) + "_d" + std::to_string(d) + "_m"
                                       + std::to_string(m) + ".json"))
                                       .string();
        } else {
            row.certificate = std::move(cert);
        }
        if (row.certificate_path) {
            std::ofstream file(*row.certificate_path);
            file << dump(cert);
            if (!file) {
                row.error = "cannot write " + *row.certificate_path;
            }
        }
    } catch (const Error& ex) {
        row.error = std::string(ex.kind()) + ": " + ex.what();
    }
    return row;
}

json row_to_json(const ScanRow& row)
{
    json j{{"n", row.n}, {"d", row.d}, {"m", row.m}, {"status", row.status}, {"deciding_rule", row.rule}};
    if (row.certificate_path) {
        j["certificate"] = *row.certificate_path;
    } else if (row.certificate) {
        j["certificate"] = *row.certificate;
    }
    if (row.verified) {
        j["verified"] = *row.verified;
    }
    if (row.oracle_order) {
        j["oracle_order"] = *row.oracle_order;
    }
    if (!row.error.empty()) {
        j["error"] = row.error;
    }
    return j;
}

int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err)
{
    auto n_range = parse_range(opt.n);
    if (!n_range) {
        print_error(err, "InvalidInput", "bad --n range '" + opt.n + "'");
        return kInvalidArguments;
    }
    Range d_range{2, 2};
    Range m_range;
    if (opt.preset == "hyperelliptic-ladder") {
        if (!opt.d.empty() && opt.d != "2") {
            print_error(err, "InvalidInput", "the hyperelliptic ladder fixes d = 2");
            return kInvalidArguments;
        }
        if (!opt.m.empty()) {
            print_error(err, "InvalidInput", "the hyperelliptic ladder fixes the m range");
            return kInvalidArguments;
        }
    } else if (!opt.preset.empty()) {
        print_error(err, "InvalidInput", "unknown preset '" + opt.preset + "'");
        return kInvalidArguments;
    } else {
        auto d = parse_range(opt.d);
        auto m = parse_range(opt.m);
        if (!d || !m) {
            print_error(err, "InvalidInput", "bad --d or --m range");
            return kInvalidArguments;
        }
        d_range = *d;
        m_range = *m;
    }
    if (n_range->lo < 0 || d_range.lo < 0 || m_range.lo < 0) {
        print_error(err, "InvalidInput", "ranges must be nonnegative");
        return kInvalidArguments;
    }
    if (opt.format != "json" && opt.format != "csv") {
        print_error(err, "InvalidInput", "--format must be json or csv");
        return kInvalidArguments;
    }
    if (!opt.out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(opt.out_dir, ec);
        if (ec) {
            print_error(err, "IOError", "cannot create " + opt.out_dir);
            return kFailed;
        }
    }

    struct Triple {
        long n, d, m;
    };
    std::vector<Triple> grid;
    for (long d = d_range.lo; d <= d_range.hi; ++d) {
        for (long n = n_range->lo; n <= n_range->hi; ++n) {
            if (d < 2 || n <= d || std::gcd(n, d) != 1) {
                continue;
            }
            Range ms = opt.preset.empty() ? m_range : Range{n + 1, 2 * n + 1};
            for (long m = std::max(ms.lo, 2L); m <= ms.hi; ++m) {
                grid.push_back({n, d, m});
            }
        }
    }

    const long search_limit = search_limit_from_env();
    std::vector<ScanRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < grid.size(); k = next++) {
            rows[k] = scan_one(grid[k].n, grid[k].d, grid[k].m, opt, search_limit);
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(grid.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    bool all_good = true;
    for (const auto& row : rows) {
        if (row.verified == false || !row.error.empty()
            || (row.oracle_order && *row.oracle_order != row.m)
            || (opt.oracle && row.verified && row.d == 2 && !row.oracle_order)) {
            all_good = false;
        }
    }

    if (opt.format == "csv") {
        out << "n,d,m,status,deciding_rule,certificate,verified,oracle_order\n";
        for (const auto& row : rows) {
            out << row.n << ',' << row.d << ',' << row.m << ',' << row.status << ',' << row.rule << ','
                << row.certificate_path.value_or("") << ','
                << (row.verified ? (*row.verified ? "true" : "false") : "") << ','
                << (row.oracle_order ? std::to_string(*row.oracle_order) : "") << "\n";
        }
    } else {
        json report{{"grid",
                     {{"n", {n_range->lo, n_range->hi}},
                      {"d", {d_range.lo, d_range.hi}},
                      {"m", opt.preset.empty() ? json{m_range.lo, m_range.hi} : json(opt.preset)}}},
                    {"rows", json::array()}};
        for (const auto& row : rows) {
            report["rows"].push_back(row_to_json(row));
        }
        out << dump(report);
    }
    return all_good ? kOk : kFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact constructions and checks for torsion points on superelliptic curves"};
    app.name("torsion_forge");
    app.require_subcommand(1);

    ConstructOptions construct_opt;
    auto* construct_cmd = app.add_subcommand("construct", "Build a curve with a point of given order");
    construct_cmd->add_option("--n", construct_opt.n, "degree of f")->required();
    construct_cmd->add_option("--d", construct_opt.d, "exponent of y")->required();
    construct_cmd->add_option("--m", construct_opt.m, "target order");
    construct_cmd->add_option("--style", construct_opt.style, "order-d | order-n | div-d | n-plus-ed");
    construct_cmd->add_option("--e", construct_opt.e, "e for the n + e d family");
    construct_cmd->add_option("--c-range", construct_opt.c_range, "number of C values to try (div-d)");
    construct_cmd->add_flag("--oracle", construct_opt.oracle, "confirm the order by divisor arithmetic (d = 2)");
    construct_cmd->add_option("--out", construct_opt.out_path, "write the certificate here instead of stdout");

    std::string verify_path;
    std::string verify_format = "text";
    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate file");
    verify_cmd->add_option("path", verify_path, "certificate JSON")->required();
    verify_cmd->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    ScanOptions scan_opt;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate verdicts over an (n, d, m) grid");
    scan_cmd->add_option("--n", scan_opt.n, "n or lo..hi")->required();
    scan_cmd->add_option("--d", scan_opt.d, "d or lo..hi");
    scan_cmd->add_option("--m", scan_opt.m, "m or lo..hi");
    scan_cmd->add_option("--preset", scan_opt.preset, "hyperelliptic-ladder");
    scan_cmd->add_flag("--construct", scan_opt.construct, "build and verify certificates");
    scan_cmd->add_flag("--oracle", scan_opt.oracle, "confirm d = 2 orders by divisor arithmetic");
    scan_cmd->add_option("--out", scan_opt.out_dir, "directory for certificate files");
    scan_cmd->add_option("--format", scan_opt.format, "json | csv");

    std::string oracle_path;
    std::optional<long> oracle_bound_opt;
    auto* oracle_cmd = app.add_subcommand("oracle", "Compute the exact order of a d = 2 certificate point");
    oracle_cmd->add_option("path", oracle_path, "certificate JSON")->required();
    oracle_cmd->add_option("--bound", oracle_bound_opt, "largest multiple to try")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kInvalidArguments;
    }

    if (*construct_cmd) {
        return cmd_construct(construct_opt, out, err);
    }
    if (*verify_cmd) {
        return cmd_verify(verify_path, verify_format, out, err);
    }
    if (*scan_cmd) {
        if (scan_opt.preset.empty() && (scan_opt.d.empty() || scan_opt.m.empty())) {
            print_error(err, "InvalidInput", "scan needs --d and --m unless a preset is given");
            return kInvalidArguments;
        }
        return cmd_scan(scan_opt, out, err);
    }
    return cmd_oracle(oracle_path, oracle_bound_opt, out, err);
}

} // namespace torsion::cli
