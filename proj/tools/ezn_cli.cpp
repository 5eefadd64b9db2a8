// ezn: command-line front end over the C API.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ezn/ezn.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitDomain = 2;

struct StudyDeleter {
    void operator()(ezn_study* s) const { ezn_study_destroy(s); }
};
using Study = std::unique_ptr<ezn_study, StudyDeleter>;

struct CString {
    char* ptr = nullptr;
    ~CString() { ezn_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

class CommandError : public std::runtime_error {
public:
    CommandError(ezn_status status, const std::string& what) : std::runtime_error(what), status(status) {}
    ezn_status status;
};

void check(ezn_status status) {
    if (status != EZN_OK) throw CommandError(status, std::string(ezn_status_string(status)) + ": " + ezn_last_error());
}

Study open_study(std::uint64_t n, double tolerance) {
    ezn_study* raw = nullptr;
    check(ezn_study_create(n, tolerance, &raw));
    return Study(raw);
}

const std::map<std::string, ezn_format> kFormats{
    {"text", EZN_FORMAT_TEXT}, {"json", EZN_FORMAT_JSON}, {"csv", EZN_FORMAT_CSV}};
const std::map<std::string, ezn_matrix_kind> kKinds{{"adjacency", EZN_MATRIX_ADJACENCY},
                                                    {"laplacian", EZN_MATRIX_LAPLACIAN},
                                                    {"signless", EZN_MATRIX_SIGNLESS},
                                                    {"normalized", EZN_MATRIX_NORMALIZED}};
const std::map<std::string, ezn_scope> kScopes{{"full", EZN_SCOPE_FULL}, {"subgraph", EZN_SCOPE_SUBGRAPH}};
const std::map<std::string, ezn_export_target> kTargets{
    {"graph", EZN_EXPORT_GRAPH}, {"host", EZN_EXPORT_HOST}, {"aig", EZN_EXPORT_AIG}};
const std::map<std::string, ezn_export_format> kExportFormats{{"dot", EZN_EXPORT_DOT},
                                                              {"edges", EZN_EXPORT_EDGE_LIST}};

struct RunConfig {
    double tolerance = 1e-8;
    ezn_format format = EZN_FORMAT_TEXT;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

int run_analyze(std::uint64_t n, const RunConfig& cfg) {
    auto study = open_study(n, cfg.tolerance);
    CString out;
    check(ezn_study_analyze(study.get(), cfg.format == EZN_FORMAT_CSV ? EZN_FORMAT_TEXT : cfg.format, &out.ptr));
    std::cout << out.str();
    if (cfg.format == EZN_FORMAT_JSON) std::cout << '\n';
    return 0;
}

int run_spectra(std::uint64_t n, const std::vector<ezn_matrix_kind>& kinds, ezn_scope scope, const RunConfig& cfg) {
    auto study = open_study(n, cfg.tolerance);
    nlohmann::json all = nlohmann::json::array();
    bool agree = true;
    for (auto kind : kinds) {
        CString out;
        if (cfg.format == EZN_FORMAT_JSON) {
            check(ezn_study_spectrum_report(study.get(), kind, scope, EZN_FORMAT_JSON, &out.ptr));
            auto j = nlohmann::json::parse(out.str());
            agree = agree && j.at("agreement").get<bool>();
            all.push_back(std::move(j));
        } else {
            check(ezn_study_spectrum_report(study.get(), kind, scope, EZN_FORMAT_TEXT, &out.ptr));
            agree = agree && out.str().find("agreement:      yes") != std::string::npos;
            std::cout << out.str();
        }
    }
    if (cfg.format == EZN_FORMAT_JSON) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    return agree ? 0 : kExitFailure;
}

std::vector<ezn_verify_result> sweep(std::uint64_t lo, std::uint64_t hi, const RunConfig& cfg) {
    std::vector<ezn_verify_result> results(hi >= lo ? hi - lo + 1 : 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> broken{false};
    std::string error;
    auto worker = [&] {
        for (std::size_t i = next++; i < results.size() && !broken; i = next++) {
            const auto status = ezn_verify(lo + i, cfg.tolerance, &results[i]);
            if (status != EZN_OK && !broken.exchange(true))
                error = "n = " + std::to_string(lo + i) + ": " + ezn_last_error();
        }
    };
    std::vector<std::thread> pool;
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(results.size())));
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (broken) throw CommandError(EZN_ERROR_INTERNAL, error);
    return results;
}

int run_verify_range(std::uint64_t lo, std::uint64_t hi, const RunConfig& cfg) {
    const auto results = sweep(lo, hi, cfg);
    std::size_t checked = 0, skipped = 0, failed = 0;
    double worst = 0.0;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : results) {
        if (r.skipped) {
            ++skipped;
            continue;
        }
        ++checked;
        worst = std::max(worst, r.max_deviation);
        if (!r.passed) {
            ++failed;
            failures.push_back({{"n", r.n}, {"check", r.failed_check}, {"detail", r.detail}});
        }
    }
    if (cfg.format == EZN_FORMAT_JSON) {
        nlohmann::json j{{"lo", lo},           {"hi", hi},         {"checked", checked},
                         {"skipped", skipped}, {"failed", failed}, {"max_spectrum_deviation", worst},
                         {"failures", failures}};
        std::cout << j.dump(2) << '\n';
    } else if (cfg.format == EZN_FORMAT_CSV) {
        std::cout << "n,skipped,passed,checks,max_deviation,failed_check\n";
        for (const auto& r : results)
            std::cout << r.n << ',' << r.skipped << ',' << r.passed << ',' << r.checks_run << ',' << r.max_deviation
                      << ',' << r.failed_check << '\n';
    } else {
        for (const auto& f : failures)
            std::cout << "FAIL n=" << f["n"] << " check=" << f["check"].get<std::string>() << " "
                      << f["detail"].get<std::string>() << '\n';
        std::cout << "checked " << checked << ", skipped " << skipped << ", failed " << failed
                  << ", max spectrum deviation " << worst << '\n';
    }
    return failed == 0 ? 0 : kExitFailure;
}

int run_export(std::uint64_t n, ezn_export_target target, const std::string& path, ezn_export_format format,
               const RunConfig& cfg) {
    auto study = open_study(n, cfg.tolerance);
    CString out;
    check(ezn_study_export(study.get(), target, format, &out.ptr));
    if (path == "-") {
        std::cout << out.str();
        return 0;
    }
    std::ofstream file(path);
    if (!file) throw CommandError(EZN_ERROR_INVALID_ARGUMENT, "cannot open " + path + " for writing");
    file << out.str();
    return 0;
}

int run_report(std::uint64_t lo, std::uint64_t hi, const RunConfig& cfg) {
    bool consistent = true;
    nlohmann::json rows = nlohmann::json::array();
    if (cfg.format != EZN_FORMAT_JSON) std::cout << ezn_connectivity_csv_header() << '\n';
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 4); n <= hi; ++n) {
        ezn_study* raw = nullptr;
        const auto status = ezn_study_create(n, cfg.tolerance, &raw);
        if (status == EZN_ERROR_DOMAIN) continue;  // primes
        check(status);
        Study study(raw);
        ezn_connectivity c{};
        check(ezn_study_connectivity(study.get(), &c));
        consistent = consistent && c.consistent;
        CString out;
        if (cfg.format == EZN_FORMAT_JSON) {
            check(ezn_study_connectivity_report(study.get(), EZN_FORMAT_JSON, &out.ptr));
            rows.push_back(nlohmann::json::parse(out.str()));
        } else {
            check(ezn_study_connectivity_report(study.get(), EZN_FORMAT_CSV, &out.ptr));
            std::cout << out.str() << '\n';
        }
    }
    if (cfg.format == EZN_FORMAT_JSON) std::cout << rows.dump(2) << '\n';
    return consistent ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Essential ideal graphs of Z_n: structure, spectra and connectivity"};
    app.fallthrough();
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";
    app.add_option("--tolerance", cfg.tolerance, "Absolute eigenvalue tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    std::uint64_t n = 0, lo = 0, hi = 0;

    auto* analyze = app.add_subcommand("analyze", "Full report for one n");
    analyze->add_option("n", n, "Modulus (composite, >= 4)")->required();

    auto* spectra = app.add_subcommand("spectra", "Spectra via the class structure vs. brute force");
    spectra->add_option("n", n, "Modulus")->required();
    std::string matrix = "all", scope = "subgraph";
    spectra->add_option("--matrix", matrix, "adjacency|laplacian|signless|normalized|all")
        ->check(CLI::IsMember({"all", "adjacency", "laplacian", "signless", "normalized"}))
        ->capture_default_str();
    spectra->add_option("--scope", scope, "full graph or nonessential subgraph")
        ->check(CLI::IsMember({"full", "subgraph"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify-range", "Cross-check every composite n in [lo, hi]");
    verify->add_option("lo", lo)->required()->check(CLI::Range(std::uint64_t{4}, UINT64_MAX));
    verify->add_option("hi", hi)->required();
    verify->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* exporter = app.add_subcommand("export", "Write a graph as DOT or an edge list");
    exporter->add_option("n", n)->required();
    std::string target, path, export_format = "dot";
    exporter->add_option("what", target, "graph|host|aig")->required()->check(CLI::IsMember({"graph", "host", "aig"}));
    exporter->add_option("path", path, "Output file, '-' for stdout")->required();
    exporter->add_option("--as", export_format, "dot|edges")->check(CLI::IsMember({"dot", "edges"}))->capture_default_str();

    auto* report = app.add_subcommand("report", "Connectivity sweep over [lo, hi] as CSV or JSON");
    report->add_option("lo", lo)->required();
    report->add_option("hi", hi)->required();

    CLI11_PARSE(app, argc, argv);
    cfg.format = kFormats.at(format);

    try {
        if (*analyze) return run_analyze(n, cfg);
        if (*spectra) {
            std::vector<ezn_matrix_kind> kinds;
            if (matrix == "all")
                kinds = {EZN_MATRIX_ADJACENCY, EZN_MATRIX_LAPLACIAN, EZN_MATRIX_SIGNLESS, EZN_MATRIX_NORMALIZED};
            else
                kinds = {kKinds.at(matrix)};
            return run_spectra(n, kinds, kScopes.at(scope), cfg);
        }
        if (*verify) return run_verify_range(lo, hi, cfg);
        if (*exporter) return run_export(n, kTargets.at(target), path, kExportFormats.at(export_format), cfg);
        if (*report) return run_report(lo, hi, cfg);
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.status == EZN_ERROR_DOMAIN ? kExitDomain : kExitFailure;
    }
    return kExitFailure;
}
