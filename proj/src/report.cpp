#include "ezn/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "ezn/connectivity.hpp"
#include "ezn/essential_graph.hpp"

namespace ezn {

using nlohmann::json;

namespace {

json entries_json(const Spectrum& s) {
    json out = json::array();
    for (const auto& e : s.entries()) out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    return out;
}

struct SpectrumComparison {
    std::string method;
    Spectrum structural;
    std::optional<SpectrumDecomposition> decomposition;
    Spectrum bruteforce;
    double deviation = 0.0;
    bool agreement = false;
};

SpectrumComparison compare_spectrum(const Factorization& f, MatrixKind kind, Scope scope, double tolerance) {
    SpectrumComparison c;
    c.bruteforce = spectrum_bruteforce(f, kind, scope, tolerance);
    if (scope == Scope::subgraph) {
        c.method = "theorem";
        if (f.k() >= 2) {
            c.decomposition = spectrum_via_theorem(f, kind, tolerance);
            c.structural = c.decomposition->combined;
        } else {
            c.structural = Spectrum({}, tolerance);
        }
    } else if (kind == MatrixKind::laplacian) {
        c.method = "join-rule";
        c.structural = full_laplacian_via_structure(f, tolerance);
    } else {
        c.method = "structure";
        c.structural = symmetric_eigenvalues(graph_matrix(assemble_structured(f), kind), tolerance);
    }
    c.deviation = max_abs_deviation(c.structural, c.bruteforce);
    c.agreement = c.deviation <= tolerance;
    return c;
}

json spectrum_report(const Factorization& f, MatrixKind kind, Scope scope, double tolerance) {
    const auto c = compare_spectrum(f, kind, scope, tolerance);
    json j{{"n", f.n},
           {"kind", to_string(kind)},
           {"scope", to_string(scope)},
           {"method", c.method},
           {"entries", entries_json(c.structural)},
           {"fixed_part", nullptr},
           {"quotient_part", nullptr},
           {"bruteforce", entries_json(c.bruteforce)},
           {"agreement", c.agreement},
           {"max_abs_deviation", std::isfinite(c.deviation) ? json(c.deviation) : json(nullptr)}};
    if (c.decomposition) {
        j["fixed_part"] = entries_json(c.decomposition->fixed_part);
        j["quotient_part"] = entries_json(c.decomposition->quotient_part);
    }
    return j;
}

json connectivity_report(const Factorization& f, double tolerance) {
    const auto r = classify(f, tolerance);
    return {{"n", r.n},
            {"T", r.T},
            {"m", r.m},
            {"eta", r.eta},
            {"b", r.b},
            {"a", r.a},
            {"kappa_formula", r.kappa_formula},
            {"kappa_maxflow", r.kappa_maxflow},
            {"complement_connected", r.complement_connected},
            {"b_equals_T", r.b_equals_T},
            {"case", to_string(r.case_label)},
            {"a_vs_kappa", to_string(r.a_vs_kappa)},
            {"consistent", r.consistent()},
            {"violations", r.violations}};
}

json class_table(const Factorization& f) {
    json rows = json::array();
    if (f.k() < 2) return rows;
    const auto partition = class_partition(f);
    const auto w = class_weights(f);
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const auto& c = partition.classes[i];
        rows.push_back({{"xi", c.xi.members()},
                        {"representative", f.generator(c.representative.exps)},
                        {"n_I", w.size[i]},
                        {"N_I", w.neighbor_size[i]}});
    }
    return rows;
}

std::string format_spectrum(const Spectrum& s) {
    std::ostringstream out;
    out << std::setprecision(10);
    out << '{';
    bool first = true;
    for (const auto& e : s.entries()) {
        out << (first ? "" : ", ") << (std::abs(e.value) < s.tolerance() ? 0.0 : e.value);
        if (e.multiplicity > 1) out << " x" << e.multiplicity;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace

std::string spectrum_json(const Factorization& f, MatrixKind kind, Scope scope, double tolerance) {
    return spectrum_report(f, kind, scope, tolerance).dump(2);
}

std::string spectrum_text(const Factorization& f, MatrixKind kind, Scope scope, double tolerance) {
    const auto c = compare_spectrum(f, kind, scope, tolerance);
    std::ostringstream out;
    out << to_string(kind) << " spectrum (" << to_string(scope) << ", n = " << f.n << ")\n";
    if (c.decomposition) {
        out << "  fixed part:     " << format_spectrum(c.decomposition->fixed_part) << '\n';
        out << "  quotient part:  " << format_spectrum(c.decomposition->quotient_part) << '\n';
    }
    out << "  " << std::left << std::setw(16) << (c.method + ":") << format_spectrum(c.structural) << '\n';
    out << "  brute force:    " << format_spectrum(c.bruteforce) << '\n';
    out << "  agreement:      " << (c.agreement ? "yes" : "NO") << " (max deviation " << std::scientific
        << std::setprecision(2) << c.deviation << ")\n";
    return out.str();
}

std::string connectivity_json(const Factorization& f, double tolerance) {
    return connectivity_report(f, tolerance).dump(2);
}

std::string analysis_json(const Factorization& f, double tolerance) {
    const auto structure = verify_structure(f);
    json spectra = json::array();
    for (auto kind : kAllKinds) spectra.push_back(spectrum_report(f, kind, Scope::subgraph, tolerance));
    spectra.push_back(spectrum_report(f, MatrixKind::laplacian, Scope::full, tolerance));
    const auto integral = is_laplacian_integral(f);
    json psi = nullptr;
    if (f.k() >= 2) psi = iso_psi(f).ok();
    json j{{"n", f.n},
           {"factorization", {{"primes", f.primes}, {"exponents", f.exponents}, {"k", f.k()}}},
           {"T", f.ideal_count()},
           {"m", f.essential_count()},
           {"classes", class_table(f)},
           {"structure",
            {{"equal", structure.equal},
             {"equitable", structure.equitable},
             {"classes_independent", structure.classes_independent},
             {"host_order", structure.host.order()},
             {"host_edges", structure.host.edge_count()},
             {"graph_edges", structure.bruteforce.edge_count()},
             {"psi_isomorphism", psi}}},
           {"spectra", spectra},
           {"connectivity", connectivity_report(f, tolerance)},
           {"laplacian_integral", {{"integral", integral.integral}, {"certificate", integral.summary()}}}};
    return j.dump(2);
}

std::string analysis_text(const Factorization& f, double tolerance) {
    std::ostringstream out;
    out << "n = " << f.n << " = " << f.to_string() << "\n";
    out << "T = " << f.ideal_count() << " nonzero proper ideals, m = " << f.essential_count() << " essential\n\n";

    if (f.k() >= 2) {
        const auto partition = class_partition(f);
        const auto w = class_weights(f);
        out << "classes of nonessential ideals:\n";
        out << "  " << std::left << std::setw(14) << "Xi" << std::setw(16) << "representative" << std::setw(8) << "n_I"
            << "N_I\n";
        for (std::size_t i = 0; i < partition.classes.size(); ++i) {
            out << "  " << std::setw(14) << partition.classes[i].xi.to_string() << std::setw(16)
                << ideal_to_string(partition.classes[i].representative.exps, f) << std::setw(8) << w.size[i]
                << w.neighbor_size[i] << '\n';
        }
        out << std::right << '\n';
    }

    const auto structure = verify_structure(f);
    out << "structure: K_" << structure.m << " v H with " << structure.host.order() << " host vertices; "
        << (structure.equal ? "matches" : "DOES NOT match") << " the definition ("
        << structure.bruteforce.edge_count() << " edges)";
    out << ", partition " << (structure.equitable ? "equitable" : "NOT equitable");
    if (f.k() >= 2) out << ", host ~ AIG: " << (iso_psi(f).ok() ? "yes" : "NO");
    out << "\n\n";

    for (auto kind : kAllKinds) out << spectrum_text(f, kind, Scope::subgraph, tolerance);
    out << spectrum_text(f, MatrixKind::laplacian, Scope::full, tolerance) << '\n';

    const auto r = classify(f, tolerance);
    out << std::setprecision(10);
    out << "connectivity:\n";
    out << "  case " << to_string(r.case_label) << ", b = " << r.b << ", a = " << r.a << '\n';
    out << "  kappa = " << r.kappa_maxflow << " (formula " << r.kappa_formula << "), eta = " << r.eta << '\n';
    out << "  complement " << (r.complement_connected ? "connected" : "disconnected") << ", b = T: "
        << (r.b_equals_T ? "yes" : "no") << ", a vs kappa: " << to_string(r.a_vs_kappa) << '\n';
    for (const auto& v : r.violations) out << "  VIOLATION: " << v << '\n';
    out << "laplacian integrality: " << is_laplacian_integral(f).summary() << '\n';
    return out.str();
}

std::string export_graph(const Factorization& f, ExportTarget target, ExportFormat format) {
    if (target != ExportTarget::graph && f.k() < 2)
        throw DomainError("n = " + std::to_string(f.n) + " is a prime power: there is no host graph");
    Graph g;
    std::vector<std::string> colors;
    std::string name;
    switch (target) {
        case ExportTarget::graph:
            g = build_essential_graph_bruteforce(f);
            if (f.k() >= 2) colors = class_colors(f, g);
            else colors.assign(g.order(), "#e41a1c");
            name = "E_Z" + std::to_string(f.n);
            break;
        case ExportTarget::host:
            g = build_host_graph(f);
            name = "host_Z" + std::to_string(f.n);
            break;
        case ExportTarget::aig: {
            g = build_aig_squarefree(f.primes);
            std::uint64_t radical = 1;
            for (auto p : f.primes) radical *= p;
            name = "AIG_Z" + std::to_string(radical);
            break;
        }
    }
    std::ostringstream out;
    if (format == ExportFormat::dot) write_dot(out, g, name, colors);
    else write_edge_list(out, g);
    return out.str();
}

bool VerifyOutcome::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyOutcome::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

VerifyOutcome verify_n(std::uint64_t n, double tolerance) {
    VerifyOutcome out;
    out.n = n;
    if (n < 4 || is_prime(n)) {
        out.skipped = true;
        return out;
    }
    const auto f = factorize(n);

    const auto structure = verify_structure(f);
    out.checks.push_back({"structure", structure.equal && structure.equitable && structure.classes_independent, 0.0,
                          structure.equal ? (structure.equitable ? "" : "class partition not equitable")
                                          : "assembled graph differs from the definition"});

    if (f.k() >= 2) {
        for (auto kind : kAllKinds) {
            const auto c = compare_spectrum(f, kind, Scope::subgraph, tolerance);
            out.checks.push_back({"spectrum-" + std::string(to_string(kind)), c.agreement, c.deviation, ""});
        }
        const auto psi = iso_psi(f);
        out.checks.push_back({"psi-isomorphism", psi.ok(), 0.0, psi.ok() ? "" : "host graph is not mapped onto the AIG"});
    }
    const auto full = compare_spectrum(f, MatrixKind::laplacian, Scope::full, tolerance);
    out.checks.push_back({"spectrum-laplacian-full", full.agreement, full.deviation, ""});

    const auto r = classify(f, tolerance);
    const bool kappa_ok = r.kappa_formula == r.kappa_maxflow;
    out.checks.push_back({"kappa", kappa_ok, 0.0,
                          kappa_ok ? "" : "formula " + std::to_string(r.kappa_formula) + ", max-flow " +
                                              std::to_string(r.kappa_maxflow)});
    std::string detail;
    for (const auto& v : r.violations) detail += (detail.empty() ? "" : "; ") + v;
    out.checks.push_back({"connectivity-classification", r.consistent(), std::abs(r.b - static_cast<double>(r.T)), detail});
    return out;
}

}  // namespace ezn
