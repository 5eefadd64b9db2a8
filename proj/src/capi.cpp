#include "ezn/ezn.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ezn/connectivity.hpp"
#include "ezn/essential_graph.hpp"
#include "ezn/linalg.hpp"
#include "ezn/report.hpp"
#include "ezn/ring_ideals.hpp"
#include "ezn/spectra.hpp"

struct ezn_study {
    ezn::Factorization factorization;
    double tolerance;
};

namespace {

thread_local std::string last_error;

ezn_status fail(ezn_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
ezn_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const ezn::DomainError& e) {
        return fail(EZN_ERROR_DOMAIN, e.what());
    } catch (const ezn::ConvergenceError& e) {
        return fail(EZN_ERROR_NUMERIC, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EZN_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EZN_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EZN_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(EZN_ERROR_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <std::size_t N>
void copy_truncated(char (&dst)[N], std::string_view src) {
    const auto len = std::min(src.size(), N - 1);
    std::memcpy(dst, src.data(), len);
    dst[len] = '\0';
}

ezn::MatrixKind to_kind(ezn_matrix_kind kind) {
    switch (kind) {
        case EZN_MATRIX_ADJACENCY: return ezn::MatrixKind::adjacency;
        case EZN_MATRIX_LAPLACIAN: return ezn::MatrixKind::laplacian;
        case EZN_MATRIX_SIGNLESS: return ezn::MatrixKind::signless;
        case EZN_MATRIX_NORMALIZED: return ezn::MatrixKind::normalized;
    }
    throw std::invalid_argument("unknown matrix kind");
}

ezn::Scope to_scope(ezn_scope scope) {
    switch (scope) {
        case EZN_SCOPE_FULL: return ezn::Scope::full;
        case EZN_SCOPE_SUBGRAPH: return ezn::Scope::subgraph;
    }
    throw std::invalid_argument("unknown scope");
}

}  // namespace

extern "C" {

const char* ezn_version(void) { return "1.0.0"; }

const char* ezn_status_string(ezn_status status) {
    switch (status) {
        case EZN_OK: return "ok";
        case EZN_ERROR_DOMAIN: return "domain violation";
        case EZN_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case EZN_ERROR_BUFFER_TOO_SMALL: return "buffer too small";
        case EZN_ERROR_NUMERIC: return "numerical failure";
        case EZN_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ezn_last_error(void) { return last_error.c_str(); }

void ezn_string_free(char* s) { std::free(s); }

ezn_status ezn_study_create(uint64_t n, double tolerance, ezn_study** out) {
    return guarded([&] {
        if (!out) return fail(EZN_ERROR_INVALID_ARGUMENT, "out must not be null");
        *out = nullptr;
        if (!(tolerance > 0.0)) return fail(EZN_ERROR_INVALID_ARGUMENT, "tolerance must be positive");
        *out = new ezn_study{ezn::factorize(n), tolerance};
        return EZN_OK;
    });
}

void ezn_study_destroy(ezn_study* study) { delete study; }

ezn_status ezn_study_summary(const ezn_study* study, ezn_summary* out) {
    return guarded([&] {
        if (!study || !out) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& f = study->factorization;
        out->n = f.n;
        out->k = static_cast<uint32_t>(f.k());
        out->ideal_count = f.ideal_count();
        out->essential_count = f.essential_count();
        out->class_count = f.k() >= 2 ? (uint64_t{1} << f.k()) - 2 : 0;
        out->edge_count = ezn::build_essential_graph_bruteforce(f).edge_count();
        return EZN_OK;
    });
}

ezn_status ezn_study_spectrum(const ezn_study* study, ezn_matrix_kind kind, ezn_scope scope, ezn_method method,
                              double* values, size_t capacity, size_t* count) {
    return guarded([&] {
        if (!study || !count) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& f = study->factorization;
        const auto k = to_kind(kind);
        const auto s = to_scope(scope);
        ezn::Spectrum spectrum;
        if (method == EZN_METHOD_BRUTEFORCE) {
            spectrum = ezn::spectrum_bruteforce(f, k, s, study->tolerance);
        } else if (method == EZN_METHOD_STRUCTURE) {
            if (s == ezn::Scope::subgraph)
                spectrum = f.k() >= 2 ? ezn::spectrum_via_theorem(f, k, study->tolerance).combined
                                      : ezn::Spectrum({}, study->tolerance);
            else if (k == ezn::MatrixKind::laplacian)
                spectrum = ezn::full_laplacian_via_structure(f, study->tolerance);
            else
                spectrum = ezn::symmetric_eigenvalues(ezn::graph_matrix(ezn::assemble_structured(f), k),
                                                      study->tolerance);
        } else {
            return fail(EZN_ERROR_INVALID_ARGUMENT, "unknown method");
        }
        *count = spectrum.size();
        if (!values) return EZN_OK;
        if (capacity < spectrum.size())
            return fail(EZN_ERROR_BUFFER_TOO_SMALL, "need room for " + std::to_string(spectrum.size()) + " values");
        std::copy(spectrum.values().begin(), spectrum.values().end(), values);
        return EZN_OK;
    });
}

ezn_status ezn_study_connectivity(const ezn_study* study, ezn_connectivity* out) {
    return guarded([&] {
        if (!study || !out) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto r = ezn::classify(study->factorization, study->tolerance);
        *out = ezn_connectivity{};
        out->n = r.n;
        out->T = r.T;
        out->m = r.m;
        out->eta = r.eta;
        out->b = r.b;
        out->a = r.a;
        out->kappa_formula = r.kappa_formula;
        out->kappa_maxflow = r.kappa_maxflow;
        out->complement_connected = r.complement_connected;
        out->b_equals_T = r.b_equals_T;
        out->consistent = r.consistent();
        copy_truncated(out->case_label, ezn::to_string(r.case_label));
        copy_truncated(out->a_vs_kappa, ezn::to_string(r.a_vs_kappa));
        return EZN_OK;
    });
}

ezn_status ezn_study_laplacian_integral(const ezn_study* study, int* integral, char** certificate) {
    return guarded([&] {
        if (!study || !integral) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto cert = ezn::is_laplacian_integral(study->factorization);
        *integral = cert.integral ? 1 : 0;
        if (certificate) *certificate = duplicate(cert.summary());
        return EZN_OK;
    });
}

ezn_status ezn_study_analyze(const ezn_study* study, ezn_format format, char** out) {
    return guarded([&] {
        if (!study || !out) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& f = study->factorization;
        switch (format) {
            case EZN_FORMAT_TEXT: *out = duplicate(ezn::analysis_text(f, study->tolerance)); return EZN_OK;
            case EZN_FORMAT_JSON: *out = duplicate(ezn::analysis_json(f, study->tolerance)); return EZN_OK;
            default: return fail(EZN_ERROR_INVALID_ARGUMENT, "analysis is available as text or json");
        }
    });
}

ezn_status ezn_study_spectrum_report(const ezn_study* study, ezn_matrix_kind kind, ezn_scope scope,
                                     ezn_format format, char** out) {
    return guarded([&] {
        if (!study || !out) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& f = study->factorization;
        switch (format) {
            case EZN_FORMAT_TEXT:
                *out = duplicate(ezn::spectrum_text(f, to_kind(kind), to_scope(scope), study->tolerance));
                return EZN_OK;
            case EZN_FORMAT_JSON:
                *out = duplicate(ezn::spectrum_json(f, to_kind(kind), to_scope(scope), study->tolerance));
                return EZN_OK;
            default: return fail(EZN_ERROR_INVALID_ARGUMENT, "spectrum reports are available as text or json");
        }
    });
}

ezn_status ezn_study_connectivity_report(const ezn_study* study, ezn_format format, char** out) {
    return guarded([&] {
        if (!study || !out) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        const auto& f = study->factorization;
        switch (format) {
            case EZN_FORMAT_JSON: *out = duplicate(ezn::connectivity_json(f, study->tolerance)); return EZN_OK;
            case EZN_FORMAT_CSV:
            case EZN_FORMAT_TEXT:
                *out = duplicate(ezn::to_csv_row(ezn::classify(f, study->tolerance)));
                return EZN_OK;
        }
        return fail(EZN_ERROR_INVALID_ARGUMENT, "unknown format");
    });
}

ezn_status ezn_study_export(const ezn_study* study, ezn_export_target target, ezn_export_format format, char** out) {
    return guarded([&] {
        if (!study || !out) return fail(EZN_ERROR_INVALID_ARGUMENT, "null argument");
        ezn::ExportTarget t;
        switch (target) {
            case EZN_EXPORT_GRAPH: t = ezn::ExportTarget::graph; break;
            case EZN_EXPORT_HOST: t = ezn::ExportTarget::host; break;
            case EZN_EXPORT_AIG: t = ezn::ExportTarget::aig; break;
            default: return fail(EZN_ERROR_INVALID_ARGUMENT, "unknown export target");
        }
        ezn::ExportFormat fmt;
        switch (format) {
            case EZN_EXPORT_DOT: fmt = ezn::ExportFormat::dot; break;
            case EZN_EXPORT_EDGE_LIST: fmt = ezn::ExportFormat::edge_list; break;
            default: return fail(EZN_ERROR_INVALID_ARGUMENT, "unknown export format");
        }
        *out = duplicate(ezn::export_graph(study->factorization, t, fmt));
        return EZN_OK;
    });
}

const char* ezn_connectivity_csv_header(void) { return ezn::kConnectivityCsvHeader.data(); }

ezn_status ezn_verify(uint64_t n, double tolerance, ezn_verify_result* out) {
    return guarded([&] {
        if (!out) return fail(EZN_ERROR_INVALID_ARGUMENT, "out must not be null");
        if (!(tolerance > 0.0)) return fail(EZN_ERROR_INVALID_ARGUMENT, "tolerance must be positive");
        const auto outcome = ezn::verify_n(n, tolerance);
        *out = ezn_verify_result{};
        out->n = n;
        out->skipped = outcome.skipped;
        out->passed = outcome.passed();
        out->checks_run = static_cast<uint32_t>(outcome.checks.size());
        for (const auto& c : outcome.checks)
            if (c.name.rfind("spectrum-", 0) == 0 && std::isfinite(c.deviation))
                out->max_deviation = std::max(out->max_deviation, c.deviation);
        if (const auto* bad = outcome.first_failure()) {
            copy_truncated(out->failed_check, bad->name);
            std::string detail = bad->detail;
            if (bad->deviation != 0.0) detail += (detail.empty() ? "" : "; ") + std::string("deviation ") +
                                                 std::to_string(bad->deviation);
            copy_truncated(out->detail, detail);
        }
        return EZN_OK;
    });
}

}  // extern "C"
