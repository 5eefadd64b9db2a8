#pragma once

// Serialized reports shared by the C API and the command-line tool.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ezn/ring_ideals.hpp"
#include "ezn/spectra.hpp"

namespace ezn {

enum class ExportTarget { graph, host, aig };
enum class ExportFormat { dot, edge_list };

/// Full per-n analysis (factorization, class table, structure check, four
/// spectra with agreement, connectivity, integrality).
std::string analysis_json(const Factorization& f, double tolerance);
std::string analysis_text(const Factorization& f, double tolerance);

/// Spectrum of one matrix kind: structural route vs. brute force.
/// JSON keys: n, kind, scope, method, entries, fixed_part, quotient_part,
/// bruteforce, agreement, max_abs_deviation.
std::string spectrum_json(const Factorization& f, MatrixKind kind, Scope scope, double tolerance);
std::string spectrum_text(const Factorization& f, MatrixKind kind, Scope scope, double tolerance);

std::string connectivity_json(const Factorization& f, double tolerance);

/// DOT or edge-list text. Host and AIG exports need k >= 2 (DomainError otherwise).
std::string export_graph(const Factorization& f, ExportTarget target, ExportFormat format);

struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    std::string detail;
};

struct VerifyOutcome {
    std::uint64_t n = 0;
    bool skipped = false;  // prime or below 4
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* first_failure() const;
};

/// Runs every structural, spectral and connectivity cross-check for one n.
VerifyOutcome verify_n(std::uint64_t n, double tolerance);

}  // namespace ezn
