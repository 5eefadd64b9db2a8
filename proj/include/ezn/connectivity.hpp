#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ezn/ring_ideals.hpp"

namespace ezn {

enum class CaseLabel { prime_power, squarefree_k2, squarefree_k3plus, mixed };
enum class AVsKappa { equal, strict_less, not_applicable };

std::string_view to_string(CaseLabel label);
std::string_view to_string(AVsKappa relation);

CaseLabel case_of(const Factorization& f);

/// Largest Laplacian eigenvalue b of the whole graph (0 for a single vertex).
double spectral_radius(const Factorization& f);
/// Second-smallest Laplacian eigenvalue a of the whole graph (0 for a single vertex).
double algebraic_connectivity(const Factorization& f);

/// Complement of the brute-force graph, checked by breadth-first search.
bool complement_connected(const Factorization& f);

/// Closed-form classification of complement connectivity: connected iff n is
/// squarefree with k >= 3, or n = p^2 (single vertex, trivially connected).
bool complement_connected_expected(const Factorization& f);

/// Closed-form classification of b = T: n = p^t with t > 2, n = p1 p2, or
/// k >= 2 with some m_i > 1.
bool spectral_radius_attains_order(const Factorization& f);

/// eta = min_j prod_{i != j} m_i, the smallest prime-power class; 0 when k = 1.
std::uint64_t eta(const Factorization& f);

/// Piecewise vertex connectivity: T-1 for k = 1, 1 for squarefree k > 1, m + eta otherwise.
std::uint64_t kappa_formula(const Factorization& f);

struct ConnectivityReport {
    std::uint64_t n = 0;
    std::uint64_t T = 0;
    std::uint64_t m = 0;
    std::uint64_t eta = 0;
    double b = 0.0;
    double a = 0.0;
    std::uint64_t kappa_formula = 0;
    std::uint64_t kappa_maxflow = 0;
    bool complement_connected = false;
    bool b_equals_T = false;
    CaseLabel case_label = CaseLabel::prime_power;
    AVsKappa a_vs_kappa = AVsKappa::not_applicable;
    /// Human-readable descriptions of any internal inconsistency; empty when all checks agree.
    std::vector<std::string> violations;

    bool consistent() const { return violations.empty(); }
};

/// Fills every field from one brute-force graph build and cross-checks the
/// closed forms against the computed quantities.
ConnectivityReport classify(const Factorization& f, double tolerance = 1e-8);

inline constexpr std::string_view kConnectivityCsvHeader = "n,T,m,eta,b,a,kappa,case,b_eq_T,a_vs_k";
std::string to_csv_row(const ConnectivityReport& r);

}  // namespace ezn
