#include "ezn/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ezn/essential_graph.hpp"
#include "ezn/graph.hpp"
#include "ezn/linalg.hpp"

namespace ezn {

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::prime_power: return "prime-power";
        case CaseLabel::squarefree_k2: return "squarefree-k2";
        case CaseLabel::squarefree_k3plus: return "squarefree-k>=3";
        case CaseLabel::mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(AVsKappa relation) {
    switch (relation) {
        case AVsKappa::equal: return "equal";
        case AVsKappa::strict_less: return "strict-less";
        case AVsKappa::not_applicable: return "not-applicable";
    }
    return "?";
}

CaseLabel case_of(const Factorization& f) {
    if (f.k() == 1) return CaseLabel::prime_power;
    if (!f.squarefree()) return CaseLabel::mixed;
    return f.k() == 2 ? CaseLabel::squarefree_k2 : CaseLabel::squarefree_k3plus;
}

namespace {

struct LaplacianExtremes {
    double a = 0.0;
    double b = 0.0;
};

LaplacianExtremes extremes(const Graph& g) {
    if (g.order() < 2) return {};
    const auto values = jacobi_eigenvalues(laplacian_matrix(g));
    return {values[1], values.back()};
}

}  // namespace

double spectral_radius(const Factorization& f) { return extremes(build_essential_graph_bruteforce(f)).b; }

double algebraic_connectivity(const Factorization& f) { return extremes(build_essential_graph_bruteforce(f)).a; }

bool complement_connected(const Factorization& f) {
    return is_connected(complement(build_essential_graph_bruteforce(f)));
}

bool complement_connected_expected(const Factorization& f) {
    if (f.k() == 1) return f.exponents[0] == 2;
    return f.squarefree() && f.k() >= 3;
}

bool spectral_radius_attains_order(const Factorization& f) {
    if (f.k() == 1) return f.exponents[0] > 2;
    if (f.squarefree()) return f.k() == 2;
    return true;
}

std::uint64_t eta(const Factorization& f) {
    if (f.k() < 2) return 0;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t j = 0; j < f.k(); ++j) {
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < f.k(); ++i)
            if (i != j) size *= static_cast<std::uint64_t>(f.exponents[i]);
        best = std::min(best, size);
    }
    return best;
}

std::uint64_t kappa_formula(const Factorization& f) {
    if (f.k() == 1) return f.ideal_count() - 1;
    if (f.squarefree()) return 1;
    return f.essential_count() + eta(f);
}

ConnectivityReport classify(const Factorization& f, double tolerance) {
    ConnectivityReport r;
    r.n = f.n;
    r.T = f.ideal_count();
    r.m = f.essential_count();
    r.eta = eta(f);
    r.case_label = case_of(f);

    const Graph g = build_essential_graph_bruteforce(f);
    const auto ext = extremes(g);
    r.a = ext.a;
    r.b = ext.b;
    r.kappa_formula = kappa_formula(f);
    r.kappa_maxflow = vertex_connectivity(g);
    r.complement_connected = is_connected(complement(g));
    r.b_equals_T = std::abs(r.b - static_cast<double>(r.T)) <= tolerance;

    auto fail = [&](std::string what) { r.violations.push_back(std::move(what)); };

    if (r.kappa_formula != r.kappa_maxflow)
        fail("kappa formula " + std::to_string(r.kappa_formula) + " != max-flow " + std::to_string(r.kappa_maxflow));
    if (r.b > static_cast<double>(r.T) + tolerance) fail("spectral radius exceeds T");
    if (r.b_equals_T == r.complement_connected && g.order() >= 2)
        fail("b = T must hold exactly when the complement is disconnected");
    if (r.b_equals_T != spectral_radius_attains_order(f)) fail("b = T disagrees with the closed-form case list");
    if (r.complement_connected != complement_connected_expected(f))
        fail("complement connectivity disagrees with the closed-form characterization");

    const auto kappa = static_cast<double>(r.kappa_maxflow);
    if (g.order() < 2 || g.complete()) {
        r.a_vs_kappa = AVsKappa::not_applicable;
    } else if (std::abs(r.a - kappa) <= tolerance) {
        r.a_vs_kappa = AVsKappa::equal;
    } else if (r.a < kappa) {
        r.a_vs_kappa = AVsKappa::strict_less;
    } else {
        r.a_vs_kappa = AVsKappa::not_applicable;
        fail("algebraic connectivity exceeds vertex connectivity on a non-complete graph");
    }
    if (r.case_label == CaseLabel::squarefree_k3plus && r.a_vs_kappa != AVsKappa::strict_less)
        fail("squarefree n with k >= 3 must have a < kappa");
    if (r.case_label == CaseLabel::mixed && f.k() == 2) {
        if (r.a_vs_kappa != AVsKappa::equal) fail("n = p1^m1 p2^m2 must have a = kappa");
        const auto m1 = static_cast<std::uint64_t>(f.exponents[0]);
        const auto m2 = static_cast<std::uint64_t>(f.exponents[1]);
        if (std::abs(r.a - static_cast<double>(r.T - std::max(m1, m2))) > tolerance) fail("a != T - max(m1, m2)");
        if (r.kappa_formula != r.m + std::min(m1, m2)) fail("kappa != m + min(m1, m2)");
    }
    return r;
}

std::string to_csv_row(const ConnectivityReport& r) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << r.n << ',' << r.T << ',' << r.m << ',' << r.eta << ',' << r.b << ',' << r.a << ',' << r.kappa_maxflow << ','
        << to_string(r.case_label) << ',' << (r.b_equals_T ? "true" : "false") << ',' << to_string(r.a_vs_kappa);
    return out.str();
}

}  // namespace ezn
