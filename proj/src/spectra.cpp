#include "ezn/spectra.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ezn {

using boost::multiprecision::cpp_int;

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::signless: return "signless";
        case MatrixKind::normalized: return "normalized";
    }
    return "?";
}

std::string_view to_string(Scope scope) { return scope == Scope::full ? "full" : "subgraph"; }

MatrixKind parse_matrix_kind(std::string_view name) {
    for (auto kind : kAllKinds)
        if (to_string(kind) == name) return kind;
    throw std::invalid_argument("unknown matrix kind '" + std::string(name) + "'");
}

Scope parse_scope(std::string_view name) {
    if (name == "full") return Scope::full;
    if (name == "subgraph") return Scope::subgraph;
    throw std::invalid_argument("unknown scope '" + std::string(name) + "'");
}

SymMatrix graph_matrix(const Graph& g, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return adjacency_matrix(g);
        case MatrixKind::laplacian: return laplacian_matrix(g);
        case MatrixKind::signless: return signless_laplacian_matrix(g);
        case MatrixKind::normalized: return normalized_laplacian_matrix(g);
    }
    throw std::invalid_argument("unknown matrix kind");
}

namespace {

void require_two_primes(const Factorization& f) {
    if (f.k() < 2) throw std::invalid_argument("class structure needs at least two distinct primes");
}

}  // namespace

ClassWeights class_weights(const Factorization& f) {
    require_two_primes(f);
    const auto partition = class_partition(f);
    ClassWeights w;
    for (const auto& c : partition.classes) {
        w.xi.push_back(c.xi);
        w.size.push_back(c.size());
    }
    for (std::size_t i = 0; i < w.xi.size(); ++i) {
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < w.xi.size(); ++j)
            if (w.xi[i].disjoint(w.xi[j])) total += w.size[j];
        w.neighbor_size.push_back(total);
    }
    return w;
}

SymMatrix quotient_matrix(const Factorization& f, MatrixKind kind, NormalizedSign sign) {
    const auto w = class_weights(f);
    const std::size_t c = w.xi.size();
    SymMatrix q(c);
    for (std::size_t i = 0; i < c; ++i) {
        const double ni = static_cast<double>(w.size[i]);
        const double big_ni = static_cast<double>(w.neighbor_size[i]);
        switch (kind) {
            case MatrixKind::adjacency: break;
            case MatrixKind::laplacian:
            case MatrixKind::signless: q.set(i, i, big_ni); break;
            case MatrixKind::normalized: q.set(i, i, 1.0); break;
        }
        for (std::size_t j = i + 1; j < c; ++j) {
            if (!w.xi[i].disjoint(w.xi[j])) continue;
            const double nj = static_cast<double>(w.size[j]);
            const double big_nj = static_cast<double>(w.neighbor_size[j]);
            switch (kind) {
                case MatrixKind::adjacency:
                case MatrixKind::signless: q.set(i, j, std::sqrt(ni * nj)); break;
                case MatrixKind::laplacian: q.set(i, j, -std::sqrt(ni * nj)); break;
                case MatrixKind::normalized: {
                    const double v = std::sqrt((ni * nj) / (big_ni * big_nj));
                    q.set(i, j, sign == NormalizedSign::negative ? -v : v);
                    break;
                }
            }
        }
    }
    return q;
}

SpectrumDecomposition spectrum_via_theorem(const Factorization& f, MatrixKind kind, double tolerance,
                                           NormalizedSign sign) {
    const auto w = class_weights(f);
    std::vector<double> fixed;
    std::uint64_t members = 0;
    for (auto s : w.size) members += s;
    const std::size_t classes = w.size.size();
    switch (kind) {
        case MatrixKind::adjacency: fixed.assign(members - classes, 0.0); break;
        case MatrixKind::laplacian:
        case MatrixKind::signless:
            for (std::size_t i = 0; i < classes; ++i)
                fixed.insert(fixed.end(), w.size[i] - 1, static_cast<double>(w.neighbor_size[i]));
            break;
        case MatrixKind::normalized: fixed.assign(members - classes, 1.0); break;
    }
    SpectrumDecomposition d{Spectrum(std::move(fixed), tolerance),
                            symmetric_eigenvalues(quotient_matrix(f, kind, sign), tolerance), Spectrum()};
    d.combined = d.fixed_part.merged(d.quotient_part);
    return d;
}

Graph nonessential_subgraph(const Graph& bruteforce, const Factorization& f) {
    std::vector<std::size_t> keep;
    for (const auto& ideal : enumerate_ideals(f))
        if (!is_essential_criterion(ideal.exps, f)) keep.push_back(*bruteforce.index_of(f.generator(ideal.exps)));
    return induced_subgraph(bruteforce, keep);
}

Spectrum spectrum_bruteforce(const Factorization& f, MatrixKind kind, Scope scope, double tolerance) {
    Graph g = build_essential_graph_bruteforce(f);
    if (scope == Scope::subgraph) g = nonessential_subgraph(g, f);
    return symmetric_eigenvalues(graph_matrix(g, kind), tolerance);
}

Spectrum full_laplacian_via_structure(const Factorization& f, double tolerance) {
    const auto m = static_cast<std::size_t>(f.essential_count());
    std::vector<double> clique(m, static_cast<double>(m));
    if (m > 0) clique.front() = 0.0;
    Spectrum clique_spectrum(std::move(clique), tolerance);
    if (f.k() < 2) return clique_spectrum;
    Spectrum rest = spectrum_via_theorem(f, MatrixKind::laplacian, tolerance).combined;
    if (m == 0) return rest;
    return join_laplacian_spectrum(clique_spectrum, m, rest, rest.size());
}

IntMatrix weighted_laplacian(const Factorization& f) {
    const auto w = class_weights(f);
    const std::size_t c = w.xi.size();
    IntMatrix l(c);
    for (std::size_t i = 0; i < c; ++i) {
        l(i, i) = static_cast<std::int64_t>(w.neighbor_size[i]);
        for (std::size_t j = 0; j < c; ++j)
            if (i != j && w.xi[i].disjoint(w.xi[j])) l(i, j) = -static_cast<std::int64_t>(w.size[j]);
    }
    return l;
}

namespace {

using BigMatrix = std::vector<std::vector<cpp_int>>;

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix a(m.dim(), std::vector<cpp_int>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) a[i][j] = m(i, j);
    return a;
}

// Fraction-free elimination. Returns the rank; `det` receives the determinant
// (zero when singular).
std::size_t bareiss(BigMatrix a, cpp_int& det) {
    const std::size_t n = a.size();
    cpp_int previous = 1;
    int sign = 1;
    std::size_t rank = 0;
    std::size_t col = 0;
    for (; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            sign = -sign;
        }
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / previous;
            a[i][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    det = rank == n ? (n == 0 ? cpp_int(1) : cpp_int(sign * a[n - 1][n - 1])) : cpp_int(0);
    return rank;
}

}  // namespace

std::string exact_determinant(const IntMatrix& m) {
    cpp_int det;
    bareiss(to_big(m), det);
    return det.str();
}

std::size_t exact_rank(const IntMatrix& m) {
    cpp_int det;
    return bareiss(to_big(m), det);
}

std::string IntegralityCertificate::summary() const {
    std::ostringstream out;
    if (integral) {
        out << "integral; weighted Laplacian spectrum {";
        for (std::size_t i = 0; i < integer_spectrum.size(); ++i) out << (i ? ", " : "") << integer_spectrum[i];
        out << "}";
    } else {
        out << "not integral";
        if (offending) {
            out << "; eigenvalue " << *offending;
            for (const auto& c : checks)
                if (c.eigenvalue == *offending)
                    out << " has det(L - " << c.candidate << " I) = " << c.determinant;
        }
    }
    return out.str();
}

IntegralityCertificate is_laplacian_integral(const Factorization& f) {
    IntegralityCertificate cert;
    if (f.k() < 2) {
        // Complete graph K_m: Laplacian spectrum {0, m, ..., m}.
        cert.integral = true;
        const auto m = static_cast<std::int64_t>(f.essential_count());
        for (std::int64_t i = 0; i < m; ++i) cert.integer_spectrum.push_back(i == 0 ? 0 : m);
        return cert;
    }
    const IntMatrix l = weighted_laplacian(f);
    // Similar to the symmetric quotient matrix, so its spectrum is real and
    // the weighted Laplacian is diagonalizable: nullity = multiplicity.
    const Spectrum numeric = symmetric_eigenvalues(quotient_matrix(f, MatrixKind::laplacian));
    std::size_t confirmed = 0;
    for (auto it = numeric.entries().rbegin(); it != numeric.entries().rend(); ++it) {
        IntegralityCertificate::Check check{};
        check.eigenvalue = it->value;
        check.candidate = static_cast<std::int64_t>(std::llround(it->value));
        check.screened = std::abs(it->value - static_cast<double>(check.candidate)) < 1e-6;
        IntMatrix shifted = l;
        for (std::size_t i = 0; i < l.dim(); ++i) shifted(i, i) -= check.candidate;
        cpp_int det;
        check.nullity = l.dim() - bareiss(to_big(shifted), det);
        check.determinant = det.str();
        const bool exact = check.screened && det == 0;
        if (exact) {
            confirmed += check.nullity;
            cert.integer_spectrum.insert(cert.integer_spectrum.end(), check.nullity, check.candidate);
        } else if (!cert.offending) {
            cert.offending = check.eigenvalue;
        }
        cert.checks.push_back(std::move(check));
    }
    cert.integral = !cert.offending && confirmed == l.dim();
    if (!cert.integral) cert.integer_spectrum.clear();
    return cert;
}

}  // namespace ezn
