#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ezn/essential_graph.hpp"
#include "ezn/linalg.hpp"
#include "ezn/ring_ideals.hpp"

namespace ezn {

enum class MatrixKind { adjacency, laplacian, signless, normalized };
enum class Scope { full, subgraph };

std::string_view to_string(MatrixKind kind);
std::string_view to_string(Scope scope);
MatrixKind parse_matrix_kind(std::string_view name);  // throws std::invalid_argument
Scope parse_scope(std::string_view name);

inline constexpr MatrixKind kAllKinds[] = {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless,
                                           MatrixKind::normalized};

SymMatrix graph_matrix(const Graph& g, MatrixKind kind);

/// Per-class weights in ClassPartition order.
struct ClassWeights {
    std::vector<IndexSet> xi;
    std::vector<std::uint64_t> size;           // n_I
    std::vector<std::uint64_t> neighbor_size;  // N_I, sum of n_J over host neighbours J
};

ClassWeights class_weights(const Factorization& f);

/// Sign used for the off-diagonal entries of the normalized quotient matrix.
/// `negative` gives -sqrt(n_I n_J / (N_I N_J)); `positive` is the unsigned
/// variant, kept so the two readings can be compared against brute force.
enum class NormalizedSign { negative, positive };

/// Class-indexed quotient matrix (dimension 2^k - 2). Requires k >= 2.
///   adjacency:  0 on the diagonal, sqrt(n_I n_J) on host edges
///   laplacian:  N_I on the diagonal, -sqrt(n_I n_J) on host edges
///   signless:   N_I on the diagonal, +sqrt(n_I n_J) on host edges
///   normalized: 1 on the diagonal, -sqrt(n_I n_J / (N_I N_J)) on host edges
SymMatrix quotient_matrix(const Factorization& f, MatrixKind kind,
                          NormalizedSign sign = NormalizedSign::negative);

struct SpectrumDecomposition {
    Spectrum fixed_part;     // eigenvalues forced by the null factors
    Spectrum quotient_part;  // spectrum of the quotient matrix
    Spectrum combined;
};

/// Spectrum of the nonessential induced subgraph from the class structure:
///   adjacency:             0 repeated |U| - (2^k - 2) times
///   laplacian / signless:  N_I repeated n_I - 1 times per class
///   normalized:            1 repeated sum(n_I - 1) times
/// plus the quotient matrix spectrum. Requires k >= 2.
SpectrumDecomposition spectrum_via_theorem(const Factorization& f, MatrixKind kind,
                                           double tolerance = Spectrum::kDefaultTolerance,
                                           NormalizedSign sign = NormalizedSign::negative);

/// Subgraph of the brute-force graph induced on the nonessential ideals.
Graph nonessential_subgraph(const Graph& bruteforce, const Factorization& f);

/// Dense eigensolve of the requested matrix of the brute-force graph (or its
/// nonessential induced subgraph).
Spectrum spectrum_bruteforce(const Factorization& f, MatrixKind kind, Scope scope,
                             double tolerance = Spectrum::kDefaultTolerance);

/// Laplacian spectrum of the whole graph from the structure: the join rule
/// applied to K_m and the theorem spectrum of the nonessential part.
Spectrum full_laplacian_via_structure(const Factorization& f, double tolerance = Spectrum::kDefaultTolerance);

/// Vertex-weighted Laplacian: diagonal N_I, -n_J on host edges. Rows sum to zero.
IntMatrix weighted_laplacian(const Factorization& f);

/// Exact determinant (fraction-free Bareiss), as a decimal string.
std::string exact_determinant(const IntMatrix& m);
/// Exact rank over the rationals.
std::size_t exact_rank(const IntMatrix& m);

struct IntegralityCertificate {
    struct Check {
        double eigenvalue;         // numeric eigenvalue of the weighted Laplacian
        std::int64_t candidate;    // nearest integer
        bool screened;             // |eigenvalue - candidate| < 1e-6
        std::string determinant;   // det(L - candidate I), exact
        std::size_t nullity;       // dim ker(L - candidate I), exact
    };

    bool integral = false;
    std::vector<Check> checks;                   // one per distinct numeric eigenvalue
    std::vector<std::int64_t> integer_spectrum;  // filled when integral, with repetition
    std::optional<double> offending;             // first eigenvalue that failed

    std::string summary() const;
};

/// Numeric screening of the weighted Laplacian's eigenvalues followed by
/// exact confirmation: each candidate c must satisfy det(L - cI) = 0, and the
/// exact nullities must add up to the dimension. For k = 1 the graph is
/// complete and the certificate is trivially integral.
IntegralityCertificate is_laplacian_integral(const Factorization& f);

}  // namespace ezn
