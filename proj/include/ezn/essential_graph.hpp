#pragma once

// Essential ideal graph of Z_n and its decomposition
//
//   E(Z_n) = K_m v H,   H = G[null_{n_1}, ..., null_{n_c}]
//
// where K_m is the clique on the m = prod(m_i) - 1 essential ideals, the
// nonessential ideals fall into c = 2^k - 2 classes keyed by their index set
// Xi, each class is an independent set of size prod_{i not in Xi} m_i, and the
// host G joins two classes iff their index sets are disjoint. G is isomorphic
// to the annihilating-ideal graph of Z_{p_1 ... p_k}.
//
// Vertices are labelled with the generator of the ideal, so graphs built by
// different routes can be compared edge by edge.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ezn/graph.hpp"
#include "ezn/ring_ideals.hpp"

namespace ezn {

/// Vertices are all nonzero proper ideals in lexicographic order; I ~ K iff
/// I + K passes the definitional essentiality check (the unit ideal counts).
Graph build_essential_graph_bruteforce(const Factorization& f);

struct EquivalenceClass {
    IndexSet xi;
    IdealZn representative;  // lexicographically smallest member
    std::vector<IdealZn> members;

    std::size_t size() const { return members.size(); }
};

/// Classes of nonessential ideals, ordered by index-set cardinality and then
/// lexicographically ({1}, {2}, ..., {1,2}, ...). Empty when k = 1.
struct ClassPartition {
    std::vector<EquivalenceClass> classes;

    std::size_t index_of(IndexSet xi) const;  // throws std::out_of_range
    std::size_t total_members() const;
};

ClassPartition class_partition(const Factorization& f);

/// Essential ideals in lexicographic order.
std::vector<IdealZn> essential_ideals(const Factorization& f);

/// Host graph on the 2^k - 2 classes; labelled by representative generators.
Graph build_host_graph(const Factorization& f);
Graph build_host_graph(const Factorization& f, const ClassPartition& partition);

/// Annihilating-ideal graph of Z_P, P = product of the given distinct primes:
/// proper divisors 1 < d < P in ascending order, d ~ e iff P | d e.
Graph build_aig_squarefree(const std::vector<std::uint64_t>& primes);

struct PsiCheck {
    /// (host representative generator, AIG divisor) per class, in class order.
    std::vector<std::pair<Label, Label>> mapping;
    bool bijective = false;
    bool preserves_adjacency = false;      // host edge => AIG edge
    bool preserves_non_adjacency = false;  // host non-edge => AIG non-edge

    bool ok() const { return bijective && preserves_adjacency && preserves_non_adjacency; }
};

/// Maps class Xi to <prod_{i not in Xi} p_i> and checks it is a graph
/// isomorphism onto the annihilating-ideal graph, over every vertex pair.
PsiCheck iso_psi(const Factorization& f);

/// K_m v G[null factors], vertices labelled by the actual ideals. For k = 1 this is K_m.
Graph assemble_structured(const Factorization& f);

/// Nonessential part H alone, as a generalized join over the host.
Graph assemble_nonessential(const Factorization& f);

struct StructureReport {
    std::uint64_t m = 0;
    Graph host;
    std::vector<std::size_t> factor_orders;
    Graph assembled;
    Graph bruteforce;
    bool equal = false;
    bool equitable = false;            // class partition of the nonessential subgraph
    bool classes_independent = false;  // no edges inside a class
};

StructureReport verify_structure(const Factorization& f);

/// True iff every vertex of each part has the same number of neighbours in every part.
bool is_equitable(const Graph& g, const std::vector<std::vector<std::size_t>>& parts);

/// Fill colours for DOT export: essential clique vs. one colour per class.
std::vector<std::string> class_colors(const Factorization& f, const Graph& g);

}  // namespace ezn
