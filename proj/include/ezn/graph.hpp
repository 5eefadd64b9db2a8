#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ezn {

using Label = std::uint64_t;

/// Simple undirected graph with a fixed vertex order and one opaque integer
/// label per vertex. Adjacency is a dense symmetric byte matrix.
class Graph {
public:
    Graph() = default;
    /// Labels default to 0, 1, ..., order-1.
    explicit Graph(std::size_t order);
    explicit Graph(std::vector<Label> labels);

    std::size_t order() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_; }

    const std::vector<Label>& labels() const { return labels_; }
    Label label(std::size_t v) const { return labels_[v]; }
    std::optional<std::size_t> index_of(Label label) const;

    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * order() + v] != 0; }
    /// Self-loops are rejected; re-adding an existing edge is a no-op.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u < v, row-major

    bool complete() const { return 2 * edges_ == order() * (order() == 0 ? 0 : order() - 1); }

private:
    std::vector<Label> labels_;
    std::vector<std::uint8_t> adj_;
    std::size_t edges_ = 0;
};

Graph complete_graph(std::size_t order);
Graph null_graph(std::size_t order);
Graph path_graph(std::size_t order);
Graph cycle_graph(std::size_t order);

Graph complement(const Graph& g);

/// Disjoint union plus every edge between the two parts. Labels are concatenated.
Graph join(const Graph& first, const Graph& second);

/// Replaces host vertex i by factors[i]; factor blocks i and j are joined
/// completely iff host vertices i and j are adjacent. Throws
/// std::invalid_argument if factors.size() != host.order().
Graph generalized_join(const Graph& host, std::span<const Graph> factors);

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

/// Same label multiset and identical adjacency between equally labelled vertices.
bool same_labeled_edges(const Graph& a, const Graph& b);

std::vector<std::vector<std::size_t>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertex connectivity by Menger's theorem: min over non-adjacent pairs of the
/// number of internally vertex-disjoint paths, each found by unit-capacity
/// max-flow on the vertex-split digraph. Complete graphs give order-1;
/// disconnected graphs give 0.
std::size_t vertex_connectivity(const Graph& g);

/// Max number of internally vertex-disjoint s-t paths, s and t non-adjacent.
std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t);

void write_dot(std::ostream& out, const Graph& g, const std::string& name,
               std::span<const std::string> vertex_colors = {});
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ezn
