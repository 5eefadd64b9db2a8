#include "ezn/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace ezn {

Graph::Graph(std::size_t order) : labels_(order), adj_(order * order, 0) {
    std::iota(labels_.begin(), labels_.end(), Label{0});
}

Graph::Graph(std::vector<Label> labels)
    : labels_(std::move(labels)), adj_(labels_.size() * labels_.size(), 0) {}

std::optional<std::size_t> Graph::index_of(Label label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed in a simple graph");
    if (u >= order() || v >= order()) throw std::out_of_range("vertex index out of range");
    auto& cell = adj_[u * order() + v];
    if (cell) return;
    cell = 1;
    adj_[v * order() + u] = 1;
    ++edges_;
}

std::size_t Graph::degree(std::size_t v) const {
    const auto* row = adj_.data() + v * order();
    return static_cast<std::size_t>(std::count(row, row + order(), std::uint8_t{1}));
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < order(); ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < order(); ++u)
        for (std::size_t v = u + 1; v < order(); ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(std::size_t order) {
    Graph g(order);
    for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = u + 1; v < order; ++v) g.add_edge(u, v);
    return g;
}

Graph null_graph(std::size_t order) { return Graph(order); }

Graph path_graph(std::size_t order) {
    Graph g(order);
    for (std::size_t v = 1; v < order; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(std::size_t order) {
    Graph g = path_graph(order);
    if (order >= 3) g.add_edge(order - 1, 0);
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.labels());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph join(const Graph& first, const Graph& second) {
    std::vector<Label> labels = first.labels();
    labels.insert(labels.end(), second.labels().begin(), second.labels().end());
    Graph out(std::move(labels));
    const std::size_t shift = first.order();
    for (auto [u, v] : first.edges()) out.add_edge(u, v);
    for (auto [u, v] : second.edges()) out.add_edge(u + shift, v + shift);
    for (std::size_t u = 0; u < first.order(); ++u)
        for (std::size_t v = 0; v < second.order(); ++v) out.add_edge(u, v + shift);
    return out;
}

Graph generalized_join(const Graph& host, std::span<const Graph> factors) {
    if (factors.size() != host.order())
        throw std::invalid_argument("generalized join needs one factor per host vertex");
    std::vector<std::size_t> offset(factors.size() + 1, 0);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        offset[i + 1] = offset[i] + factors[i].order();
        labels.insert(labels.end(), factors[i].labels().begin(), factors[i].labels().end());
    }
    Graph out(std::move(labels));
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (auto [u, v] : factors[i].edges()) out.add_edge(offset[i] + u, offset[i] + v);
    for (auto [i, j] : host.edges())
        for (std::size_t u = offset[i]; u < offset[i + 1]; ++u)
            for (std::size_t v = offset[j]; v < offset[j + 1]; ++v) out.add_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
    std::vector<Label> labels;
    labels.reserve(vertices.size());
    for (auto v : vertices) labels.push_back(g.label(v));
    Graph out(std::move(labels));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.adjacent(vertices[a], vertices[b])) out.add_edge(a, b);
    return out;
}

bool same_labeled_edges(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::map<Label, std::size_t> where;
    for (std::size_t v = 0; v < b.order(); ++v)
        if (!where.emplace(b.label(v), v).second) return false;  // duplicate labels
    std::vector<std::size_t> to_b(a.order());
    for (std::size_t v = 0; v < a.order(); ++v) {
        auto it = where.find(a.label(v));
        if (it == where.end()) return false;
        to_b[v] = it->second;
    }
    for (std::size_t u = 0; u < a.order(); ++u)
        for (std::size_t v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v) != b.adjacent(to_b[u], to_b[v])) return false;
    return true;
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        std::vector<std::size_t> part;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        seen[root] = true;
        while (!frontier.empty()) {
            auto v = frontier.front();
            frontier.pop();
            part.push_back(v);
            for (std::size_t u = 0; u < g.order(); ++u)
                if (g.adjacent(v, u) && !seen[u]) {
                    seen[u] = true;
                    frontier.push(u);
                }
        }
        std::sort(part.begin(), part.end());
        out.push_back(std::move(part));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

namespace {

// Residual network with adjacency lists of edge indices; edge e^1 is the reverse of e.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, int capacity) {
        out_[from].push_back(head_.size());
        head_.push_back(to);
        cap_.push_back(capacity);
        out_[to].push_back(head_.size());
        head_.push_back(from);
        cap_.push_back(0);
    }

    // Unit-augmenting BFS paths; stops early once `limit` is reached.
    std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t limit) {
        std::size_t flow = 0;
        std::vector<std::size_t> via(out_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), kNone);
            via[source] = kRoot;
            std::queue<std::size_t> frontier;
            frontier.push(source);
            while (!frontier.empty() && via[sink] == kNone) {
                auto x = frontier.front();
                frontier.pop();
                for (auto e : out_[x]) {
                    auto y = head_[e];
                    if (cap_[e] > 0 && via[y] == kNone) {
                        via[y] = e;
                        frontier.push(y);
                    }
                }
            }
            if (via[sink] == kNone) break;
            for (auto y = sink; y != source; y = head_[via[y] ^ 1]) {
                cap_[via[y]] -= 1;
                cap_[via[y] ^ 1] += 1;
            }
            ++flow;
        }
        return flow;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    static constexpr std::size_t kRoot = kNone - 1;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::size_t> head_;
    std::vector<int> cap_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t) {
    if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
    const std::size_t n = g.order();
    const int big = static_cast<int>(n) + 1;
    // Vertex v becomes v_in = 2v and v_out = 2v + 1.
    FlowNetwork net(2 * n);
    for (std::size_t v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (auto [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    return net.max_flow(2 * s + 1, 2 * t, n);
}

std::size_t vertex_connectivity(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    if (g.complete()) return n - 1;
    if (!is_connected(g)) return 0;
    std::size_t best = n - 1;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t)) best = std::min(best, local_vertex_connectivity(g, s, t));
    return best;
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name, std::span<const std::string> vertex_colors) {
    out << "graph \"" << name << "\" {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        out << "  v" << v << " [label=\"" << g.label(v) << "\"";
        if (v < vertex_colors.size() && !vertex_colors[v].empty())
            out << ", style=filled, fillcolor=\"" << vertex_colors[v] << "\"";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace ezn
