#include "ezn/essential_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ezn {

namespace {

Graph labelled_null(const Factorization& f, const std::vector<IdealZn>& ideals) {
    std::vector<Label> labels;
    labels.reserve(ideals.size());
    for (const auto& i : ideals) labels.push_back(f.generator(i.exps));
    return Graph(std::move(labels));
}

}  // namespace

Graph build_essential_graph_bruteforce(const Factorization& f) {
    const auto ideals = enumerate_ideals(f);
    Graph g = labelled_null(f, ideals);
    for (std::size_t u = 0; u < ideals.size(); ++u)
        for (std::size_t v = u + 1; v < ideals.size(); ++v)
            if (is_essential_oracle(ideal_sum(ideals[u].exps, ideals[v].exps), f)) g.add_edge(u, v);
    return g;
}

std::size_t ClassPartition::index_of(IndexSet xi) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].xi == xi) return i;
    throw std::out_of_range("no class with index set " + xi.to_string());
}

std::size_t ClassPartition::total_members() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    return total;
}

ClassPartition class_partition(const Factorization& f) {
    std::map<std::uint32_t, std::vector<IdealZn>> buckets;
    for (auto& ideal : enumerate_ideals(f)) {
        const auto xi = xi_set(ideal.exps, f);
        if (!xi.empty()) buckets[xi.bits()].push_back(std::move(ideal));
    }
    ClassPartition p;
    for (auto& [bits, members] : buckets) {
        // enumerate_ideals is lexicographic, so the first member is the smallest.
        p.classes.push_back({IndexSet(bits), members.front(), std::move(members)});
    }
    std::sort(p.classes.begin(), p.classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) { return a.xi < b.xi; });
    return p;
}

std::vector<IdealZn> essential_ideals(const Factorization& f) {
    std::vector<IdealZn> out;
    for (auto& ideal : enumerate_ideals(f))
        if (is_essential_criterion(ideal.exps, f)) out.push_back(std::move(ideal));
    return out;
}

Graph build_host_graph(const Factorization& f) { return build_host_graph(f, class_partition(f)); }

Graph build_host_graph(const Factorization& f, const ClassPartition& partition) {
    std::vector<Label> labels;
    for (const auto& c : partition.classes) labels.push_back(f.generator(c.representative.exps));
    Graph host(std::move(labels));
    for (std::size_t i = 0; i < partition.classes.size(); ++i)
        for (std::size_t j = i + 1; j < partition.classes.size(); ++j)
            if (partition.classes[i].xi.disjoint(partition.classes[j].xi)) host.add_edge(i, j);
    return host;
}

Graph build_aig_squarefree(const std::vector<std::uint64_t>& primes) {
    if (primes.size() < 2) throw std::invalid_argument("annihilating-ideal graph needs at least two primes");
    unsigned __int128 product = 1;
    for (auto p : primes) product *= p;
    const std::uint32_t full = (1u << primes.size()) - 1;
    std::vector<Label> divisors;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        Label d = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if ((mask >> i) & 1u) d *= primes[i];
        divisors.push_back(d);
    }
    std::sort(divisors.begin(), divisors.end());
    Graph g(divisors);
    for (std::size_t u = 0; u < divisors.size(); ++u)
        for (std::size_t v = u + 1; v < divisors.size(); ++v)
            if ((static_cast<unsigned __int128>(divisors[u]) * divisors[v]) % product == 0) g.add_edge(u, v);
    return g;
}

PsiCheck iso_psi(const Factorization& f) {
    if (f.k() < 2) throw std::invalid_argument("the host graph needs at least two distinct primes");
    const auto partition = class_partition(f);
    const Graph host = build_host_graph(f, partition);
    const Graph aig = build_aig_squarefree(f.primes);

    PsiCheck check;
    std::vector<std::size_t> image;
    for (std::size_t c = 0; c < partition.classes.size(); ++c) {
        Label d = 1;
        for (std::size_t i = 0; i < f.k(); ++i)
            if (!partition.classes[c].xi.contains(static_cast<int>(i + 1))) d *= f.primes[i];
        check.mapping.emplace_back(host.label(c), d);
        auto where = aig.index_of(d);
        if (!where) return check;
        image.push_back(*where);
    }
    check.bijective = host.order() == aig.order() && std::set<std::size_t>(image.begin(), image.end()).size() == image.size();
    if (!check.bijective) return check;

    check.preserves_adjacency = check.preserves_non_adjacency = true;
    for (std::size_t u = 0; u < host.order(); ++u)
        for (std::size_t v = u + 1; v < host.order(); ++v) {
            const bool h = host.adjacent(u, v);
            const bool a = aig.adjacent(image[u], image[v]);
            if (h && !a) check.preserves_adjacency = false;
            if (!h && a) check.preserves_non_adjacency = false;
        }
    return check;
}

Graph assemble_nonessential(const Factorization& f) {
    if (f.k() < 2) return Graph();
    const auto partition = class_partition(f);
    const Graph host = build_host_graph(f, partition);
    std::vector<Graph> factors;
    for (const auto& c : partition.classes) factors.push_back(labelled_null(f, c.members));
    return generalized_join(host, factors);
}

Graph assemble_structured(const Factorization& f) {
    Graph clique = labelled_null(f, essential_ideals(f));
    for (std::size_t u = 0; u < clique.order(); ++u)
        for (std::size_t v = u + 1; v < clique.order(); ++v) clique.add_edge(u, v);
    return join(clique, assemble_nonessential(f));
}

bool is_equitable(const Graph& g, const std::vector<std::vector<std::size_t>>& parts) {
    for (const auto& from : parts) {
        for (const auto& into : parts) {
            std::optional<std::size_t> expected;
            for (auto v : from) {
                std::size_t count = 0;
                for (auto u : into) count += g.adjacent(v, u) ? 1 : 0;
                if (expected && *expected != count) return false;
                expected = count;
            }
        }
    }
    return true;
}

StructureReport verify_structure(const Factorization& f) {
    StructureReport r;
    r.m = f.essential_count();
    r.bruteforce = build_essential_graph_bruteforce(f);
    r.assembled = assemble_structured(f);
    r.equal = same_labeled_edges(r.assembled, r.bruteforce);

    const auto partition = class_partition(f);
    r.host = build_host_graph(f, partition);
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> nonessential;
    for (const auto& c : partition.classes) {
        r.factor_orders.push_back(c.size());
        std::vector<std::size_t> part;
        for (const auto& member : c.members) part.push_back(*r.bruteforce.index_of(f.generator(member.exps)));
        nonessential.insert(nonessential.end(), part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    r.classes_independent = std::all_of(parts.begin(), parts.end(), [&](const auto& part) {
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (r.bruteforce.adjacent(part[a], part[b])) return false;
        return true;
    });
    r.equitable = is_equitable(r.bruteforce, parts);
    return r;
}

std::vector<std::string> class_colors(const Factorization& f, const Graph& g) {
    static const char* const palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                          "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
    const auto partition = class_partition(f);
    std::map<Label, std::size_t> class_of;
    for (std::size_t c = 0; c < partition.classes.size(); ++c)
        for (const auto& member : partition.classes[c].members) class_of[f.generator(member.exps)] = c;
    std::vector<std::string> colors;
    for (auto label : g.labels()) {
        auto it = class_of.find(label);
        colors.push_back(it == class_of.end() ? "#e41a1c" : palette[it->second % std::size(palette)]);
    }
    return colors;
}

}  // namespace ezn
