#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "ezn/graph.hpp"
#include "ezn/linalg.hpp"
#include "support/oracles.hpp"

using namespace ezn;

namespace {

Spectrum laplacian_spectrum(const Graph& g) { return symmetric_eigenvalues(laplacian_matrix(g)); }

double sum_of_squares(const Spectrum& s) {
    double out = 0.0;
    for (double v : s.values()) out += v * v;
    return out;
}

std::size_t degree_square_sum(const Graph& g) {
    std::size_t out = 0;
    for (std::size_t v = 0; v < g.order(); ++v) out += g.degree(v) * g.degree(v);
    return out;
}

std::size_t non_isolated(const Graph& g) {
    std::size_t out = 0;
    for (std::size_t v = 0; v < g.order(); ++v) out += g.degree(v) > 0 ? 1 : 0;
    return out;
}

}  // namespace

TEST_CASE("basic graph construction") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK(g.index_of(3) == std::optional<std::size_t>{3});
    CHECK_FALSE(g.index_of(9).has_value());
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}});
}

TEST_CASE("standard families") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_graph(5).complete());
    CHECK(null_graph(4).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(complement(complete_graph(4)).edge_count() == 0);
    CHECK(complement(cycle_graph(5)).edge_count() == 5);
}

TEST_CASE("join and generalized join") {
    const auto j = join(complete_graph(2), null_graph(3));
    CHECK(j.order() == 5);
    CHECK(j.edge_count() == 1 + 6);

    // P_3 host with factors K_1, null_2, K_2
    const std::vector<Graph> factors{complete_graph(1), null_graph(2), complete_graph(2)};
    const auto gj = generalized_join(path_graph(3), factors);
    CHECK(gj.order() == 5);
    CHECK(gj.edge_count() == 2 + 4 + 1);
    CHECK(gj.adjacent(0, 1));
    CHECK_FALSE(gj.adjacent(0, 3));
    CHECK_FALSE(gj.adjacent(1, 2));

    CHECK_THROWS_AS(generalized_join(path_graph(2), factors), std::invalid_argument);
}

TEST_CASE("components and connectivity on small graphs") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    CHECK(components(g).size() == 3);
    CHECK_FALSE(is_connected(g));
    CHECK(vertex_connectivity(g) == 0);
    CHECK(vertex_connectivity(complete_graph(6)) == 5);
    CHECK(vertex_connectivity(cycle_graph(7)) == 2);
    CHECK(vertex_connectivity(path_graph(4)) == 1);
    CHECK(vertex_connectivity(complete_graph(1)) == 0);
    CHECK(local_vertex_connectivity(cycle_graph(6), 0, 3) == 2);
}

TEST_CASE("export formats") {
    Graph g(std::vector<Label>{2, 3, 4});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    std::ostringstream dot, edges;
    write_dot(dot, g, "G");
    write_edge_list(edges, g);
    CHECK(dot.str().find("graph \"G\"") != std::string::npos);
    CHECK(dot.str().find("v0 -- v1;") != std::string::npos);
    CHECK(edges.str() == "2 3\n3 4\n");
}

TEST_CASE("matrices of a path") {
    const auto p = path_graph(3);
    const auto a = adjacency_matrix(p);
    const auto l = laplacian_matrix(p);
    const auto q = signless_laplacian_matrix(p);
    const auto nl = normalized_laplacian_matrix(p);
    CHECK(a(0, 1) == 1.0);
    CHECK(l(1, 1) == 2.0);
    CHECK(l(0, 1) == -1.0);
    CHECK(q(0, 1) == 1.0);
    CHECK(nl(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(nl(1, 1) == 1.0);
    const auto iso = normalized_laplacian_matrix(null_graph(2));
    CHECK(iso(0, 0) == 0.0);
}

TEST_CASE("known spectra") {
    const auto k4 = laplacian_spectrum(complete_graph(4));
    CHECK(k4.multiplicity_of(4.0) == 3);
    CHECK(k4.multiplicity_of(0.0) == 1);
    const auto c5 = symmetric_eigenvalues(adjacency_matrix(cycle_graph(5)));
    CHECK(c5.max() == doctest::Approx(2.0));
    CHECK(c5.multiplicity_of(2 * std::cos(2 * M_PI / 5)) == 2);
    const auto entries = k4.entries();
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].value == doctest::Approx(4.0));
    CHECK(entries[0].multiplicity == 3);
}

TEST_CASE("spectrum grouping and comparison") {
    Spectrum s({1.0, 1.0 + 5e-9, 2.0, 0.0});
    CHECK(s.values().front() == 0.0);
    CHECK(s.entries().size() == 3);
    CHECK(s.multiplicity_of(1.0) == 2);
    CHECK(s.sum() == doctest::Approx(4.0));
    CHECK(max_abs_deviation(s, Spectrum({0.0, 1.0})) == INFINITY);
    CHECK(spectra_match(s, Spectrum({0.0, 1.0, 1.0, 2.0}), 1e-8));
    CHECK(s.merged(Spectrum({7.0})).size() == 5);
}

TEST_CASE("join rule rejects malformed input") {
    CHECK_THROWS_AS(join_laplacian_spectrum(Spectrum({1.0, 2.0}), 2, Spectrum({0.0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(join_laplacian_spectrum(Spectrum({0.0, 2.0}), 3, Spectrum({0.0}), 1), std::invalid_argument);
    const auto s = join_laplacian_spectrum(Spectrum({0.0}), 1, Spectrum({0.0}), 1);
    CHECK(spectra_match(s, Spectrum({0.0, 2.0}), 1e-12));
}

TEST_CASE("Jacobi agrees with an independent eigensolver") {
    std::mt19937_64 rng(20241);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng() % 14;
        SymMatrix m(dim);
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j) m.set(i, j, u(rng));
        const auto ours = jacobi_eigenvalues(m);
        const auto ref = oracle::eigen_symmetric(m);
        REQUIRE(ours.size() == ref.size());
        for (std::size_t i = 0; i < dim; ++i) CHECK(ours[i] == doctest::Approx(ref[i]).epsilon(1e-10));
    }
    CHECK(jacobi_eigenvalues(SymMatrix(0)).empty());
}

TEST_CASE("Jacobi reports non-convergence") {
    SymMatrix m(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) m.set(i, j, 1.0 + i + j);
    CHECK_THROWS_AS(jacobi_eigenvalues(m, JacobiOptions{1e-300, 1}), ConvergenceError);
}

TEST_CASE("property: join Laplacian rule on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> order(1, 10);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g1 = oracle::random_graph(rng, order(rng), dens(rng));
        const auto g2 = oracle::random_graph(rng, order(rng), dens(rng));
        const auto direct = laplacian_spectrum(join(g1, g2));
        const auto rule =
            join_laplacian_spectrum(laplacian_spectrum(g1), g1.order(), laplacian_spectrum(g2), g2.order());
        CHECK(max_abs_deviation(direct, rule) < 1e-8);
    }
}

TEST_CASE("property: trace and component identities") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> order(1, 12);
    std::uniform_real_distribution<double> dens(0.0, 0.7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(rng, order(rng), dens(rng));
        const double e = static_cast<double>(g.edge_count());
        const auto sa = symmetric_eigenvalues(adjacency_matrix(g));
        const auto sl = laplacian_spectrum(g);
        const auto sq = symmetric_eigenvalues(signless_laplacian_matrix(g));
        const auto sn = symmetric_eigenvalues(normalized_laplacian_matrix(g));
        CHECK(std::abs(sa.sum()) < 1e-8);
        CHECK(std::abs(sum_of_squares(sa) - 2 * e) < 1e-8);
        CHECK(std::abs(sl.sum() - 2 * e) < 1e-8);
        CHECK(std::abs(sq.sum() - 2 * e) < 1e-8);
        CHECK(std::abs(sum_of_squares(sl) - (degree_square_sum(g) + 2 * e)) < 1e-7);
        CHECK(std::abs(sn.sum() - static_cast<double>(non_isolated(g))) < 1e-8);
        CHECK(sl.multiplicity_of(0.0) == components(g).size());
        CHECK(sl.min() > -1e-8);
        CHECK(sn.max() < 2.0 + 1e-8);
    }
}

TEST_CASE("property: Fiedler relation b = |V| - a(complement)") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> order(2, 12);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = oracle::random_graph(rng, order(rng), dens(rng));
        const auto s = laplacian_spectrum(g);
        const auto sc = laplacian_spectrum(complement(g));
        CHECK(std::abs(s.max() - (static_cast<double>(g.order()) - sc.values()[1])) < 1e-8);
    }
}

TEST_CASE("property: max-flow connectivity equals exhaustive removal") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> order(1, 9);
    std::uniform_real_distribution<double> dens(0.2, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = oracle::random_graph(rng, order(rng), dens(rng));
        CHECK(vertex_connectivity(g) == oracle::exhaustive_vertex_connectivity(g));
    }
}
