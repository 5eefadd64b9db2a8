#include "doctest.h"

#include <map>
#include <set>

#include "ezn/essential_graph.hpp"
#include "support/oracles.hpp"

using namespace ezn;

namespace {

std::set<std::pair<Label, Label>> labeled_edges(const Graph& g) {
    std::set<std::pair<Label, Label>> out;
    for (auto [u, v] : g.edges()) out.insert(std::minmax(g.label(u), g.label(v)));
    return out;
}

// Edge set straight from integer generators: d ~ e iff gcd(d, e) generates
// an essential ideal (gcd 1 is the unit ideal, which counts).
std::set<std::pair<Label, Label>> generator_edges(std::uint64_t n) {
    std::set<std::pair<Label, Label>> out;
    const auto divs = oracle::proper_divisors(n);
    for (std::size_t i = 0; i < divs.size(); ++i)
        for (std::size_t j = i + 1; j < divs.size(); ++j)
            if (oracle::essential_by_generators(std::gcd(divs[i], divs[j]), n)) out.insert({divs[i], divs[j]});
    return out;
}

}  // namespace

TEST_CASE("brute-force graph for small n") {
    SUBCASE("n = 12") {
        const auto g = build_essential_graph_bruteforce(factorize(12));
        CHECK(labeled_edges(g) == std::set<std::pair<Label, Label>>{{2, 3}, {2, 4}, {2, 6}, {3, 4}, {4, 6}});
        CHECK_FALSE(g.adjacent(*g.index_of(3), *g.index_of(6)));
    }
    SUBCASE("n = 8 and n = 6 are K_2") {
        for (std::uint64_t n : {8u, 6u}) {
            const auto g = build_essential_graph_bruteforce(factorize(n));
            CHECK(g.order() == 2);
            CHECK(g.complete());
        }
    }
    SUBCASE("n = 4 is a single vertex") {
        const auto g = build_essential_graph_bruteforce(factorize(4));
        CHECK(g.order() == 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("agrees with the generator-level oracle") {
        for (std::uint64_t n = 4; n <= 400; ++n) {
            if (is_prime(n)) continue;
            CHECK(labeled_edges(build_essential_graph_bruteforce(factorize(n))) == generator_edges(n));
        }
    }
}

TEST_CASE("class partition") {
    SUBCASE("n = 60") {
        const auto p = class_partition(factorize(60));
        REQUIRE(p.classes.size() == 6);
        std::map<std::string, std::size_t> sizes;
        for (const auto& c : p.classes) sizes[c.xi.to_string()] = c.size();
        CHECK(sizes == std::map<std::string, std::size_t>{
                           {"{1}", 1}, {"{2}", 2}, {"{3}", 2}, {"{1,2}", 1}, {"{1,3}", 1}, {"{2,3}", 2}});
        CHECK(p.total_members() == 10 - 1);
        CHECK(p.index_of(IndexSet::of({1, 3})) == 4);
        CHECK_THROWS_AS(p.index_of(IndexSet::of({1, 2, 3})), std::out_of_range);
    }
    SUBCASE("n = 12") {
        const auto f = factorize(12);
        const auto p = class_partition(f);
        REQUIRE(p.classes.size() == 2);
        CHECK(p.classes[0].xi == IndexSet::of({1}));
        CHECK(p.classes[0].size() == 1);
        CHECK(f.generator(p.classes[0].representative.exps) == 4);
        CHECK(p.classes[1].size() == 2);
        CHECK(f.generator(p.classes[1].representative.exps) == 3);
    }
    SUBCASE("n = p q") {
        const auto p = class_partition(factorize(35));
        REQUIRE(p.classes.size() == 2);
        CHECK(p.classes[0].size() == 1);
        CHECK(p.classes[1].size() == 1);
    }
    SUBCASE("prime powers give an empty partition") {
        CHECK(class_partition(factorize(32)).classes.empty());
    }
    SUBCASE("invariants hold across a range") {
        for (std::uint64_t n = 4; n <= 3000; ++n) {
            if (is_prime(n)) continue;
            const auto f = factorize(n);
            if (f.k() < 2) continue;
            const auto p = class_partition(f);
            CHECK(p.classes.size() == (std::size_t{1} << f.k()) - 2);
            CHECK(p.total_members() == f.ideal_count() - f.essential_count());
            for (const auto& c : p.classes) {
                std::size_t expect = 1;
                for (std::size_t i = 0; i < f.k(); ++i)
                    if (!c.xi.contains(static_cast<int>(i + 1))) expect *= static_cast<std::size_t>(f.exponents[i]);
                CHECK(c.size() == expect);
                for (const auto& member : c.members) CHECK(xi_set(member.exps, f) == c.xi);
            }
        }
    }
}

TEST_CASE("host graph") {
    SUBCASE("k = 2 is K_2") {
        const auto h = build_host_graph(factorize(12));
        CHECK(h.order() == 2);
        CHECK(h.complete());
    }
    SUBCASE("k = 3 is the corona of a triangle") {
        const auto h = build_host_graph(factorize(60));
        CHECK(h.order() == 6);
        CHECK(h.edge_count() == 6);
        std::multiset<std::size_t> degrees;
        for (std::size_t v = 0; v < 6; ++v) degrees.insert(h.degree(v));
        CHECK(degrees == std::multiset<std::size_t>{1, 1, 1, 3, 3, 3});
        // singletons form the triangle; {i,j} hangs off the complementary singleton
        CHECK(h.adjacent(0, 1));
        CHECK(h.adjacent(1, 2));
        CHECK(h.adjacent(0, 2));
        CHECK(h.adjacent(0, 5));
        CHECK(h.adjacent(1, 4));
        CHECK(h.adjacent(2, 3));
    }
    SUBCASE("k = 4 has 14 vertices") {
        const auto h = build_host_graph(factorize(210));
        CHECK(h.order() == 14);
        CHECK(h.edge_count() == 25);
    }
    SUBCASE("edges are exactly the disjoint pairs") {
        const auto f = factorize(2 * 3 * 5 * 7 * 11);
        const auto p = class_partition(f);
        const auto h = build_host_graph(f, p);
        for (std::size_t i = 0; i < h.order(); ++i)
            for (std::size_t j = i + 1; j < h.order(); ++j)
                CHECK(h.adjacent(i, j) == p.classes[i].xi.disjoint(p.classes[j].xi));
    }
}

TEST_CASE("annihilating-ideal graph of a squarefree modulus") {
    const auto g = build_aig_squarefree({2, 3});
    CHECK(g.labels() == std::vector<Label>{2, 3});
    CHECK(g.complete());
    const auto g3 = build_aig_squarefree({2, 3, 5});
    CHECK(g3.order() == 6);
    CHECK(g3.edge_count() == 6);
    CHECK(g3.adjacent(*g3.index_of(2), *g3.index_of(15)));
    CHECK_FALSE(g3.adjacent(*g3.index_of(2), *g3.index_of(6)));
}

TEST_CASE("psi is an isomorphism onto the annihilating-ideal graph") {
    const auto check = iso_psi(factorize(60));
    CHECK(check.ok());
    REQUIRE(check.mapping.size() == 6);
    CHECK(check.mapping[0] == std::pair<Label, Label>{4, 15});  // {1} -> p2 p3
    CHECK(check.mapping[5] == std::pair<Label, Label>{15, 2});  // {2,3} -> p1
    for (std::uint64_t n : {12u, 36u, 210u, 2310u, 1800u, 27000u}) CHECK(iso_psi(factorize(n)).ok());
}

TEST_CASE("structured assembly equals the definition") {
    for (std::uint64_t n = 4; n <= 1500; ++n) {
        if (is_prime(n)) continue;
        const auto r = verify_structure(factorize(n));
        CHECK(r.equal);
        CHECK(r.equitable);
        CHECK(r.classes_independent);
        CHECK(r.assembled.order() == factorize(n).ideal_count());
    }
    const auto r60 = verify_structure(factorize(60));
    CHECK(r60.m == 1);
    CHECK(r60.factor_orders == std::vector<std::size_t>{1, 2, 2, 1, 1, 2});
    CHECK(r60.bruteforce.edge_count() == 23);
}

TEST_CASE("prime powers assemble to a clique") {
    for (std::uint64_t n : {4u, 8u, 27u, 64u, 625u}) {
        const auto f = factorize(n);
        const auto g = assemble_structured(f);
        CHECK(g.order() == f.ideal_count());
        CHECK(g.complete());
        CHECK(same_labeled_edges(g, build_essential_graph_bruteforce(f)));
    }
}

TEST_CASE("equitable partition checker") {
    const auto c4 = cycle_graph(4);
    CHECK(is_equitable(c4, {{0, 2}, {1, 3}}));
    CHECK_FALSE(is_equitable(path_graph(3), {{0, 1}, {2}}));
}

TEST_CASE("class colours") {
    const auto f = factorize(60);
    const auto g = build_essential_graph_bruteforce(f);
    const auto colors = class_colors(f, g);
    CHECK(colors.size() == g.order());
    CHECK(std::set<std::string>(colors.begin(), colors.end()).size() == 7);
}
