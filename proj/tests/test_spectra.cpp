#include "doctest.h"

#include <cmath>

#include "ezn/spectra.hpp"
#include "support/oracles.hpp"

using namespace ezn;

namespace {

bool close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("names round-trip") {
    for (auto kind : kAllKinds) CHECK(parse_matrix_kind(to_string(kind)) == kind);
    CHECK(parse_scope("full") == Scope::full);
    CHECK_THROWS_AS(parse_matrix_kind("bogus"), std::invalid_argument);
}

TEST_CASE("class weights for n = 60") {
    const auto w = class_weights(factorize(60));
    CHECK(w.size == std::vector<std::uint64_t>{1, 2, 2, 1, 1, 2});
    CHECK(w.neighbor_size == std::vector<std::uint64_t>{6, 4, 4, 2, 2, 1});
    CHECK_THROWS_AS(class_weights(factorize(16)), std::invalid_argument);
}

TEST_CASE("quotient matrices for n = 60") {
    const auto f = factorize(60);
    const auto ca = quotient_matrix(f, MatrixKind::adjacency);
    CHECK(ca(0, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(ca(1, 2) == doctest::Approx(2.0));
    CHECK(ca(0, 5) == doctest::Approx(std::sqrt(2.0)));
    CHECK(ca(0, 3) == 0.0);
    const auto cl = quotient_matrix(f, MatrixKind::laplacian);
    CHECK(cl(0, 0) == 6.0);
    CHECK(cl(1, 2) == doctest::Approx(-2.0));
    CHECK(cl(5, 5) == 1.0);
    const auto cq = quotient_matrix(f, MatrixKind::signless);
    CHECK(cq(2, 3) == doctest::Approx(std::sqrt(2.0)));
    const auto cn = quotient_matrix(f, MatrixKind::normalized);
    CHECK(cn(0, 1) == doctest::Approx(-1.0 / std::sqrt(12.0)));
    CHECK(cn(0, 5) == doctest::Approx(-1.0 / std::sqrt(3.0)));
    CHECK(cn(1, 2) == doctest::Approx(-0.5));
    const auto cp = quotient_matrix(f, MatrixKind::normalized, NormalizedSign::positive);
    CHECK(cp(1, 2) == doctest::Approx(0.5));
}

TEST_CASE("characteristic polynomials of the n = 60 quotients") {
    const auto f = factorize(60);
    auto roots_of = [](auto poly, const std::vector<double>& xs) {
        for (double x : xs) CHECK(std::abs(poly(x)) < 1e-8);
    };
    const auto l = symmetric_eigenvalues(quotient_matrix(f, MatrixKind::laplacian)).values();
    roots_of([](double x) { return x * (x - 3) * (x * x - 8 * x + 6) * (x * x - 8 * x + 10); }, l);
    const auto q = symmetric_eigenvalues(quotient_matrix(f, MatrixKind::signless)).values();
    roots_of([](double x) {
        return (x * x - 4 * x + 2) * (std::pow(x, 4) - 15 * std::pow(x, 3) + 66 * x * x - 90 * x + 32);
    }, q);
    const auto nl = symmetric_eigenvalues(quotient_matrix(f, MatrixKind::normalized)).values();
    roots_of([](double x) { return x * (4 * x * x - 10 * x + 5) * (12 * x * x * x - 42 * x * x + 45 * x - 14); }, nl);
}

TEST_CASE("theorem spectra for n = 60") {
    const auto f = factorize(60);
    SUBCASE("laplacian") {
        const auto d = spectrum_via_theorem(f, MatrixKind::laplacian);
        CHECK(d.fixed_part.multiplicity_of(4.0) == 2);
        CHECK(d.fixed_part.multiplicity_of(1.0) == 1);
        CHECK(d.combined.size() == 9);
        const std::vector<double> expect{0, 4 - std::sqrt(10.0), 1, 4 - std::sqrt(6.0), 3, 4, 4,
                                         4 + std::sqrt(6.0), 4 + std::sqrt(10.0)};
        CHECK(close(d.combined.values(), expect, 1e-8));
    }
    SUBCASE("adjacency") {
        const auto d = spectrum_via_theorem(f, MatrixKind::adjacency);
        CHECK(d.fixed_part.multiplicity_of(0.0) == 3);
        CHECK(d.combined.size() == 9);
        const auto ref = oracle::eigen_symmetric(adjacency_matrix(nonessential_subgraph(
            build_essential_graph_bruteforce(f), f)));
        CHECK(close(d.combined.values(), ref, 1e-8));
        double squares = 0.0;
        for (double v : d.combined.values()) squares += v * v;
        CHECK(squares == doctest::Approx(2.0 * 14));
    }
    SUBCASE("normalized") {
        const auto d = spectrum_via_theorem(f, MatrixKind::normalized);
        CHECK(d.fixed_part.multiplicity_of(1.0) == 3);
        CHECK(d.combined.multiplicity_of(1.0) == 3);
        CHECK(d.combined.multiplicity_of((5 + std::sqrt(5.0)) / 4) == 1);
    }
}

TEST_CASE("theorem spectra agree with brute force and with Eigen") {
    for (std::uint64_t n = 6; n <= 1200; ++n) {
        if (is_prime(n)) continue;
        const auto f = factorize(n);
        if (f.k() < 2) continue;
        const auto sub = nonessential_subgraph(build_essential_graph_bruteforce(f), f);
        for (auto kind : kAllKinds) {
            const auto theorem = spectrum_via_theorem(f, kind).combined;
            const auto brute = spectrum_bruteforce(f, kind, Scope::subgraph);
            CHECK(max_abs_deviation(theorem, brute) < 1e-8);
            CHECK(close(theorem.values(), oracle::eigen_symmetric(graph_matrix(sub, kind)), 1e-8));
        }
    }
}

TEST_CASE("positive-sign normalized quotient only matches when the host is bipartite") {
    const auto f60 = factorize(60);
    const auto neg = spectrum_via_theorem(f60, MatrixKind::normalized, 1e-8, NormalizedSign::negative).combined;
    const auto pos = spectrum_via_theorem(f60, MatrixKind::normalized, 1e-8, NormalizedSign::positive).combined;
    const auto brute = spectrum_bruteforce(f60, MatrixKind::normalized, Scope::subgraph);
    CHECK(max_abs_deviation(neg, brute) < 1e-8);
    CHECK(max_abs_deviation(pos, brute) > 1e-3);
    for (std::uint64_t n : {12u, 36u, 72u, 200u}) {
        const auto f = factorize(n);
        const auto p = spectrum_via_theorem(f, MatrixKind::normalized, 1e-8, NormalizedSign::positive).combined;
        CHECK(max_abs_deviation(p, spectrum_bruteforce(f, MatrixKind::normalized, Scope::subgraph)) < 1e-8);
    }
}

TEST_CASE("full Laplacian through the join rule") {
    for (std::uint64_t n = 4; n <= 800; ++n) {
        if (is_prime(n)) continue;
        const auto f = factorize(n);
        CHECK(max_abs_deviation(full_laplacian_via_structure(f), spectrum_bruteforce(f, MatrixKind::laplacian,
                                                                                      Scope::full)) < 1e-8);
    }
    const auto s60 = full_laplacian_via_structure(factorize(60));
    CHECK(s60.max() == doctest::Approx(10.0));
    CHECK(s60.size() == 10);
}

TEST_CASE("weighted Laplacian has the quotient spectrum") {
    for (std::uint64_t n : {12u, 60u, 180u, 210u, 420u, 900u, 2310u, 4620u}) {
        const auto f = factorize(n);
        const auto w = weighted_laplacian(f);
        for (std::size_t i = 0; i < w.dim(); ++i) {
            std::int64_t row = 0;
            for (std::size_t j = 0; j < w.dim(); ++j) row += w(i, j);
            CHECK(row == 0);
        }
        const auto general = oracle::eigen_general(w);
        const auto cl = symmetric_eigenvalues(quotient_matrix(f, MatrixKind::laplacian)).values();
        CHECK(close(general, cl, 1e-7));
    }
}

TEST_CASE("exact determinant and rank") {
    IntMatrix m(3);
    m(0, 0) = 2; m(0, 1) = -1; m(0, 2) = 0;
    m(1, 0) = -1; m(1, 1) = 2; m(1, 2) = -1;
    m(2, 0) = 0; m(2, 1) = -1; m(2, 2) = 2;
    CHECK(exact_determinant(m) == "4");
    CHECK(exact_rank(m) == 3);
    IntMatrix s(2);
    s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
    CHECK(exact_determinant(s) == "0");
    CHECK(exact_rank(s) == 1);
    IntMatrix big(2);
    big(0, 0) = 3000000000; big(1, 1) = 3000000000;
    CHECK(exact_determinant(big) == "9000000000000000000");
    CHECK(exact_determinant(IntMatrix(0)) == "1");
}

TEST_CASE("Laplacian integrality") {
    SUBCASE("two prime factors are integral") {
        for (std::uint64_t n : {6u, 12u, 36u, 48u, 144u, 1296u, 10000u, 2u * 2 * 2 * 2 * 3 * 3 * 3 * 3}) {
            const auto cert = is_laplacian_integral(factorize(n));
            CHECK(cert.integral);
            CHECK(cert.integer_spectrum.size() == 2);
            for (const auto& c : cert.checks) {
                CHECK(c.screened);
                CHECK(c.determinant == "0");
            }
        }
    }
    SUBCASE("n = 60 is not") {
        const auto cert = is_laplacian_integral(factorize(60));
        CHECK_FALSE(cert.integral);
        REQUIRE(cert.offending.has_value());
        CHECK(std::abs(*cert.offending - std::round(*cert.offending)) > 1e-6);
        bool has_nonzero_det = false;
        for (const auto& c : cert.checks) has_nonzero_det = has_nonzero_det || c.determinant != "0";
        CHECK(has_nonzero_det);
        CHECK(cert.summary().find("not integral") != std::string::npos);
    }
    SUBCASE("prime powers are complete graphs") {
        CHECK(is_laplacian_integral(factorize(32)).integral);
    }
}
