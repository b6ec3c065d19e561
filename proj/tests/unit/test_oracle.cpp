#include "dompoly/errors.hpp"
#include "dompoly/families.hpp"
#include "dompoly/oracle.hpp"
#include "naive_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace dompoly;
using dompoly::testing::naive_domination_counts;

namespace {

std::vector<BigInt> counts(std::initializer_list<long> values) {
    std::vector<BigInt> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

IntPolynomial naive_polynomial(const Graph& g) {
    if (g.order() == 0) return IntPolynomial::constant(1);
    std::vector<BigInt> c;
    for (auto x : naive_domination_counts(g)) c.emplace_back(static_cast<unsigned long>(x));
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("domination_profile of small cycles") {
    CHECK(domination_profile(build_family(GraphFamily::cycle(3))).counts == counts({3, 3, 1}));
    CHECK(domination_profile(build_family(GraphFamily::complete(2))).counts == counts({2, 1}));
    // Enumerated by hand over the 15 nonempty subsets of C4.
    CHECK(domination_profile(build_family(GraphFamily::cycle(4))).counts == counts({0, 6, 4, 1}));
    CHECK(domination_profile(Graph()).counts.empty());
}

TEST_CASE("domination_polynomial") {
    CHECK(domination_polynomial(Graph(1)) == IntPolynomial::x());
    const Graph c3 = build_family(GraphFamily::cycle(3));
    CHECK(domination_polynomial(disjoint_union(c3, c3)) == IntPolynomial{0, 0, 9, 18, 15, 6, 1});
    CHECK(domination_polynomial(build_family(GraphFamily::wheel(4))) == IntPolynomial{0, 4, 6, 4, 1});
    CHECK(domination_polynomial(build_family(GraphFamily::cycle(6))) == IntPolynomial{0, 0, 3, 14, 15, 6, 1});
    CHECK(domination_polynomial(Graph()) == IntPolynomial::constant(1));
    // Edgeless graph: only the full set dominates.
    CHECK(domination_polynomial(Graph(5)) == IntPolynomial::monomial(1, 5));
}

TEST_CASE("domination_number") {
    CHECK(domination_number(build_family(GraphFamily::cycle(7))).gamma == 3);
    CHECK(domination_number(build_family(GraphFamily::complete(5))).gamma == 1);
    const Graph c3 = build_family(GraphFamily::cycle(3));
    CHECK(domination_number(disjoint_union(c3, c3)).gamma == 2);
    CHECK(domination_number(Graph()).undominatable());
    CHECK(domination_number(Graph(4)).gamma == 4);
    OracleOptions factored;
    factored.factor_components = true;
    CHECK(domination_number(disjoint_union(c3, build_family(GraphFamily::cycle(7))), factored).gamma == 4);
}

TEST_CASE("size guard") {
    const Graph big = build_family(GraphFamily::cycle(25));
    CHECK_THROWS_AS(domination_polynomial(big), SizeGuardError);
    CHECK_THROWS_AS(domination_number(big), SizeGuardError);
    try {
        domination_profile(big);
    } catch (const SizeGuardError& e) {
        CHECK(std::string(e.what()).find("--guard-override") != std::string::npos);
    }
    OracleOptions raised;
    raised.guard = 100;
    CHECK_THROWS_AS(domination_polynomial(build_family(GraphFamily::cycle(63)), raised), SizeGuardError);

    // Component factoring applies the guard per component.
    OracleOptions factored;
    factored.factor_components = true;
    const Graph c13 = build_family(GraphFamily::cycle(13));
    const Graph two = disjoint_union(c13, c13);
    CHECK_THROWS_AS(domination_polynomial(two), SizeGuardError);
    const IntPolynomial d13 = domination_polynomial(c13);
    CHECK(domination_polynomial(two, factored) == d13 * d13);
}

TEST_CASE("oracle agrees with the naive reference counter") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_graph(rng, static_cast<std::size_t>(trial % 13), 0.15 + 0.05 * (trial % 12));
        CHECK(domination_polynomial(g) == naive_polynomial(g));
    }
}

TEST_CASE("D(G u H) = D(G) D(H)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(rng, 1 + static_cast<std::size_t>(trial % 7), 0.4);
        const Graph h = random_graph(rng, 1 + static_cast<std::size_t>((trial * 5) % 7), 0.6);
        CHECK(domination_polynomial(disjoint_union(g, h)) == domination_polynomial(g) * domination_polynomial(h));
    }
    const Graph c3 = build_family(GraphFamily::cycle(3));
    const Graph c4 = build_family(GraphFamily::cycle(4));
    CHECK(domination_polynomial(disjoint_union(c4, c3)) == IntPolynomial{0, 0, 0, 18, 30, 21, 7, 1});
}

TEST_CASE("profile invariants") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
        const Graph g = random_graph(rng, n, 0.3);
        const auto profile = domination_profile(g);
        REQUIRE(profile.counts.size() == n);
        CHECK(profile.counts[n - 1] == 1);
        BigInt binomial = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            binomial = binomial * static_cast<unsigned long>(n - i + 1) / static_cast<unsigned long>(i);
            CHECK(profile.count(i) <= binomial);
            if (i < n && profile.count(i) > 0) CHECK(profile.count(i + 1) > 0);
        }
        const auto gamma = domination_number(g).gamma;
        REQUIRE(gamma.has_value());
        CHECK(profile.polynomial().lowest_degree() == *gamma);
    }
}

TEST_CASE("result does not depend on chunking or threads") {
    std::mt19937_64 rng(77);
    const Graph g = random_graph(rng, 20, 0.2);
    OracleOptions serial;
    serial.threads = 1;
    serial.chunks = 1;
    const auto reference = domination_profile(g, serial);
    for (unsigned threads : {1U, 2U, 4U}) {
        for (std::size_t chunks : {1U, 3U, 7U, 64U, 5000U}) {
            OracleOptions opts;
            opts.threads = threads;
            opts.chunks = chunks;
            CHECK(domination_profile(g, opts) == reference);
        }
    }
    OracleOptions factored;
    factored.factor_components = true;
    CHECK(domination_profile(g, factored) == reference);
}

TEST_CASE("relabelling does not change the profile") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
        const Graph g = random_graph(rng, n, 0.35);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> moved;
        for (const auto& [u, v] : g.edges()) moved.emplace_back(perm[u], perm[v]);
        CHECK(domination_profile(Graph::from_edges(n, moved)) == domination_profile(g));
    }
}

TEST_CASE("order 24 enumeration at the default guard") {
    const Graph c24 = build_family(GraphFamily::cycle(24));
    const auto profile = domination_profile(c24);
    CHECK(profile.count(8) == 3);  // gamma(C24) = 8, three shifted perfect codes
    CHECK(profile.count(7) == 0);
    CHECK(profile.count(24) == 1);
}
