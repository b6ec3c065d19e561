#include "dompoly/errors.hpp"
#include "dompoly/families.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph6.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace dompoly;

namespace {

std::vector<std::size_t> set_of(const Graph& g, std::size_t v) { return g.closed_neighborhood(v).elements(); }

std::vector<GraphFamily> small_families() {
    std::vector<GraphFamily> out;
    for (std::size_t n = 1; n <= 10; ++n) {
        out.push_back(GraphFamily::cycle(n));
        out.push_back(GraphFamily::path(n));
        out.push_back(GraphFamily::complete(n));
        if (n >= 4) out.push_back(GraphFamily::wheel(n));
    }
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n + m <= 10; ++n) out.push_back(GraphFamily::join_complete_cycle(m, n));
    }
    return out;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("build_family") {
    const Graph triangle = build_family(GraphFamily::cycle(3));
    for (std::size_t v = 0; v < 3; ++v) CHECK(set_of(triangle, v) == std::vector<std::size_t>{0, 1, 2});

    const Graph k1 = build_family(GraphFamily::cycle(1));
    CHECK(k1.order() == 1);
    CHECK(set_of(k1, 0) == std::vector<std::size_t>{0});

    CHECK(build_family(GraphFamily::cycle(2)) == build_family(GraphFamily::complete(2)));
    CHECK(build_family(GraphFamily::wheel(4)) == build_family(GraphFamily::complete(4)));

    const Graph c6 = build_family(GraphFamily::cycle(6));
    CHECK(set_of(c6, 0) == std::vector<std::size_t>{0, 1, 5});
    CHECK(c6.edge_count() == 6);

    const Graph w6 = build_family(GraphFamily::wheel(6));
    CHECK(w6.degree(0) == 5);
    for (std::size_t v = 1; v < 6; ++v) CHECK(w6.degree(v) == 3);

    const Graph j = build_family(GraphFamily::join_complete_cycle(2, 5));
    CHECK(j.order() == 7);
    CHECK(j.adjacent(0, 1));
    CHECK(j.degree(0) == 6);
    CHECK(j.degree(2) == 4);
}

TEST_CASE("build_family rejects parameters outside the domain") {
    CHECK_THROWS_AS(build_family(GraphFamily::wheel(3)), DomainError);
    CHECK_THROWS_AS(build_family(GraphFamily::cycle(0)), DomainError);
    CHECK_THROWS_AS(build_family(GraphFamily::path(0)), DomainError);
    CHECK_THROWS_AS(build_family(GraphFamily::complete(0)), DomainError);
    CHECK_THROWS_AS(build_family(GraphFamily::join_complete_cycle(0, 3)), DomainError);
}

TEST_CASE("family spec parsing") {
    CHECK(GraphFamily::parse("cycle:7") == GraphFamily::cycle(7));
    CHECK(GraphFamily::parse("join:2,5") == GraphFamily::join_complete_cycle(2, 5));
    CHECK(GraphFamily::parse("wheel:6").to_string() == "wheel:6");
    CHECK_THROWS_AS(GraphFamily::parse("cycle"), DomainError);
    CHECK_THROWS_AS(GraphFamily::parse("cycle:x"), DomainError);
    CHECK_THROWS_AS(GraphFamily::parse("star:5"), DomainError);
    CHECK_THROWS_AS(GraphFamily::parse("join:3"), DomainError);
}

TEST_CASE("graph construction errors") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), DomainError);
    const std::vector<Edge> outside{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, outside), DomainError);
    const std::vector<Edge> repeated{{0, 1}, {1, 0}, {0, 1}};
    CHECK(Graph::from_edges(2, repeated).edge_count() == 1);
}

TEST_CASE("disjoint_union") {
    const Graph c3 = build_family(GraphFamily::cycle(3));
    const Graph two = disjoint_union(c3, c3);
    CHECK(two.order() == 6);
    CHECK(connected_components(two).size() == 2);
    CHECK(set_of(two, 4) == std::vector<std::size_t>{3, 4, 5});

    const Graph k1k1 = disjoint_union(Graph(1), Graph(1));
    CHECK(k1k1.order() == 2);
    CHECK(k1k1.edge_count() == 0);

    CHECK(disjoint_union(Graph(), c3) == c3);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 1 + trial % 7);
        const Graph h = random_graph(rng, 1 + trial % 5);
        const Graph u = disjoint_union(g, h);
        CHECK(satisfies_graph_invariants(u));
        CHECK(connected_components(u).size() == connected_components(g).size() + connected_components(h).size());
    }
}

TEST_CASE("join") {
    CHECK(join(Graph(1), build_family(GraphFamily::cycle(4))) == build_family(GraphFamily::wheel(5)));
    CHECK(join(Graph(1), Graph(1)) == build_family(GraphFamily::complete(2)));
    const Graph k2 = build_family(GraphFamily::complete(2));
    CHECK(join(k2, k2) == build_family(GraphFamily::complete(4)));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 1 + trial % 6);
        const Graph h = random_graph(rng, 1 + trial % 4);
        const Graph j = join(g, h);
        CHECK(satisfies_graph_invariants(j));
        for (std::size_t v = 0; v < j.order(); ++v) {
            const bool left = v < g.order();
            for (std::size_t u = left ? g.order() : 0; u < (left ? j.order() : g.order()); ++u) {
                CHECK(j.closed_neighborhood(v).contains(u));
            }
        }
    }
}

TEST_CASE("closure and symmetry hold for every builtin family") {
    for (const auto& f : small_families()) CHECK(satisfies_graph_invariants(build_family(f)));
    CHECK(satisfies_graph_invariants(Graph()));
}

TEST_CASE("has_duplicate_closed_neighborhoods") {
    CHECK(has_duplicate_closed_neighborhoods(build_family(GraphFamily::complete(3))));
    CHECK_FALSE(has_duplicate_closed_neighborhoods(build_family(GraphFamily::cycle(5))));
    // N[0] = {3,0,1} and N[2] = {1,2,3} differ; no pair coincides.
    CHECK_FALSE(has_duplicate_closed_neighborhoods(build_family(GraphFamily::cycle(4))));
    for (std::size_t n = 4; n <= 30; ++n) CHECK_FALSE(has_duplicate_closed_neighborhoods(build_family(GraphFamily::cycle(n))));
    CHECK_FALSE(has_duplicate_closed_neighborhoods(Graph(2)));
}

TEST_CASE("regularity helpers") {
    CHECK(regular_degree(build_family(GraphFamily::cycle(7))) == 2);
    CHECK(regular_degree(build_family(GraphFamily::path(4))) == -1);
    CHECK(regular_degree(Graph()) == -1);
    CHECK(degree_sequence(build_family(GraphFamily::wheel(5))) == std::vector<std::size_t>{4, 3, 3, 3, 3});
}

TEST_CASE("parse_graph6 known records") {
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    CHECK(parse_graph6("A_") == build_family(GraphFamily::complete(2)));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("?") == Graph());

    // 'w' = 56 = 111000b: edges 01, 02, 12.
    const Graph k3 = parse_graph6("Bw");
    CHECK(k3 == build_family(GraphFamily::complete(3)));
    CHECK(encode_graph6(k3) == "Bw");
}

TEST_CASE("encode_graph6 known records") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph()) == "?");
    // Reference strings from the graph6 format description.
    CHECK(encode_graph6(build_family(GraphFamily::cycle(5))) == "Dhc");
    CHECK(encode_graph6(build_family(GraphFamily::complete(4))) == "C~");
    CHECK(encode_graph6(build_family(GraphFamily::path(4))) == "Ch");
}

TEST_CASE("graph6 long form") {
    const Graph c70 = build_family(GraphFamily::cycle(70));
    const std::string text = encode_graph6(c70);
    CHECK(static_cast<unsigned char>(text[0]) == 126);
    CHECK(text.substr(1, 3) == std::string{char(63), char(64), char(63 + 6)});
    CHECK(parse_graph6(text) == c70);
    // Long header for an order that fits the short form is not canonical.
    CHECK_THROWS_AS(parse_graph6(std::string{char(126), char(63), char(63), char(65)}), ParseError);
}

TEST_CASE("graph6 round trip") {
    for (const auto& f : small_families()) {
        const Graph g = build_family(f);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, static_cast<std::size_t>(trial % 11));
        const std::string text = encode_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(encode_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("graph6 parse errors carry offsets") {
    auto offset_of = [](std::string_view record) -> std::size_t {
        try {
            parse_graph6(record);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return SIZE_MAX;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("B") == 1);         // truncated bit vector
    CHECK(offset_of("Bww") == 2);       // trailing byte
    CHECK(offset_of("B ") == 1);        // byte below 63
    CHECK(offset_of("Bx") == 1);        // nonzero padding
    CHECK(offset_of(std::string{char(126), char(63)}) == 2);  // truncated long header
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), UnsupportedFormatError);
    CHECK_THROWS_AS(parse_graph6("&B?"), UnsupportedFormatError);
}

TEST_CASE("graph6 stream reading") {
    std::istringstream in(">>graph6<<Bw\n\nA_\r\n@\n:Fa@x^\n");
    const auto records = read_graph6_records(in);
    REQUIRE(records.size() == 4);
    CHECK(records[0].text == "Bw");
    CHECK(records[0].line == 1);
    CHECK(records[1].text == "A_");
    CHECK(records[1].line == 3);
    CHECK(records[3].text == ":Fa@x^");
    CHECK_THROWS_AS(read_graph6_file("/nonexistent/file.g6"), Error);
}
