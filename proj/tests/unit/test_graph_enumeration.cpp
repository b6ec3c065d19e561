#include "graph_enumeration.hpp"

#include "dompoly/graph.hpp"
#include "dompoly/graph6.hpp"

#include <doctest.h>

#include <set>

using namespace dompoly;

TEST_CASE("non-isomorphic graph counts") {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n <= 7; ++n) CHECK(testing::all_graphs(n).size() == expected[n]);
}

TEST_CASE("connected graph counts") {
    const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) {
        std::size_t connected = 0;
        for (const auto& text : testing::all_graphs(n)) {
            if (connected_components(parse_graph6(text)).size() == 1) ++connected;
        }
        CHECK(connected == expected[n - 1]);
    }
}

TEST_CASE("edge-count distribution for order 5") {
    // Graphs on 5 vertices by edge count 0..10.
    const std::size_t expected[] = {1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1};
    std::size_t by_edges[11] = {};
    for (const auto& text : testing::all_graphs(5)) ++by_edges[parse_graph6(text).edge_count()];
    for (std::size_t m = 0; m <= 10; ++m) CHECK(by_edges[m] == expected[m]);
}

TEST_CASE("output is sorted, duplicate-free and of the right order") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto graphs = testing::all_graphs(n);
        CHECK(std::is_sorted(graphs.begin(), graphs.end()));
        CHECK(std::set<std::string>(graphs.begin(), graphs.end()).size() == graphs.size());
        for (const auto& text : graphs) CHECK(parse_graph6(text).order() == n);
    }
}

TEST_CASE("order 8") {
    CHECK(testing::all_graphs(8).size() == 12346);
}
