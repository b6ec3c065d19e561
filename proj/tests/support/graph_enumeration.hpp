#pragma once

// All graphs of a given order up to isomorphism, for building test corpora.
// Graphs are grown one vertex at a time and deduplicated by a canonical form
// found with colour refinement plus individualisation (every branch explored).

#include <cstddef>
#include <string>
#include <vector>

namespace dompoly::testing {

/// Canonical graph6 strings of every graph of order n (n <= 10), sorted.
std::vector<std::string> all_graphs(std::size_t n);

/// all_graphs for every order 0..max_order.
std::vector<std::vector<std::string>> all_graphs_up_to(std::size_t max_order);

}  // namespace dompoly::testing
