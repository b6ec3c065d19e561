// Writes graphs<n>.g6 (every graph of order n up to isomorphism) for n = 1..max
// into a directory. Used as a test fixture in place of an external generator.

#include "graph_enumeration.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: make_corpus <directory> <max-order>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    const auto max_order = static_cast<std::size_t>(std::strtoul(argv[2], nullptr, 10));
    std::filesystem::create_directories(dir);
    const auto levels = dompoly::testing::all_graphs_up_to(max_order);
    for (std::size_t n = 1; n <= max_order; ++n) {
        std::ofstream out(dir / ("graphs" + std::to_string(n) + ".g6"));
        out << ">>graph6<<";
        for (const auto& g : levels[n]) out << g << '\n';
        std::cout << "order " << n << ": " << levels[n].size() << " graphs\n";
    }
    return 0;
}
