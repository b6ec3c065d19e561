#include "dompoly/classify.hpp"

#include "dompoly/errors.hpp"
#include "dompoly/parallel.hpp"

#include <algorithm>
#include <map>
#include <variant>

namespace dompoly {

namespace {

struct Skipped {};

using Outcome = std::variant<Skipped, IntPolynomial, std::string>;

}  // namespace

const EquivalenceClassReport* ClassificationResult::find(const IntPolynomial& p) const {
    for (const auto& c : classes) {
        if (c.key_polynomial == p) return &c;
    }
    return nullptr;
}

ClassificationResult classify_corpus(std::span<const Graph6Record> records, const ClassifyOptions& options) {
    OracleOptions oracle = options.oracle;
    oracle.threads = 1;
    oracle.chunks = 1;

    std::vector<Outcome> outcomes(records.size());
    parallel_for(records.size(), options.threads, [&](std::size_t i) {
        try {
            const Graph g = parse_graph6(records[i].text);
            if (options.order && g.order() != *options.order) return;
            outcomes[i] = domination_polynomial(g, oracle);
        } catch (const Error& e) {
            outcomes[i] = std::string(e.what());
        }
    });

    ClassificationResult result;
    std::map<std::string, EquivalenceClassReport> by_key;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (const auto* poly = std::get_if<IntPolynomial>(&outcomes[i])) {
            auto [it, inserted] = by_key.try_emplace(poly->key());
            if (inserted) it->second.key_polynomial = *poly;
            it->second.members.push_back(records[i].text);
            ++result.graphs;
        } else if (const auto* message = std::get_if<std::string>(&outcomes[i])) {
            result.errors.push_back({records[i].line, records[i].text, *message});
        }
    }

    result.classes.reserve(by_key.size());
    for (auto& [key, report] : by_key) {
        std::sort(report.members.begin(), report.members.end());
        result.classes.push_back(std::move(report));
    }
    std::sort(result.classes.begin(), result.classes.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.class_size() != rhs.class_size()) return lhs.class_size() > rhs.class_size();
        return lhs.key_polynomial < rhs.key_polynomial;
    });
    return result;
}

}  // namespace dompoly
