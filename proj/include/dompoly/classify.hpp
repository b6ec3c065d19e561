#pragma once

#include "dompoly/graph6.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/report.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dompoly {

/// A corpus record that could not be classified.
struct RecordError {
    std::size_t line = 0;
    std::string record;
    std::string message;
};

struct ClassificationResult {
    /// Sorted by class size (largest first), then by key polynomial.
    std::vector<EquivalenceClassReport> classes;
    std::vector<RecordError> errors;
    std::size_t graphs = 0;  // records classified

    /// Class whose key equals `p`, or nullptr.
    const EquivalenceClassReport* find(const IntPolynomial& p) const;
};

struct ClassifyOptions {
    /// Oracle settings per graph; graphs are spread over `threads` workers instead.
    OracleOptions oracle{};
    unsigned threads = 0;
    /// When set, records of any other order are skipped silently.
    std::optional<std::size_t> order;
};

/// Groups corpus graphs by exact domination polynomial.
///
/// Grouping keys are the full coefficient strings, so two graphs share a class
/// only if their polynomials are equal. Parse and size-guard failures are
/// collected in `errors` and do not stop the run.
ClassificationResult classify_corpus(std::span<const Graph6Record> records, const ClassifyOptions& options = {});

}  // namespace dompoly
