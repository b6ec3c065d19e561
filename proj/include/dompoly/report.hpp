#pragma once

#include "dompoly/polynomial.hpp"

#include <json.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dompoly {

/// Identifiers of the individual checks run by the harness.
enum class LemmaId {
    L2Union,       // D(G u H) = D(G) D(H)
    L3Cycle,       // oracle D(C_n) = cycle recurrence
    L4Gamma,       // gamma(C_n) = ceil(n/3), additivity over cycle unions
    L5Alpha,       // D(C_n, -1) closed form
    L6Ord3,        // ord_3 D(C_n, -3) table, 9 does not divide b_n
    R1Remark,      // published b_n mod 9 vector and its period 27
    Rel2Beta,      // D'(C_n, -1) closed form
    Rel3Theta,     // D''(C_n, -1) closed form
    T5Partitions,  // no other union of cycles shares D(C_n)
    T5TenCases,    // residue case table for three-cycle unions
    T5Corpus,      // C_n alone in its class over a complete corpus
    CorWheel,      // W_n alone in its class over a complete corpus
    PPathClass,    // class of P_n has two members
};

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view name);

/// One-line description of the statement a check verifies.
std::string_view lemma_statement(LemmaId id);

const std::vector<LemmaId>& all_lemma_ids();

/// A failed instance with enough data to reproduce it independently.
struct Counterexample {
    std::string subject;  // graph6 string, partition or index
    std::string reason;
    nlohmann::json data = nlohmann::json::object();
};

/// Outcome of one check. The status is derived: pass iff no counterexamples.
struct VerificationReport {
    LemmaId lemma_id = LemmaId::L2Union;
    std::size_t range_lo = 0;
    std::size_t range_hi = 0;
    std::vector<Counterexample> counterexamples;
    nlohmann::json details = nlohmann::json::object();
    double timing_ms = 0.0;

    bool passed() const noexcept { return counterexamples.empty(); }
};

/// Graphs sharing one domination polynomial.
struct EquivalenceClassReport {
    IntPolynomial key_polynomial;
    std::vector<std::string> members;  // sorted

    std::size_t class_size() const noexcept { return members.size(); }
};

nlohmann::json polynomial_to_json(const IntPolynomial& p);
nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const EquivalenceClassReport& report);

/// Merges per-n reports of the same check into one covering [lo, hi].
/// Details are keyed by each part's range_lo.
VerificationReport combine_reports(LemmaId id, std::size_t lo, std::size_t hi, const std::vector<VerificationReport>& parts);

/// Wall-clock stopwatch for timing_ms.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace dompoly
