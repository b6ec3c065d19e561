#include "dompoly/report.hpp"

#include <array>
#include <utility>

namespace dompoly {

namespace {

struct LemmaEntry {
    LemmaId id;
    std::string_view name;
    std::string_view statement;
};

constexpr std::array kLemmas = {
    LemmaEntry{LemmaId::L2Union, "L2-union", "D(G u H, x) = D(G, x) D(H, x) on random graph pairs"},
    LemmaEntry{LemmaId::L3Cycle, "L3-cycle", "brute-force D(C_n, x) equals x (D(C_{n-1}) + D(C_{n-2}) + D(C_{n-3}))"},
    LemmaEntry{LemmaId::L4Gamma, "L4-gamma", "gamma(C_n) = ceil(n/3); gamma of cycle unions is the sum of ceilings"},
    LemmaEntry{LemmaId::L5Alpha, "L5-alpha", "D(C_n, -1) = 3 if 4 | n, else -1"},
    LemmaEntry{LemmaId::L6Ord3, "L6-ord3", "ord_3 D(C_n, -3) follows the residue table; 9 does not divide b_n"},
    LemmaEntry{LemmaId::R1Remark, "R1-remark", "b_1..b_30 mod 9 match the published list; b_{t+27} = b_t (mod 9)"},
    LemmaEntry{LemmaId::Rel2Beta, "REL2-beta", "D'(C_n, -1) = -n, n or 0 by n mod 4"},
    LemmaEntry{LemmaId::Rel3Theta, "REL3-theta", "D''(C_n, -1) closed form by n mod 4"},
    LemmaEntry{LemmaId::T5Partitions, "T5-partitions", "no union of two or more cycles has the polynomial of C_n"},
    LemmaEntry{LemmaId::T5TenCases, "T5-ten-cases", "three-cycle unions fall in ten residue cases, each contradicted"},
    LemmaEntry{LemmaId::T5Corpus, "T5-corpus", "C_n is alone in its class among all graphs of order n"},
    LemmaEntry{LemmaId::CorWheel, "COR-wheel", "W_n is alone in its class among all graphs of order n"},
    LemmaEntry{LemmaId::PPathClass, "P-path-class", "the class of P_n (3 | n) has exactly two members"},
};

const LemmaEntry& entry(LemmaId id) {
    for (const auto& e : kLemmas) {
        if (e.id == id) return e;
    }
    return kLemmas.front();
}

}  // namespace

std::string_view lemma_name(LemmaId id) { return entry(id).name; }

std::string_view lemma_statement(LemmaId id) { return entry(id).statement; }

std::optional<LemmaId> parse_lemma_id(std::string_view name) {
    for (const auto& e : kLemmas) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

const std::vector<LemmaId>& all_lemma_ids() {
    static const std::vector<LemmaId> ids = [] {
        std::vector<LemmaId> out;
        for (const auto& e : kLemmas) out.push_back(e.id);
        return out;
    }();
    return ids;
}

nlohmann::json polynomial_to_json(const IntPolynomial& p) { return p.decimal_coefficients(); }

nlohmann::json to_json(const Counterexample& c) {
    return {{"subject", c.subject}, {"reason", c.reason}, {"data", c.data}};
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const auto& c : report.counterexamples) counterexamples.push_back(to_json(c));
    return {
        {"lemma_id", lemma_name(report.lemma_id)},
        {"range", {report.range_lo, report.range_hi}},
        {"status", report.passed() ? "pass" : "fail"},
        {"counterexamples", std::move(counterexamples)},
        {"details", report.details},
        {"timing_ms", report.timing_ms},
    };
}

nlohmann::json to_json(const EquivalenceClassReport& report) {
    return {
        {"key_polynomial", polynomial_to_json(report.key_polynomial)},
        {"members", report.members},
        {"class_size", report.class_size()},
    };
}

VerificationReport combine_reports(LemmaId id, std::size_t lo, std::size_t hi, const std::vector<VerificationReport>& parts) {
    VerificationReport out;
    out.lemma_id = id;
    out.range_lo = lo;
    out.range_hi = hi;
    for (const auto& part : parts) {
        out.counterexamples.insert(out.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
        out.details[std::to_string(part.range_lo)] = part.details;
        out.timing_ms += part.timing_ms;
    }
    return out;
}

}  // namespace dompoly
