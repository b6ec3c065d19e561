#include "dompoly/verify.hpp"

#include "dompoly/cycle_family.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/families.hpp"
#include "dompoly/partitions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace dompoly {

namespace {

using nlohmann::json;

constexpr std::size_t kOracleCycleLimit = 15;
constexpr std::size_t kCeilingPartitionLimit = 20;
constexpr std::size_t kEvaluationLimit = 200;

VerificationReport new_report(LemmaId id, std::size_t lo, std::size_t hi) {
    VerificationReport report;
    report.lemma_id = id;
    report.range_lo = lo;
    report.range_hi = hi;
    return report;
}

json big(const BigInt& value) { return to_decimal(value); }

Graph random_graph(std::mt19937_64& rng, std::size_t max_order) {
    std::uniform_int_distribution<std::size_t> order_dist(1, max_order);
    std::uniform_real_distribution<double> density_dist(0.1, 0.9);
    const std::size_t n = order_dist(rng);
    std::bernoulli_distribution coin(density_dist(rng));
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

OracleOptions oracle_options(const VerifyOptions& options) {
    OracleOptions oracle;
    oracle.guard = options.guard;
    oracle.threads = options.threads;
    return oracle;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_path_graph(const Graph& g) {
    if (!is_connected(g) || g.edge_count() + 1 != g.order()) return false;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) return false;
    }
    return true;
}

// Adds a counterexample for every corpus record the classifier rejected.
void report_record_errors(const ClassificationResult& result, VerificationReport& report) {
    for (const auto& e : result.errors) {
        report.counterexamples.push_back({e.record, "corpus record rejected", {{"line", e.line}, {"error", e.message}}});
    }
}

json member_list(const EquivalenceClassReport* c) { return c ? json(c->members) : json::array(); }

// Shared body of the corpus singleton checks: the class of `target_graph` must contain
// exactly one member, whose degree sequence equals the target's.
const EquivalenceClassReport* check_singleton(const Graph& target_graph, const std::string& name,
                                              const ClassificationResult& result, VerificationReport& report) {
    const OracleOptions oracle{.guard = kMaxEnumerableOrder, .threads = 1};
    const IntPolynomial target = domination_polynomial(target_graph, oracle);
    const auto* cls = result.find(target);
    report.details["target"] = name;
    report.details["target_polynomial"] = polynomial_to_json(target);
    report.details["graphs"] = result.graphs;
    report.details["classes"] = result.classes.size();
    report.details["class_members"] = member_list(cls);
    if (cls == nullptr) {
        report.counterexamples.push_back({name, "no corpus graph has the target polynomial; corpus incomplete",
                                          {{"polynomial", polynomial_to_json(target)}}});
        return nullptr;
    }
    if (cls->class_size() != 1) {
        report.counterexamples.push_back({name, "equivalence class is not a singleton",
                                          {{"members", cls->members}, {"polynomial", polynomial_to_json(target)}}});
        return cls;
    }
    const Graph member = parse_graph6(cls->members.front());
    if (degree_sequence(member) != degree_sequence(target_graph)) {
        report.counterexamples.push_back({cls->members.front(), "sole class member is not " + name,
                                          {{"polynomial", polynomial_to_json(target)}}});
    }
    return cls;
}

}  // namespace

const std::array<ResidueCase, 10>& residue_case_table() {
    using C = CaseContradiction;
    static const std::array<ResidueCase, 10> table = {{
        {1, 0, {0, 1, 3}, C::FirstDerivative},
        {2, 0, {0, 2, 2}, C::FirstDerivative},
        {3, 1, {1, 1, 3}, C::FirstDerivative},
        {4, 1, {1, 2, 2}, C::FirstDerivative},
        {5, 1, {3, 3, 3}, C::FirstDerivative},
        {6, 2, {1, 2, 3}, C::FirstDerivative},
        {7, 2, {2, 2, 2}, C::SecondDerivative},
        {8, 3, {1, 1, 1}, C::FirstDerivative},
        {9, 3, {1, 3, 3}, C::FirstDerivative},
        {10, 3, {2, 2, 3}, C::SecondDerivative},
    }};
    return table;
}

std::optional<ResidueCase> classify_residue_case(std::size_t n1, std::size_t n2, std::size_t n3) {
    std::array<unsigned, 3> residues = {static_cast<unsigned>(n1 % 4), static_cast<unsigned>(n2 % 4),
                                        static_cast<unsigned>(n3 % 4)};
    std::sort(residues.begin(), residues.end());
    const auto n_mod4 = static_cast<unsigned>((n1 + n2 + n3) % 4);
    for (const auto& row : residue_case_table()) {
        if (row.n_mod4 == n_mod4 && row.part_mod4 == residues) return row;
    }
    return std::nullopt;
}

Graph path_companion(std::size_t n, PathCompanion variant) {
    if (n < 5) throw DomainError("path companion needs n >= 5");
    const std::size_t cycle = n - 2;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cycle; ++i) edges.emplace_back(i, (i + 1) % cycle);
    if (variant == PathCompanion::PendantPair) {
        edges.emplace_back(0, cycle);
        edges.emplace_back(1, cycle + 1);
    } else {
        for (std::size_t extra : {cycle, cycle + 1}) {
            edges.emplace_back(0, extra);
            edges.emplace_back(1, extra);
        }
    }
    return Graph::from_edges(n, edges);
}

VerificationReport verify_union_product(std::size_t pairs, std::size_t max_order, const VerifyOptions& options) {
    Stopwatch clock;
    VerificationReport report = new_report(LemmaId::L2Union, 1, max_order);
    if (max_order == 0) throw DomainError("max_order must be positive");
    const OracleOptions oracle = oracle_options(options);
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        const Graph g = random_graph(rng, max_order);
        const Graph h = random_graph(rng, max_order);
        const IntPolynomial whole = domination_polynomial(disjoint_union(g, h), oracle);
        const IntPolynomial product = domination_polynomial(g, oracle) * domination_polynomial(h, oracle);
        if (whole != product) {
            report.counterexamples.push_back({encode_graph6(g) + " + " + encode_graph6(h), "D(G u H) != D(G) D(H)",
                                              {{"union", polynomial_to_json(whole)}, {"product", polynomial_to_json(product)}}});
        }
    }
    report.details = {{"pairs", pairs}, {"seed", options.seed}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_cycle_recurrence(std::size_t n_max, const VerifyOptions& options) {
    Stopwatch clock;
    VerificationReport report = new_report(LemmaId::L3Cycle, 1, n_max);
    const OracleOptions oracle = oracle_options(options);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const IntPolynomial brute = domination_polynomial(build_family(GraphFamily::cycle(n)), oracle);
        const IntPolynomial recurrence = cycle_polynomial(n);
        if (brute != recurrence) {
            report.counterexamples.push_back({"C_" + std::to_string(n), "oracle and recurrence disagree",
                                              {{"oracle", polynomial_to_json(brute)}, {"recurrence", polynomial_to_json(recurrence)}}});
        }
    }
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_gamma_additivity_and_ceiling(std::size_t n_max, const VerifyOptions& options) {
    Stopwatch clock;
    if (n_max < 3) throw DomainError("verify_gamma_additivity_and_ceiling needs n_max >= 3");
    VerificationReport report = new_report(LemmaId::L4Gamma, 1, n_max);
    const OracleOptions oracle = oracle_options(options);

    const std::size_t oracle_limit = std::min({n_max, kOracleCycleLimit, options.guard});
    for (std::size_t n = 1; n <= oracle_limit; ++n) {
        const auto gamma = domination_number(build_family(GraphFamily::cycle(n)), oracle);
        if (gamma.gamma != ceil_third(n)) {
            report.counterexamples.push_back({"C_" + std::to_string(n), "oracle gamma(C_n) != ceil(n/3)",
                                              {{"gamma", gamma.gamma ? json(*gamma.gamma) : json(nullptr)}}});
        }
    }

    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto lowest = cycle_polynomial(n).lowest_degree();
        if (lowest != ceil_third(n)) {
            report.counterexamples.push_back({"C_" + std::to_string(n), "lowest degree of D(C_n) != ceil(n/3)",
                                              {{"lowest_degree", lowest ? json(*lowest) : json(nullptr)}}});
        }
    }

    std::size_t unions_checked = 0;
    for (std::size_t n = 3; n <= std::max(n_max, kCeilingPartitionLimit); ++n) {
        const bool check_lowest = n <= kCeilingPartitionLimit;
        const bool check_matches = n <= n_max;
        for (const auto& cmp : search_partitions(n, 3, options.threads)) {
            std::size_t ceiling_sum = 0;
            for (std::size_t part : cmp.partition.parts) ceiling_sum += ceil_third(part);
            if (check_lowest) {
                ++unions_checked;
                if (cmp.polynomial.lowest_degree() != ceiling_sum) {
                    report.counterexamples.push_back({cmp.partition.to_string(), "lowest degree != sum of part ceilings",
                                                      {{"polynomial", polynomial_to_json(cmp.polynomial)}}});
                }
            }
            if (check_matches && cmp.matches() && ceiling_sum != ceil_third(n)) {
                report.counterexamples.push_back({cmp.partition.to_string(), "matching union violates the ceiling identity",
                                                  {{"n", n}}});
            }
        }
    }
    report.details = {{"oracle_cycles", oracle_limit}, {"unions_checked", unions_checked}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

namespace {

// Closed form vs recurrence vs evaluation of the k-th derivative at -1.
template <typename Closed, typename Recurrence>
VerificationReport verify_minus_one_values(LemmaId id, unsigned order, std::size_t n_max, Closed closed, Recurrence recurrence) {
    Stopwatch clock;
    VerificationReport report = new_report(id, 1, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const BigInt expected = closed(n);
        const BigInt by_recurrence = recurrence(n);
        const BigInt by_evaluation = eval_int(derivative(cycle_polynomial(n), order), -1);
        if (expected != by_recurrence || expected != by_evaluation) {
            report.counterexamples.push_back({"n=" + std::to_string(n), "closed form, recurrence and evaluation disagree",
                                              {{"closed_form", big(expected)},
                                               {"recurrence", big(by_recurrence)},
                                               {"evaluation", big(by_evaluation)}}});
        }
    }
    report.details = {{"derivative_order", order}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

}  // namespace

VerificationReport verify_alpha(std::size_t n_max) {
    return verify_minus_one_values(LemmaId::L5Alpha, 0, n_max, alpha, alpha_recurrence);
}

VerificationReport verify_beta(std::size_t n_max) {
    return verify_minus_one_values(LemmaId::Rel2Beta, 1, n_max, beta, beta_recurrence);
}

VerificationReport verify_theta(std::size_t n_max) {
    VerificationReport report = verify_minus_one_values(LemmaId::Rel3Theta, 2, n_max, theta, theta_recurrence);
    // The n = 0 (mod 4) branch is also stated as n(n-4)/2. Record where that reading departs from D''.
    json departures = json::array();
    for (std::size_t n = 4; n <= n_max; n += 4) {
        const BigInt halved = BigInt(static_cast<unsigned long>(n * (n - 4) / 2));
        if (halved != theta(n)) departures.push_back(n);
    }
    report.details["half_branch_departures"] = departures.size();
    if (!departures.empty()) report.details["half_branch_first_departure"] = departures.front();
    return report;
}

VerificationReport verify_ord3(std::size_t n_max) {
    Stopwatch clock;
    VerificationReport report = new_report(LemmaId::L6Ord3, 1, n_max);
    bool b_positive = true;
    std::size_t exceptional = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::string subject = "n=" + std::to_string(n);
        const BigInt a = a_seq(n);
        if (n <= kEvaluationLimit) {
            const BigInt evaluated = eval_int(cycle_polynomial(n), -3);
            if (evaluated != a) {
                report.counterexamples.push_back({subject, "a_n != D(C_n, -3)", {{"a_n", big(a)}, {"evaluation", big(evaluated)}}});
            }
        }
        const Ord3Class cls = ord3_classification(n);
        const unsigned long ord = ord_p(a, 3);
        if (ord != cls.predicted_ord) {
            report.counterexamples.push_back({subject, "ord_3 a_n differs from the table",
                                              {{"ord3", ord}, {"predicted", cls.predicted_ord}, {"a_n", big(a)}}});
        }
        if (cls.residue_class == 1 && cls.remark_exceptional) ++exceptional;

        const BigInt b = b_seq(n);
        try {
            const BigInt factored = b_seq_by_factoring(n);
            if (factored != b) {
                report.counterexamples.push_back({subject, "b_n recurrence disagrees with a_n factoring",
                                                  {{"recurrence", big(b)}, {"factoring", big(factored)}}});
            }
        } catch (const InconsistencyError& e) {
            report.counterexamples.push_back({subject, e.what(), {{"a_n", big(a)}}});
        }
        if (mod_floor(b, 9) == 0) report.counterexamples.push_back({subject, "9 divides b_n", {{"b_n", big(b)}}});
        if (sgn(b) <= 0) b_positive = false;
    }
    report.details = {{"b_positive", b_positive}, {"exceptional_n", exceptional}, {"evaluation_checked_to", std::min(n_max, kEvaluationLimit)}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_remark_table(std::size_t t_max) {
    Stopwatch clock;
    VerificationReport report = new_report(LemmaId::R1Remark, 1, std::max<std::size_t>(t_max + 27, 30));
    json computed = json::array();
    for (std::size_t n = 1; n <= kPublishedBMod9.size(); ++n) {
        const unsigned long residue = mod_floor(b_seq(n), 9);
        computed.push_back(residue);
        if (residue != kPublishedBMod9[n - 1]) {
            report.counterexamples.push_back({"n=" + std::to_string(n), "b_n mod 9 differs from the published value",
                                              {{"computed", residue}, {"published", kPublishedBMod9[n - 1]}}});
        }
    }
    for (std::size_t t = 1; t <= t_max; ++t) {
        const unsigned long early = mod_floor(b_seq(t), 9);
        const unsigned long late = mod_floor(b_seq(t + 27), 9);
        if (early != late) {
            report.counterexamples.push_back({"t=" + std::to_string(t), "b_{t+27} != b_t (mod 9)",
                                              {{"b_t_mod9", early}, {"b_t27_mod9", late}}});
        }
    }
    report.details = {{"b_mod9_1_to_30", computed}, {"period_checked_to", t_max}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_cycle_uniqueness(std::size_t n, const VerifyOptions& options) {
    Stopwatch clock;
    if (n < 3) throw DomainError("verify_cycle_uniqueness needs n >= 3");
    VerificationReport report = new_report(LemmaId::T5Partitions, n, n);
    const auto comparisons = search_partitions(n, 3, options.threads);
    bool trivial_matches = false;
    json matches = json::array();
    for (const auto& cmp : comparisons) {
        if (!cmp.matches()) continue;
        matches.push_back(cmp.partition.to_string());
        if (cmp.partition.parts.size() == 1) {
            trivial_matches = true;
        } else {
            report.counterexamples.push_back({cmp.partition.to_string(), "union of cycles shares D(C_n, x)",
                                              {{"n", n}, {"polynomial", polynomial_to_json(cmp.polynomial)}}});
        }
    }
    if (!trivial_matches) {
        report.counterexamples.push_back({"{" + std::to_string(n) + "}", "trivial partition does not reproduce D(C_n, x)", {}});
    }
    report.details = {{"partitions", comparisons.size()}, {"matches", matches}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_cycle_uniqueness_range(std::size_t lo, std::size_t hi, const VerifyOptions& options) {
    std::vector<VerificationReport> parts;
    for (std::size_t n = lo; n <= hi; ++n) parts.push_back(verify_cycle_uniqueness(n, options));
    return combine_reports(LemmaId::T5Partitions, lo, hi, parts);
}

VerificationReport verify_ten_case_table(std::size_t n_max) {
    Stopwatch clock;
    if (n_max < 9) throw DomainError("verify_ten_case_table needs n_max >= 9");
    VerificationReport report = new_report(LemmaId::T5TenCases, 9, n_max);

    struct CaseStats {
        std::size_t triples = 0;
        std::size_t beta_consistent = 0;
        json example;
    };
    std::map<int, CaseStats> stats;
    std::size_t triples = 0;
    std::size_t compatible = 0;

    for (std::size_t n1 = 3; n1 + 6 <= n_max; ++n1) {
        for (std::size_t n2 = 3; n2 <= n1 && n1 + n2 + 3 <= n_max; ++n2) {
            for (std::size_t n3 = 3; n3 <= n2 && n1 + n2 + n3 <= n_max; ++n3) {
                const std::size_t n = n1 + n2 + n3;
                const std::string subject = CyclePartition{{n1, n2, n3}, 3}.to_string();
                ++triples;

                const IntPolynomial product = cycle_polynomial(n1) * cycle_polynomial(n2) * cycle_polynomial(n3);
                if (product == cycle_polynomial(n)) {
                    report.counterexamples.push_back({subject, "triple product equals D(C_n, x)", {{"n", n}}});
                }

                const BigInt a1 = alpha(n1), a2 = alpha(n2), a3 = alpha(n3);
                if (alpha(n) != a1 * a2 * a3) continue;
                ++compatible;

                const auto row = classify_residue_case(n1, n2, n3);
                if (!row) {
                    report.counterexamples.push_back({subject, "alpha-compatible residue pattern outside the case table",
                                                      {{"n", n}, {"residues", {n1 % 4, n2 % 4, n3 % 4}}}});
                    continue;
                }

                const BigInt b1 = beta(n1), b2 = beta(n2), b3 = beta(n3);
                const BigInt t1 = theta(n1), t2 = theta(n2), t3 = theta(n3);
                const BigInt beta_rhs = b1 * a2 * a3 + a1 * b2 * a3 + a1 * a2 * b3;
                const BigInt theta_rhs = t1 * a2 * a3 + a1 * t2 * a3 + a1 * a2 * t3 +
                                         2 * (b1 * b2 * a3 + b1 * b3 * a2 + b2 * b3 * a1);
                const BigInt beta_lhs = beta(n);
                const BigInt theta_lhs = theta(n);

                if (eval_int(derivative(product), -1) != beta_rhs || eval_int(derivative(product, 2), -1) != theta_rhs) {
                    report.counterexamples.push_back({subject, "Leibniz evaluation disagrees with the product polynomial", {{"n", n}}});
                }

                auto& s = stats[row->index];
                ++s.triples;
                if (beta_lhs == beta_rhs) ++s.beta_consistent;
                const bool first = row->contradiction == CaseContradiction::FirstDerivative;
                const BigInt& lhs = first ? beta_lhs : theta_lhs;
                const BigInt& rhs = first ? beta_rhs : theta_rhs;
                if (lhs == rhs) {
                    report.counterexamples.push_back({subject, first ? "first-derivative identity holds in a case it should exclude"
                                                                     : "second-derivative identity holds in a case it should exclude",
                                                      {{"n", n}, {"case", row->index}, {"value", big(lhs)}}});
                }
                if (s.example.is_null()) {
                    s.example = {{"parts", {n1, n2, n3}}, {"n", n}, {"lhs", big(lhs)}, {"rhs", big(rhs)}};
                }
            }
        }
    }

    json cases = json::object();
    for (const auto& row : residue_case_table()) {
        const auto it = stats.find(row.index);
        const CaseStats s = it == stats.end() ? CaseStats{} : it->second;
        cases["case_" + std::to_string(row.index)] = {
            {"triples", s.triples},
            {"contradiction", row.contradiction == CaseContradiction::FirstDerivative ? "first-derivative" : "second-derivative"},
            {"beta_consistent", s.beta_consistent},
            {"example", s.example},
        };
    }
    report.details = {{"triples", triples}, {"alpha_compatible", compatible}, {"cases", cases}};
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_cycle_class(std::size_t n, std::span<const Graph6Record> corpus, const VerifyOptions& options) {
    Stopwatch clock;
    if (n < 1) throw DomainError("verify_cycle_class needs n >= 1");
    VerificationReport report = new_report(LemmaId::T5Corpus, n, n);
    ClassifyOptions classify{.oracle = oracle_options(options), .threads = options.threads, .order = n};
    const ClassificationResult result = classify_corpus(corpus, classify);
    report_record_errors(result, report);
    const Graph cycle = build_family(GraphFamily::cycle(n));
    check_singleton(cycle, "C_" + std::to_string(n), result, report);

    // Every class holding a k-regular graph with pairwise distinct closed
    // neighbourhoods must consist of k-regular graphs only.
    std::size_t transfer_classes = 0;
    for (const auto& cls : result.classes) {
        std::vector<Graph> members;
        for (const auto& m : cls.members) members.push_back(parse_graph6(m));
        long anchor = -1;
        for (const auto& g : members) {
            const long k = regular_degree(g);
            if (k >= 0 && !has_duplicate_closed_neighborhoods(g)) {
                anchor = k;
                break;
            }
        }
        if (anchor < 0) continue;
        ++transfer_classes;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (regular_degree(members[i]) != anchor) {
                report.counterexamples.push_back({cls.members[i], "regularity does not transfer within the class",
                                                  {{"degree", anchor}, {"members", cls.members}}});
            }
        }
    }
    report.details["regularity_transfer_classes"] = transfer_classes;
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_wheel_uniqueness(std::size_t n, std::span<const Graph6Record> corpus, const VerifyOptions& options) {
    Stopwatch clock;
    if (n < 4) throw DomainError("wheel needs n >= 4");
    if (n > options.guard) throw SizeGuardError("wheel order " + std::to_string(n) + " exceeds the enumeration guard");
    VerificationReport report = new_report(LemmaId::CorWheel, n, n);
    ClassifyOptions classify{.oracle = oracle_options(options), .threads = options.threads, .order = n};
    const ClassificationResult result = classify_corpus(corpus, classify);
    report_record_errors(result, report);
    check_singleton(build_family(GraphFamily::wheel(n)), "W_" + std::to_string(n), result, report);
    report.timing_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_path_class(std::size_t n, std::span<const Graph6Record> corpus, const VerifyOptions& options) {
    Stopwatch clock;
    if (n % 3 != 0 || n < 6) throw DomainError("path class check needs n divisible by 3 and n >= 6");
    if (n > options.guard) throw SizeGuardError("path order " + std::to_string(n) + " exceeds the enumeration guard");
    VerificationReport report = new_report(LemmaId::PPathClass, n, n);
    const OracleOptions oracle = oracle_options(options);
    ClassifyOptions classify{.oracle = oracle, .threads = options.threads, .order = n};
    const ClassificationResult result = classify_corpus(corpus, classify);
    report_record_errors(result, report);

    const IntPolynomial target = domination_polynomial(build_family(GraphFamily::path(n)), oracle);
    const Graph pendant = path_companion(n, PathCompanion::PendantPair);
    const Graph shared = path_companion(n, PathCompanion::SharedPair);
    const bool pendant_matches = domination_polynomial(pendant, oracle) == target;
    const bool shared_matches = domination_polynomial(shared, oracle) == target;
    const std::string resolved = pendant_matches && shared_matches ? "both"
                                 : pendant_matches                 ? "pendant-pair"
                                 : shared_matches                  ? "shared-pair"
                                                                   : "none";
    const auto* cls = result.find(target);
    report.details = {{"target_polynomial", polynomial_to_json(target)},
                      {"graphs", result.graphs},
                      {"class_members", member_list(cls)},
                      {"pendant_pair_matches", pendant_matches},
                      {"shared_pair_matches", shared_matches},
                      {"resolved_variant", resolved},
                      {"pendant_pair_graph6", encode_graph6(pendant)},
                      {"shared_pair_graph6", encode_graph6(shared)}};

    if (!pendant_matches && !shared_matches) {
        report.counterexamples.push_back({"P_" + std::to_string(n), "neither companion construction reproduces D(P_n)",
                                          {{"polynomial", polynomial_to_json(target)}}});
    }
    if (cls == nullptr || cls->class_size() != 2) {
        report.counterexamples.push_back({"P_" + std::to_string(n), "class of P_n does not have exactly two members",
                                          {{"members", member_list(cls)}}});
        report.timing_ms = clock.elapsed_ms();
        return report;
    }

    // One member must be the path; the other must look like the matching construction.
    std::vector<Graph> members;
    for (const auto& m : cls->members) members.push_back(parse_graph6(m));
    const auto path_it = std::find_if(members.begin(), members.end(), is_path_graph);
    if (path_it == members.end()) {
        report.counterexamples.push_back({"P_" + std::to_string(n), "no class member is a path", {{"members", cls->members}}});
    } else {
        const Graph& companion = members[path_it == members.begin() ? 1 : 0];
        const bool agrees = (pendant_matches && degree_sequence(companion) == degree_sequence(pendant)) ||
                            (shared_matches && degree_sequence(companion) == degree_sequence(shared));
        report.details["companion_member"] = encode_graph6(companion);
        report.details["companion_degree_sequence_agrees"] = agrees;
        if (!agrees) {
            report.counterexamples.push_back({encode_graph6(companion), "second class member does not match the construction",
                                              {{"members", cls->members}}});
        }
    }
    report.timing_ms = clock.elapsed_ms();
    return report;
}

}  // namespace dompoly
