#include "dompoly/cli.hpp"

#include "dompoly/classify.hpp"
#include "dompoly/cycle_family.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/families.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/oracle.hpp"
#include "dompoly/partitions.hpp"
#include "dompoly/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace dompoly::cli {

namespace {

using nlohmann::json;

// Thrown for problems with the data a command was given (files, records, sizes).
struct InputError : Error {
    using Error::Error;
};

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : Error {
    using Error::Error;
};

struct Settings {
    unsigned threads = 0;
    std::string format = "json";
    std::optional<std::size_t> guard;
    std::optional<std::size_t> max_n;
    std::optional<std::string> family;
    std::vector<std::string> corpus;
    int min_part = 3;
    std::optional<long> at;
    std::optional<std::size_t> order;
    std::size_t pairs = 200;

    bool table() const { return format == "table"; }

    OracleOptions oracle() const {
        OracleOptions o;
        o.threads = threads;
        if (guard) o.guard = *guard;
        return o;
    }

    VerifyOptions verify() const {
        VerifyOptions v;
        v.threads = threads;
        if (guard) v.guard = *guard;
        return v;
    }
};

// ---------------------------------------------------------------- input

struct NamedGraph {
    std::string source;  // family spec or "<file>:<line>"
    Graph graph;
};

std::vector<Graph6Record> load_records(const std::vector<std::string>& paths) {
    std::vector<Graph6Record> all;
    for (const auto& path : paths) {
        std::vector<Graph6Record> records;
        try {
            records = read_graph6_file(path);
        } catch (const Error& e) {
            throw InputError(e.what());
        }
        for (auto& r : records) {
            try {
                (void)parse_graph6(r.text);
            } catch (const ParseError& e) {
                throw InputError(path + ":" + std::to_string(r.line) + ": " + e.what());
            }
            all.push_back(std::move(r));
        }
    }
    return all;
}

std::vector<NamedGraph> graph_inputs(const Settings& s, const std::optional<std::string>& file) {
    if (s.family.has_value() == file.has_value()) {
        throw UsageError("give exactly one of --family <name:params> or a graph6 file path");
    }
    if (s.family) {
        GraphFamily family;
        try {
            family = GraphFamily::parse(*s.family);
            return {{family.to_string(), build_family(family)}};
        } catch (const Error& e) {
            throw UsageError(std::string("--family: ") + e.what());
        }
    }
    std::vector<NamedGraph> graphs;
    for (const auto& r : load_records({*file})) graphs.push_back({*file + ":" + std::to_string(r.line), parse_graph6(r.text)});
    return graphs;
}

// Orders present in a corpus, ascending.
std::vector<std::size_t> corpus_orders(const std::vector<Graph6Record>& records) {
    std::vector<std::size_t> orders;
    for (const auto& r : records) orders.push_back(parse_graph6(r.text).order());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

// ---------------------------------------------------------------- output

std::string coefficients_text(const IntPolynomial& p) {
    std::string text = "[";
    const auto coeffs = p.decimal_coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) text += (i ? ", " : "") + coeffs[i];
    return text + "]";
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_report_table(std::ostream& out, const VerificationReport& r) {
    out << lemma_name(r.lemma_id) << "  [" << r.range_lo << ", " << r.range_hi << "]  " << (r.passed() ? "PASS" : "FAIL")
        << "  " << std::fixed << std::setprecision(1) << r.timing_ms << " ms\n";
    for (const auto& c : r.counterexamples) out << "  counterexample " << c.subject << ": " << c.reason << '\n';
}

// ---------------------------------------------------------------- verbs

int cmd_poly(const Settings& s, const std::optional<std::string>& file, std::ostream& out) {
    json results = json::array();
    for (const auto& [source, g] : graph_inputs(s, file)) {
        const IntPolynomial p = domination_polynomial(g, s.oracle());
        if (s.table()) {
            out << source << "  n=" << g.order() << "  D = " << p.to_string() << '\n';
        }
        results.push_back({{"source", source}, {"graph6", encode_graph6(g)}, {"order", g.order()}, {"polynomial", polynomial_to_json(p)}});
    }
    if (!s.table()) print_json(out, {{"results", results}});
    return kExitOk;
}

int cmd_gamma(const Settings& s, const std::optional<std::string>& file, std::ostream& out) {
    json results = json::array();
    for (const auto& [source, g] : graph_inputs(s, file)) {
        const auto gamma = domination_number(g, s.oracle()).gamma;
        if (s.table()) out << source << "  n=" << g.order() << "  gamma = " << (gamma ? std::to_string(*gamma) : "undefined") << '\n';
        results.push_back({{"source", source}, {"graph6", encode_graph6(g)}, {"order", g.order()},
                           {"gamma", gamma ? json(*gamma) : json(nullptr)}});
    }
    if (!s.table()) print_json(out, {{"results", results}});
    return kExitOk;
}

int cmd_cycle(const Settings& s, std::size_t n, std::ostream& out) {
    const IntPolynomial p = cycle_polynomial(n);
    if (s.table()) {
        out << "D(C_" << n << ", x) = " << p.to_string() << '\n' << "coefficients " << coefficients_text(p) << '\n';
    } else {
        print_json(out, {{"n", n}, {"polynomial", polynomial_to_json(p)}});
    }
    return kExitOk;
}

int cmd_eval(const Settings& s, std::size_t n, std::ostream& out) {
    const IntPolynomial p = cycle_polynomial(n);
    const long t = s.at.value_or(-1);
    const BigInt value = eval_int(p, t);
    const BigInt first = eval_int(derivative(p), t);
    const BigInt second = eval_int(derivative(p, 2), t);
    const BigInt a = a_seq(n);
    const BigInt b = b_seq(n);
    const Ord3Class cls = ord3_classification(n);
    const json j = {{"n", n},
                    {"at", t},
                    {"value", to_decimal(value)},
                    {"first_derivative", to_decimal(first)},
                    {"second_derivative", to_decimal(second)},
                    {"alpha", to_decimal(alpha(n))},
                    {"beta", to_decimal(beta(n))},
                    {"theta", to_decimal(theta(n))},
                    {"a_n", to_decimal(a)},
                    {"b_n", to_decimal(b)},
                    {"b_n_mod9", mod_floor(b, 9)},
                    {"ord3_a_n", ord_p(a, 3)},
                    {"ord3_predicted", cls.predicted_ord}};
    if (s.table()) {
        for (const auto& [key, v] : j.items()) out << std::left << std::setw(18) << key << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
        print_json(out, j);
    }
    return kExitOk;
}

int cmd_search(const Settings& s, std::size_t n, std::ostream& out) {
    if (s.min_part != 1 && s.min_part != 3) throw UsageError("--min-part must be 1 or 3");
    const auto comparisons = search_partitions(n, static_cast<std::size_t>(s.min_part), s.threads);
    json rows = json::array();
    json matches = json::array();
    for (const auto& c : comparisons) {
        rows.push_back({{"partition", c.partition.to_string()},
                        {"polynomial", polynomial_to_json(c.polynomial)},
                        {"matches", c.matches()},
                        {"first_difference", c.first_difference ? json(*c.first_difference) : json(nullptr)}});
        if (c.matches()) matches.push_back(c.partition.to_string());
    }
    if (s.table()) {
        out << "n=" << n << " min_part=" << s.min_part << " partitions=" << comparisons.size() << '\n';
        for (const auto& c : comparisons) {
            out << std::left << std::setw(24) << c.partition.to_string()
                << (c.matches() ? "match" : "differs at x^" + std::to_string(*c.first_difference)) << '\n';
        }
    } else {
        print_json(out, {{"n", n}, {"min_part", s.min_part}, {"partitions", rows}, {"matches", matches}});
    }
    return kExitOk;
}

int cmd_classify(const Settings& s, const std::vector<std::string>& files, std::ostream& out) {
    std::vector<std::string> paths = files;
    paths.insert(paths.end(), s.corpus.begin(), s.corpus.end());
    if (paths.empty()) throw UsageError("classify needs at least one graph6 file");
    const auto records = load_records(paths);
    ClassifyOptions opts;
    opts.oracle = s.oracle();
    opts.oracle.threads = 1;
    opts.threads = s.threads;
    opts.order = s.order;
    const ClassificationResult result = classify_corpus(records, opts);

    json classes = json::array();
    for (const auto& c : result.classes) classes.push_back(to_json(c));
    json errors = json::array();
    for (const auto& e : result.errors) errors.push_back({{"line", e.line}, {"record", e.record}, {"error", e.message}});
    if (s.table()) {
        out << "graphs=" << result.graphs << " classes=" << result.classes.size() << '\n';
        for (const auto& c : result.classes) {
            out << std::right << std::setw(5) << c.class_size() << "  " << coefficients_text(c.key_polynomial) << "  ";
            for (std::size_t i = 0; i < c.members.size(); ++i) out << (i ? " " : "") << c.members[i];
            out << '\n';
        }
        for (const auto& e : result.errors) out << "error line " << e.line << ": " << e.message << '\n';
    } else {
        print_json(out, {{"graphs", result.graphs}, {"class_count", result.classes.size()}, {"classes", classes}, {"errors", errors}});
    }
    return result.errors.empty() ? kExitOk : kExitInput;
}

// One runnable check with its default range.
struct Check {
    LemmaId id;
    bool needs_corpus = false;
    std::function<VerificationReport(const Settings&, const std::vector<Graph6Record>&)> run;
};

VerificationReport merge_per_order(LemmaId id, const std::vector<Graph6Record>& corpus, const Settings& s,
                                   const std::function<bool(std::size_t)>& eligible,
                                   const std::function<VerificationReport(std::size_t)>& one) {
    std::vector<std::size_t> orders;
    for (std::size_t n : corpus_orders(corpus)) {
        if (eligible(n) && (!s.max_n || n <= *s.max_n)) orders.push_back(n);
    }
    if (orders.empty()) throw InputError(std::string(lemma_name(id)) + ": corpus has no graphs of a suitable order");
    std::vector<VerificationReport> parts;
    for (std::size_t n : orders) parts.push_back(one(n));
    return combine_reports(id, orders.front(), orders.back(), parts);
}

const std::vector<Check>& checks() {
    static const std::vector<Check> table = {
        {LemmaId::L2Union, false, [](const Settings& s, const auto&) { return verify_union_product(s.pairs, s.max_n.value_or(8), s.verify()); }},
        {LemmaId::L3Cycle, false, [](const Settings& s, const auto&) { return verify_cycle_recurrence(s.max_n.value_or(15), s.verify()); }},
        {LemmaId::L4Gamma, false, [](const Settings& s, const auto&) { return verify_gamma_additivity_and_ceiling(s.max_n.value_or(20), s.verify()); }},
        {LemmaId::L5Alpha, false, [](const Settings& s, const auto&) { return verify_alpha(s.max_n.value_or(200)); }},
        {LemmaId::L6Ord3, false, [](const Settings& s, const auto&) { return verify_ord3(s.max_n.value_or(1000)); }},
        {LemmaId::R1Remark, false, [](const Settings& s, const auto&) { return verify_remark_table(s.max_n.value_or(973)); }},
        {LemmaId::Rel2Beta, false, [](const Settings& s, const auto&) { return verify_beta(s.max_n.value_or(200)); }},
        {LemmaId::Rel3Theta, false, [](const Settings& s, const auto&) { return verify_theta(s.max_n.value_or(200)); }},
        {LemmaId::T5Partitions, false, [](const Settings& s, const auto&) { return verify_cycle_uniqueness_range(3, s.max_n.value_or(40), s.verify()); }},
        {LemmaId::T5TenCases, false, [](const Settings& s, const auto&) { return verify_ten_case_table(s.max_n.value_or(60)); }},
        {LemmaId::T5Corpus, true,
         [](const Settings& s, const auto& corpus) {
             return merge_per_order(LemmaId::T5Corpus, corpus, s, [](std::size_t n) { return n >= 3; },
                                    [&](std::size_t n) { return verify_cycle_class(n, corpus, s.verify()); });
         }},
        {LemmaId::CorWheel, true,
         [](const Settings& s, const auto& corpus) {
             return merge_per_order(LemmaId::CorWheel, corpus, s, [](std::size_t n) { return n >= 4; },
                                    [&](std::size_t n) { return verify_wheel_uniqueness(n, corpus, s.verify()); });
         }},
        {LemmaId::PPathClass, true,
         [](const Settings& s, const auto& corpus) {
             return merge_per_order(LemmaId::PPathClass, corpus, s, [](std::size_t n) { return n >= 6 && n % 3 == 0; },
                                    [&](std::size_t n) { return verify_path_class(n, corpus, s.verify()); });
         }},
    };
    return table;
}

int cmd_verify(const Settings& s, const std::string& target, std::ostream& out) {
    const auto corpus = load_records(s.corpus);
    if (target != "all") {
        const auto id = parse_lemma_id(target);
        if (!id) throw UsageError("unknown lemma id '" + target + "'");
        const auto& check = *std::find_if(checks().begin(), checks().end(), [&](const Check& c) { return c.id == *id; });
        if (check.needs_corpus && corpus.empty()) throw UsageError(target + " needs --corpus <graph6 file>");
        const VerificationReport report = check.run(s, corpus);
        if (s.table()) {
            print_report_table(out, report);
        } else {
            print_json(out, to_json(report));
        }
        return report.passed() ? kExitOk : kExitCheckFailed;
    }

    if (s.max_n) throw UsageError("--max-n applies to a single lemma, not to 'verify all'");
    bool all_passed = true;
    json reports = json::array();
    json skipped = json::array();
    json trace = json::array();
    std::vector<std::pair<LemmaId, std::string>> rows;
    for (const auto& check : checks()) {
        const std::string name(lemma_name(check.id));
        trace.push_back({{"lemma_id", name}, {"statement", lemma_statement(check.id)}});
        if (check.needs_corpus && corpus.empty()) {
            skipped.push_back(name);
            rows.emplace_back(check.id, "SKIP (no corpus)");
            continue;
        }
        const VerificationReport report = check.run(s, corpus);
        all_passed = all_passed && report.passed();
        reports.push_back(to_json(report));
        rows.emplace_back(check.id, report.passed() ? "PASS" : "FAIL");
    }
    if (s.table()) {
        out << std::left << std::setw(16) << "lemma_id" << std::setw(18) << "status" << "statement\n";
        for (const auto& [id, status] : rows) {
            out << std::left << std::setw(16) << lemma_name(id) << std::setw(18) << status << lemma_statement(id) << '\n';
        }
    } else {
        print_json(out, {{"status", all_passed ? "pass" : "fail"}, {"reports", reports}, {"skipped", skipped}, {"traceability", trace}});
    }
    return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_corpus_check(const Settings& s, LemmaId id, std::size_t n, std::ostream& out) {
    if (s.corpus.empty()) throw UsageError("needs --corpus <graph6 file>");
    const auto corpus = load_records(s.corpus);
    const VerificationReport report =
        id == LemmaId::PPathClass ? verify_path_class(n, corpus, s.verify()) : verify_wheel_uniqueness(n, corpus, s.verify());
    if (s.table()) {
        print_report_table(out, report);
        for (const auto& [key, v] : report.details.items()) out << "  " << key << ": " << v.dump() << '\n';
    } else {
        print_json(out, to_json(report));
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Domination polynomials: computation, cycle-family sequences and exact verification.", "dompoly"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    app.add_option("--threads", s.threads, "Worker-count hint (0 = hardware concurrency)");
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--guard-override", s.guard, "Largest order allowed for brute-force enumeration")->check(CLI::Range(1, 62));

    std::size_t n = 0;
    std::optional<std::string> file;
    std::string target;
    std::vector<std::string> files;

    auto add_graph_input = [&](CLI::App* sub) {
        sub->add_option("file", file, "graph6 file");
        sub->add_option("--family", s.family, "Builtin family: cycle:N, path:N, complete:N, wheel:N, join:M,N");
    };
    auto add_corpus = [&](CLI::App* sub) { sub->add_option("--corpus", s.corpus, "graph6 corpus file (repeatable)"); };

    auto* poly = app.add_subcommand("poly", "Domination polynomial of a graph");
    add_graph_input(poly);
    auto* gamma = app.add_subcommand("gamma", "Domination number of a graph");
    add_graph_input(gamma);
    auto* cycle = app.add_subcommand("cycle", "D(C_n, x) from the cycle recurrence");
    cycle->add_option("n", n, "Cycle order")->required();
    auto* eval = app.add_subcommand("eval", "Evaluations of D(C_n) and the derived sequences");
    eval->add_option("n", n, "Cycle order")->required();
    eval->add_option("--at", s.at, "Evaluation point for D, D' and D'' (default -1)");
    auto* verify = app.add_subcommand("verify", "Run one check by lemma id, or 'all'");
    verify->add_option("lemma", target, "Lemma id or 'all'")->required();
    verify->add_option("--max-n", s.max_n, "Upper end of the checked range");
    verify->add_option("--pairs", s.pairs, "Random pairs for L2-union");
    add_corpus(verify);
    auto* search = app.add_subcommand("search-partitions", "Compare cycle unions of order n with C_n");
    search->add_option("n", n, "Total order")->required();
    search->add_option("--min-part", s.min_part, "Smallest part, 1 or 3");
    auto* classify = app.add_subcommand("classify", "Group corpus graphs by domination polynomial");
    classify->add_option("files", files, "graph6 files");
    classify->add_option("--order", s.order, "Only graphs of this order");
    add_corpus(classify);
    auto* path = app.add_subcommand("path-class", "Class of P_n over a corpus");
    path->add_option("n", n, "Path order (multiple of 3, at least 6)")->required();
    add_corpus(path);
    auto* wheel = app.add_subcommand("wheel", "Class of W_n over a corpus");
    wheel->add_option("n", n, "Wheel order (at least 4)")->required();
    add_corpus(wheel);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(s, file, out);
        if (gamma->parsed()) return cmd_gamma(s, file, out);
        if (cycle->parsed()) return cmd_cycle(s, n, out);
        if (eval->parsed()) return cmd_eval(s, n, out);
        if (verify->parsed()) return cmd_verify(s, target, out);
        if (search->parsed()) return cmd_search(s, n, out);
        if (classify->parsed()) return cmd_classify(s, files, out);
        if (path->parsed()) return cmd_corpus_check(s, LemmaId::PPathClass, n, out);
        if (wheel->parsed()) return cmd_corpus_check(s, LemmaId::CorWheel, n, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace dompoly::cli
