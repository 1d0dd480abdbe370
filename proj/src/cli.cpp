#include "distinv/cli.hpp"

#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "distinv/constructive.hpp"
#include "distinv/errors.hpp"
#include "distinv/hunt.hpp"
#include "distinv/labeling_search.hpp"
#include "distinv/list_numbers.hpp"
#include "distinv/suites.hpp"

namespace distinv::cli {

using nlohmann::ordered_json;

namespace {

ordered_json error_object(const std::string& kind, const std::string& message) {
    return ordered_json{{"error", ordered_json{{"kind", kind}, {"message", message}}}};
}

int emit_exception(std::ostream& out, const std::exception& e) {
    std::string kind = "internal";
    int code = kExitVerifyFailure;
    if (dynamic_cast<const parse_error*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) {
        kind = "parse";
        code = kExitUsage;
    } else if (dynamic_cast<const cap_error*>(&e)) {
        kind = "cap";
        code = kExitCap;
    }
    out << error_object(kind, e.what()).dump() << "\n";
    return code;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

ordered_json labels_json(const Labeling& c) { return ordered_json(c.labels); }

ordered_json assignment_json(const ListAssignment& a) {
    ordered_json lists = ordered_json::array();
    for (const auto& list : a.lists) lists.push_back(list);
    return lists;
}

ordered_json graph_json(const Graph& g) {
    return ordered_json{{"name", g.name()},
                        {"n", g.order()},
                        {"edges", g.edge_count()},
                        {"graph6", encode_graph6(g)}};
}

struct ListNumbers {
    int value = 0;
    bool agree = true;
    int m_max_used = 0;
    int k_max_used = 0;
};

// Runs the requested list-number path(s); both paths must agree when both run.
ListNumbers compute_list_number(Predicate pred, const Graph& g, const std::string& path,
                                std::optional<int> m_max, std::optional<int> k_max,
                                const Caps& caps) {
    ListNumbers out;
    std::optional<int> via_char;
    std::optional<int> via_direct;
    if (path == "char" || path == "both") {
        const auto res = list_number_characterization(pred, g, m_max, caps);
        via_char = res.value;
        out.m_max_used = res.reports.empty() ? 0 : res.reports.back().m_max;
    }
    if (path == "direct" || path == "both") {
        const int bound = k_max.value_or(via_char.value_or(g.order()));
        const auto res = list_number_direct(pred, g, bound, caps);
        if (!res.value) {
            throw cap_error("direct list-number search exhausted k_max=" +
                            std::to_string(bound) + " without a passing k");
        }
        via_direct = *res.value;
        out.k_max_used = bound;
    }
    out.agree = !via_char || !via_direct || *via_char == *via_direct;
    out.value = via_char ? *via_char : *via_direct;
    return out;
}

} // namespace

Graph read_graph(std::istream& in, const std::string& format) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (format == "graph6") return parse_graph6(text);
    if (format == "edges") return parse_edge_list(text);
    if (format != "auto") throw parse_error("unknown input format: " + format);
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw parse_error("empty input");
    return (text[pos] >= '0' && text[pos] <= '9') ? parse_edge_list(text) : parse_graph6(text);
}

int run_invariants(std::istream& in, std::ostream& out, std::ostream& err,
                   const InvariantsOptions& options) {
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const Graph g = read_graph(in, options.format);
        const auto aut = automorphisms(g, options.caps.group_order);
        if (!aut.complete) throw cap_error("automorphism group truncated");
        ordered_json timing;
        timing["aut"] = elapsed_ms(t0);

        ordered_json report;
        report["graph"] = graph_json(g);
        report["aut_order"] = aut.order();

        const struct {
            Predicate pred;
            const char* section;
            const char* base_key;
            const char* list_key;
        } rows[] = {
            {Predicate::distinguishing, "distinguishing", "D", "D_l"},
            {Predicate::proper, "proper", "chi", "chi_l"},
            {Predicate::proper_distinguishing, "proper_distinguishing", "chi_D", "chi_Dl"},
        };
        for (const auto& row : rows) {
            const auto t1 = std::chrono::steady_clock::now();
            ordered_json section;
            const auto base = min_labels(row.pred, g, aut);
            section[row.base_key] = base.count;
            section["witness"] = labels_json(base.witness);
            if (!options.skip_list) {
                const auto ln = compute_list_number(row.pred, g, options.list_path,
                                                    options.m_max, options.k_max, options.caps);
                section[row.list_key] = ln.value;
                section["list_path"] = options.list_path;
                if (ln.m_max_used > 0) section["m_max"] = ln.m_max_used;
                if (ln.k_max_used > 0) section["k_max"] = ln.k_max_used;
                section["agree"] = ln.agree;
            }
            report[row.section] = std::move(section);
            timing[row.section] = elapsed_ms(t1);
        }
        if (options.with_timing) report["timing_ms"] = std::move(timing);
        out << report.dump() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        (void)err;
        return emit_exception(out, e);
    }
}

int run_listnum(std::istream& in, std::ostream& out, std::ostream& err,
                const ListnumOptions& options) {
    try {
        const Graph g = read_graph(in, options.format);
        ordered_json report;
        report["graph"] = graph_json(g);
        report["pred"] = std::string(predicate_name(options.pred));

        std::optional<int> char_value;
        if (options.path == "char" || options.path == "both") {
            const auto res = list_number_characterization(options.pred, g, options.m_max,
                                                          options.caps);
            char_value = res.value;
            ordered_json reports = ordered_json::array();
            for (const auto& rep : res.reports) {
                ordered_json per_m = ordered_json::array();
                for (const auto& entry : rep.per_m) {
                    per_m.push_back(ordered_json{{"m", entry.m},
                                                 {"B", entry.b_count.str()},
                                                 {"A", entry.a_count.str()},
                                                 {"equal", entry.equal}});
                }
                ordered_json item{{"d", rep.d},
                                  {"m_max", rep.m_max},
                                  {"verdict", rep.verdict},
                                  {"per_m", std::move(per_m)}};
                if (rep.witness) item["witness"] = assignment_json(*rep.witness);
                reports.push_back(std::move(item));
            }
            report["characterization"] =
                ordered_json{{"value", res.value}, {"reports", std::move(reports)}};
        }
        if (options.path == "direct" || options.path == "both") {
            const int bound = options.k_max.value_or(char_value.value_or(g.order()));
            const auto res = list_number_direct(options.pred, g, bound, options.caps);
            ordered_json per_k = ordered_json::array();
            for (const auto& entry : res.per_k) {
                ordered_json item{{"k", entry.k},
                                  {"passes", entry.passes},
                                  {"representatives", entry.representatives}};
                if (entry.witness) item["witness"] = assignment_json(*entry.witness);
                per_k.push_back(std::move(item));
            }
            ordered_json direct{{"k_max", bound}, {"per_k", std::move(per_k)}};
            if (res.value) direct["value"] = *res.value;
            report["direct"] = std::move(direct);
            if (char_value && res.value) report["agree"] = *char_value == *res.value;
        }
        out << report.dump() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        (void)err;
        return emit_exception(out, e);
    }
}

int run_family(std::ostream& out, std::ostream& err, const FamilyOptions& options) {
    try {
        const Family family = family_from_string(options.family);
        if (family_takes_two_params(family) != options.b.has_value()) {
            throw parse_error(options.b ? "family takes a single size parameter"
                                        : "family requires a second size parameter");
        }
        const Graph g = generate_family(family, options.a, options.b.value_or(0));
        if (options.format == "graph6") {
            out << encode_graph6(g) << "\n";
        } else if (options.format == "edges") {
            out << format_edge_list(g);
        } else {
            throw parse_error("unknown output format: " + options.format);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        (void)err;
        return emit_exception(out, e);
    }
}

int run_verify(std::ostream& out, std::ostream& err, const VerifyOptions& options) {
    try {
        const auto results = run_suites(options.suite, options.seed, options.count, options.caps);
        bool all_pass = true;
        ordered_json suites = ordered_json::array();
        for (const auto& res : results) {
            all_pass = all_pass && res.passed();
            ordered_json item{{"name", res.name},
                              {"checks", res.checks},
                              {"failures", res.failures}};
            if (!res.first_counterexample.empty()) {
                item["first_counterexample"] = res.first_counterexample;
            }
            suites.push_back(std::move(item));
            if (options.verbose) {
                err << "suite " << res.name << ": " << res.checks << " checks, " << res.failures
                    << " failures" << (res.passed() ? "" : " <- FAIL") << "\n";
            }
        }
        const ordered_json report{
            {"seed", options.seed}, {"suites", std::move(suites)}, {"all_pass", all_pass}};
        out << report.dump() << "\n";
        return all_pass ? kExitOk : kExitVerifyFailure;
    } catch (const std::exception& e) {
        (void)err;
        return emit_exception(out, e);
    }
}

int run_hunt(std::istream& in, std::ostream& out, std::ostream& err, const HuntOptions& options) {
    std::vector<Graph> graphs;
    std::vector<std::size_t> line_of; // stream index -> 1-based input line
    std::size_t parse_skips = 0;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        try {
            graphs.push_back(parse_graph6(line));
            line_of.push_back(line_number);
        } catch (const std::exception& e) {
            ++parse_skips;
            err << "hunt: skip line " << line_number << ": " << e.what() << "\n";
        }
    }

    const HuntReport report = hunt(options.pred, graphs, options.fixed_k, options.caps);
    bool reverification_failed = false;
    for (const auto& hit : report.hits) {
        if (!hit.reverified) reverification_failed = true;
        const ordered_json item{{"type", "hit"},
                                {"line", line_of[hit.index]},
                                {"graph6", encode_graph6(hit.graph)},
                                {"n", hit.graph.order()},
                                {"base", hit.base},
                                {"violating", assignment_json(hit.violating)},
                                {"reverified", hit.reverified}};
        out << item.dump() << "\n";
    }
    for (const auto& skip : report.skips) {
        err << "hunt: skip line " << line_of[skip.index] << ": " << skip.reason << "\n";
    }
    const ordered_json summary{{"type", "summary"},
                               {"scanned", report.scanned},
                               {"skipped", parse_skips + report.skips.size()},
                               {"hits", report.hits.size()}};
    out << summary.dump() << "\n";
    return reverification_failed ? kExitVerifyFailure : kExitOk;
}

} // namespace distinv::cli
