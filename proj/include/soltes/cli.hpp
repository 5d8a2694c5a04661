#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soltes/builder.hpp"
#include "soltes/cayley.hpp"
#include "soltes/enumerate.hpp"
#include "soltes/graph6.hpp"
#include "soltes/plan.hpp"
#include "soltes/report.hpp"
#include "soltes/transforms.hpp"

namespace soltes::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification = 1;
inline constexpr int exit_usage = 2;

/// --threads wins; otherwise SOLTES_THREADS; otherwise all cores (0).
inline unsigned resolve_threads(std::optional<unsigned> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SOLTES_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<unsigned>(v);
    }
    return 0;
}

/// Number of k columns of a tables CSV row: 8 for cubic, 4 otherwise, more
/// if some graph has more Šoltés vertices.
inline std::int64_t table_columns(const TableRow& row) {
    std::int64_t k = row.r <= 3 ? 8 : 4;
    if (!row.counts.empty()) k = std::max(k, row.counts.rbegin()->first);
    return k;
}

inline std::string table_csv(const TableRow& row) {
    std::string s = std::to_string(row.total);
    for (std::int64_t k = 1; k <= table_columns(row); ++k) {
        auto it = row.counts.find(k);
        s += "," + std::to_string(it == row.counts.end() ? 0 : it->second);
    }
    return s;
}

inline ordered_json table_json(const TableRow& row) {
    ordered_json j;
    j["n"] = row.n;
    j["r"] = row.r;
    j["total"] = row.total;
    ordered_json counts = ordered_json::object();
    for (auto [k, c] : row.counts) counts[std::to_string(k)] = c;
    j["counts"] = counts;
    return j;
}

inline ordered_json entry_json(const EntryReport& r) {
    ordered_json j;
    j["entry"] = r.name;
    j["group_order"] = r.group_order;
    j["regular"] = r.regular ? ordered_json(*r.regular) : ordered_json(nullptr);
    j["connected"] = r.connected;
    j["girth"] = r.girth ? ordered_json(*r.girth) : ordered_json(nullptr);
    j["diameter"] = r.diameter ? ordered_json(*r.diameter) : ordered_json(nullptr);
    j["bipartite"] = r.bipartite;
    if (r.soltes) {
        j["transformed_order"] = *r.transformed_order;
        j["transformed_regular"] = r.transformed_regular ? ordered_json(*r.transformed_regular) : ordered_json(nullptr);
        j["soltes_count"] = r.soltes->soltes_set.size();
        j["alpha"] = format_ratio(r.soltes->alpha);
    }
    j["mismatches"] = r.mismatches;
    j["verification"] = r.passed() ? "PASS" : "FAIL";
    return j;
}

// Reads graph6 lines in blocks and maps each through `fn` in parallel,
// writing results in input order. Blank lines are skipped.
template <class Fn>
void map_lines(std::istream& in, std::ostream& out, unsigned threads, Fn&& fn) {
    constexpr std::size_t block = 4096;
    std::vector<std::string> lines;
    std::vector<std::string> results;
    std::size_t line_no = 0;
    std::vector<std::size_t> numbers;
    auto flush = [&] {
        results.assign(lines.size(), {});
        parallel_for(lines.size(), threads, [&](std::size_t i) { results[i] = fn(lines[i], numbers[i]); });
        for (const auto& r : results) out << r << '\n';
        lines.clear();
        numbers.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
        numbers.push_back(line_no);
        if (lines.size() == block) flush();
    }
    if (!lines.empty()) flush();
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wiener index and Šoltés vertex toolkit"};
    app.require_subcommand(1);
    std::optional<unsigned> threads_flag;
    app.add_option("--threads", threads_flag, "Worker threads (default: SOLTES_THREADS or all cores)");

    auto* soltes_cmd = app.add_subcommand("soltes", "Šoltés report for each graph6 line (stdin or file)");
    std::string soltes_file;
    soltes_cmd->add_option("file", soltes_file, "graph6 file; stdin if omitted");

    auto* construct_cmd = app.add_subcommand("construct", "Build a cubic 2-connected graph with Šoltés vertices");
    int t = 0;
    std::optional<std::int64_t> q;
    int r = 1;
    construct_cmd->add_option("--t", t, "Diamonds per half ring (t >= 3 for r = 1)")->required();
    construct_cmd->add_option("--q", q, "Attached vertices per tree (default: smallest admissible)");
    construct_cmd->add_option("--r", r, "2^r Šoltés vertices (default 1)")->check(CLI::PositiveNumber);

    auto* tables_cmd = app.add_subcommand("tables", "Count connected r-regular graphs by number of Šoltés vertices");
    int tn = 0, tr = 3;
    std::string format = "csv";
    bool emit = false;
    tables_cmd->add_option("--n", tn, "Order")->required();
    tables_cmd->add_option("--r", tr, "Degree")->required();
    tables_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    tables_cmd->add_flag("--graph6", emit, "Also print every graph with a Šoltés vertex as graph6");

    auto* qrange_cmd = app.add_subcommand("qrange", "Admissible q interval for G_t");
    int qt = 0;
    qrange_cmd->add_option("--t", qt, "t >= 3")->required();

    auto* seq_cmd = app.add_subcommand("sequences", "Modification chain of layer sequences for 2q vertices");
    std::int64_t sq = 0;
    seq_cmd->add_option("--q", sq, "q >= 1")->required()->check(CLI::PositiveNumber);

    auto* transform_cmd = app.add_subcommand("transform", "Apply a graph operator to graph6 lines on stdin");
    std::string op;
    transform_cmd->add_option("op", op, "truncate or linegraph")->required()->check(CLI::IsMember({"truncate", "linegraph"}));

    auto* cayley_cmd = app.add_subcommand("cayley", "Rebuild and verify a catalog Cayley graph");
    std::string entry;
    std::string catalog = default_catalog_path();
    bool skip_transform = false;
    cayley_cmd->add_option("--entry", entry, "Catalog name, e.g. CVT(600,259), or 'all'")->required();
    cayley_cmd->add_option("--catalog", catalog, "Catalog JSON file");
    cayley_cmd->add_flag("--no-transform", skip_transform, "Skip the Šoltés check on the transformed graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    const unsigned threads = resolve_threads(threads_flag);

    try {
        if (*soltes_cmd) {
            std::ifstream file;
            std::istream* src = &in;
            if (!soltes_file.empty()) {
                file.open(soltes_file);
                if (!file) {
                    err << "error: cannot open " << soltes_file << '\n';
                    return exit_usage;
                }
                src = &file;
            }
            map_lines(*src, out, threads, [](const std::string& line, std::size_t no) {
                try {
                    const Graph g = decode_graph6(line);
                    return write_report(soltes_report(g), line);
                } catch (const std::exception& e) {
                    ordered_json j;
                    j["id"] = line;
                    j["line"] = no;
                    j["error"] = e.what();
                    return j.dump();
                }
            });
            return exit_ok;
        }
        if (*construct_cmd) {
            Construction c = r == 1 ? build_two_soltes(t, q) : build_many_soltes(t, r, q);
            const ConstructionCheck check = verify_construction(c.graph, c.plan, threads);
            out << encode_graph6(c.graph) << '\n';
            ordered_json j;
            j["n"] = c.graph.order();
            j["plan"] = plan_json(c.plan);
            j["check"] = check_json(check);
            j["verification"] = check.passed() ? "PASS" : "FAIL";
            out << j.dump() << '\n';
            if (!check.passed()) {
                for (const auto& p : check.problems) err << "verification failed: " << p << '\n';
                return exit_verification;
            }
            return exit_ok;
        }
        if (*tables_cmd) {
            const TableRow row = classify_table(tn, tr, threads);
            out << (format == "csv" ? table_csv(row) : table_json(row).dump()) << '\n';
            if (emit)
                for (const Graph& g : row.with_soltes) out << encode_graph6(g) << '\n';
            return exit_ok;
        }
        if (*qrange_cmd) {
            auto [lo, hi] = q_range(qt);
            out << lo << ' ' << hi << '\n';
            return exit_ok;
        }
        if (*seq_cmd) {
            for (const auto& L : enumerate_chain(sq)) out << L.to_string() << '\n';
            return exit_ok;
        }
        if (*transform_cmd) {
            std::string line;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
                const Graph g = decode_graph6(line);
                out << encode_graph6(op == "truncate" ? truncate(g) : line_graph(g)) << '\n';
            }
            return exit_ok;
        }
        if (*cayley_cmd) {
            const auto entries = load_catalog(catalog);
            std::vector<GeneratorCatalogEntry> chosen;
            if (entry == "all")
                chosen = entries;
            else
                chosen.push_back(find_entry(entries, entry));
            bool ok = true;
            for (const auto& e : chosen) {
                const EntryReport rep = verify_entry(e, !skip_transform, threads);
                out << entry_json(rep).dump() << '\n';
                ok = ok && rep.passed();
            }
            return ok ? exit_ok : exit_verification;
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const limit_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace soltes::cli
