#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairset/fairness.hpp"
#include "fairset/graph.hpp"
#include "fairset/graph6.hpp"
#include "fairset/json_io.hpp"
#include "fairset/metric.hpp"
#include "fairset/oracles.hpp"
#include "fairset/scan.hpp"
#include "fairset/structure.hpp"
#include "fairset/trees.hpp"
#include "fairset/vertex_set.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

int env_default_ceiling() {
    const char* env = std::getenv("FAIRSET_CEILING");
    if (!env) return fairset::kDefaultEnumerationCeiling;
    std::string text(env);
    try {
        std::size_t pos = 0;
        int v = std::stoi(text, &pos);
        if (pos != text.size() || v < 1 || v > 64) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("FAIRSET_CEILING must be an integer in 1..64, got '" + text +
                                    "'");
    }
}

fairset::VertexSet parse_set_csv(const std::string& text) {
    fairset::VertexSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size())
            throw std::invalid_argument("bad vertex '" + tok + "' in set '" + text + "'");
        s.add(v);
    }
    if (s.empty()) throw std::invalid_argument("vertex set '" + text + "' is empty");
    return s;
}

std::string one_based_string(fairset::VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    });
    return out + "}";
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// One bag of option storage per subcommand; each subcommand binds the
// subset it accepts.
struct Opts {
    std::string family;
    std::string family2;
    std::string input;
    std::string format = "g6";
    std::string set_csv;
    std::string set2_csv;
    std::string interpretation;
    std::string shard = "0/1";
    std::string checkpoint;
    bool include_singleton_s = false;
    bool force = false;
    bool json = false;
    bool chordal_only = false;
    int ceiling = fairset::kDefaultEnumerationCeiling;
    int workers = 0;  // 0: use available parallelism
    int catalog_n = 0;
    int trees_n = 0;
    int max_n = 0;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
};

void add_graph_source(CLI::App* cmd, Opts& o) {
    cmd->add_option("--family", o.family,
                    "family tag, e.g. complete:4, cycle:5, wheel:6, complete_bipartite:2,3");
    cmd->add_option("--input", o.input, "graph file, or - for stdin");
    cmd->add_option("--format", o.format, "input format: g6 or edgelist")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    o.seed_opt = cmd->add_option("--seed", o.seed, "seed for the random families");
}

void add_enumeration_flags(CLI::App* cmd, Opts& o, int default_ceiling) {
    o.ceiling = default_ceiling;
    cmd->add_flag("--include-singleton-s", o.include_singleton_s,
                  "also admit singleton reference sets S");
    cmd->add_option("--ceiling", o.ceiling, "largest order enumerated without --force")
        ->check(CLI::Range(1, 64));
    cmd->add_flag("--force", o.force, "enumerate past the ceiling");
    cmd->add_option("--workers", o.workers, "worker threads (0 = available parallelism)")
        ->check(CLI::Range(0, 64));
}

fairset::Graph load_graph(const Opts& o) {
    bool has_family = !o.family.empty();
    bool has_input = !o.input.empty();
    if (has_family == has_input)
        throw std::invalid_argument("exactly one of --family or --input is required");
    if (has_family) {
        fairset::FamilySpec spec = fairset::parse_family(o.family);
        if (o.seed_opt != nullptr && o.seed_opt->count() > 0) {
            if (spec.family != fairset::Family::random_tree &&
                spec.family != fairset::Family::random_block_graph)
                throw std::invalid_argument("--seed applies only to the random families");
            spec.seed = o.seed;
        }
        return fairset::generate(spec);
    }
    if (o.format == "edgelist") {
        if (o.input == "-") return fairset::parse_edge_list(std::cin);
        std::ifstream f(o.input);
        if (!f) throw std::invalid_argument("cannot open input file " + o.input);
        return fairset::parse_edge_list(f);
    }
    std::istringstream in(read_all(o.input));
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) return fairset::parse_graph6(line);
    throw std::invalid_argument("input contains no graph6 line");
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min<unsigned>(hw, 64));
}

std::pair<int, int> parse_shard(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("--shard must look like k/K, got '" + text + "'");
    int k, kk;
    try {
        std::size_t p1 = 0, p2 = 0;
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        k = std::stoi(a, &p1);
        kk = std::stoi(b, &p2);
        if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--shard must look like k/K, got '" + text + "'");
    }
    if (kk < 1 || k < 0 || k >= kk)
        throw std::invalid_argument("--shard needs 0 <= k < K, got '" + text + "'");
    return {k, kk};
}

json source_config(const Opts& o) {
    json cfg;
    if (!o.family.empty()) cfg["family"] = o.family;
    if (!o.input.empty()) {
        cfg["input"] = o.input;
        cfg["format"] = o.format;
    }
    if (o.seed_opt != nullptr && o.seed_opt->count() > 0) cfg["seed"] = o.seed;
    return cfg;
}

void emit_json(const std::string& command, json config, json report) {
    json out;
    out["command"] = command;
    out["config"] = std::move(config);
    out["report"] = std::move(report);
    std::cout << out.dump(2) << "\n";
}

int run_fc(const Opts& o) {
    fairset::Graph g = load_graph(o);
    fairset::DistanceMatrix dm(g);
    fairset::VertexSet s = parse_set_csv(o.set_csv);
    fairset::FairCenterResult r = fairset::fair_center(dm, s);
    bool one_based = !o.family.empty();
    if (o.json) {
        json cfg = source_config(o);
        cfg["set"] = o.set_csv;
        emit_json("fc", std::move(cfg), fairset::to_json(r, one_based));
    } else {
        std::cout << "s: " << s.to_string() << "\n";
        std::cout << "center: " << r.center.to_string() << "\n";
        if (one_based) std::cout << "center_1based: " << one_based_string(r.center) << "\n";
        std::cout << "min partiality: " << r.min_partiality << "\n";
    }
    return kExitOk;
}

int run_partiality(const Opts& o) {
    fairset::Graph g = load_graph(o);
    fairset::DistanceMatrix dm(g);
    fairset::VertexSet s = parse_set_csv(o.set_csv);
    fairset::PartialityProfile p = fairset::partiality_profile(dm, s);
    bool one_based = !o.family.empty();
    if (o.json) {
        json cfg = source_config(o);
        cfg["set"] = o.set_csv;
        emit_json("partiality", std::move(cfg), fairset::to_json(p, one_based));
    } else {
        std::cout << "s: " << s.to_string() << "\n";
        for (int x = 0; x < g.vertex_count(); ++x)
            std::cout << "f(" << x << ") = " << p.f[static_cast<std::size_t>(x)] << "\n";
        std::cout << "min f: " << p.min_f << "\n";
    }
    return kExitOk;
}

json enumeration_config(const Opts& o) {
    json cfg = source_config(o);
    cfg["include_singleton_s"] = o.include_singleton_s;
    cfg["ceiling"] = o.ceiling;
    cfg["force"] = o.force;
    return cfg;
}

fairset::FairSetInventory enumerate_with(const Opts& o, const fairset::Graph& g) {
    fairset::EnumerateOptions opt;
    opt.include_singleton_s = o.include_singleton_s;
    opt.ceiling = o.ceiling;
    opt.force = o.force;
    opt.workers = resolve_workers(o.workers);
    return fairset::enumerate_fair_sets(g, opt);
}

int run_enumerate(const Opts& o) {
    fairset::Graph g = load_graph(o);
    fairset::FairSetInventory inv = enumerate_with(o, g);
    bool one_based = !o.family.empty();
    if (o.json) {
        emit_json("enumerate", enumeration_config(o), fairset::to_json(inv, one_based));
    } else {
        std::cout << "graph6: " << inv.graph6 << "\n";
        std::cout << "fair sets: " << inv.entries.size() << "\n";
        for (const auto& e : inv.entries)
            std::cout << e.set.to_string() << "  <- S=" << e.witness.to_string()
                      << "  f=" << e.min_partiality << "\n";
    }
    return kExitOk;
}

int run_audit(const Opts& o) {
    fairset::Graph g = load_graph(o);
    fairset::FairSetInventory inv = enumerate_with(o, g);
    fairset::AuditReport report = fairset::connectivity_audit(g, inv);
    bool one_based = !o.family.empty();
    if (o.json) {
        emit_json("audit", enumeration_config(o), fairset::to_json(report, one_based));
    } else {
        std::cout << "graph6: " << report.graph6 << "\n";
        std::cout << "fair sets: " << report.verdicts.size() << "\n";
        std::cout << "all connected: " << (report.all_connected ? "yes" : "no") << "\n";
        for (const auto& e : report.disconnected)
            std::cout << "disconnected: " << e.set.to_string() << "  <- S=" << e.witness.to_string()
                      << "\n";
    }
    return report.all_connected ? kExitOk : kExitMismatch;
}

int run_verify_family(const Opts& o) {
    if (o.family.empty()) throw std::invalid_argument("verify-family requires --family");
    fairset::OracleSpec spec;
    spec.family = o.family;
    spec.include_singleton_s = o.include_singleton_s;
    if (!o.interpretation.empty())
        spec.interpretation = o.interpretation == "edges" ? fairset::WheelInterpretation::edges
                                                          : fairset::WheelInterpretation::vertices;
    spec.ceiling = o.ceiling;
    spec.force = o.force;
    spec.workers = resolve_workers(o.workers);
    fairset::DiscrepancyReport report = fairset::verify_family(spec);
    if (o.json) {
        json cfg = enumeration_config(o);
        if (!o.interpretation.empty()) cfg["interpretation"] = o.interpretation;
        emit_json("verify-family", std::move(cfg), fairset::to_json(report, true));
    } else {
        std::cout << "family: " << report.family << "\n";
        std::cout << "graph6: " << report.graph6 << "\n";
        if (report.interpretation)
            std::cout << "interpretation: " << fairset::interpretation_name(*report.interpretation)
                      << "\n";
        std::cout << "candidates checked: " << report.candidates_checked << "\n";
        std::cout << "verdict: " << (report.exact() ? "exact" : "mismatch") << "\n";
        for (fairset::VertexSet s : report.false_positives)
            std::cout << "false positive: " << s.to_string() << "\n";
        for (fairset::VertexSet s : report.false_negatives)
            std::cout << "false negative: " << s.to_string() << "\n";
        for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
    }
    return report.exact() ? kExitOk : kExitMismatch;
}

int run_product_check(const Opts& o) {
    if (o.family.empty() || o.family2.empty())
        throw std::invalid_argument("product-check requires --family and --family2");
    Opts first = o;
    first.input.clear();
    fairset::Graph g1 = load_graph(first);
    Opts second = o;
    second.family = o.family2;
    second.input.clear();
    fairset::Graph g2 = load_graph(second);
    fairset::VertexSet s1 = parse_set_csv(o.set_csv);
    fairset::VertexSet s2 = parse_set_csv(o.set2_csv);
    fairset::ProductCheckReport report = fairset::verify_product_identity(g1, g2, s1, s2);
    bool ok = report.identity_holds && report.additivity_holds && report.connectivity_matches;
    if (o.json) {
        json cfg = source_config(o);
        cfg["family2"] = o.family2;
        cfg["set"] = o.set_csv;
        cfg["set2"] = o.set2_csv;
        emit_json("product-check", std::move(cfg), fairset::to_json(report, true));
    } else {
        std::cout << "FC(S1): " << report.fc1.to_string() << "\n";
        std::cout << "FC(S2): " << report.fc2.to_string() << "\n";
        std::cout << "FC(S1 x S2): " << report.fc_product.to_string() << "\n";
        std::cout << "identity holds: " << (report.identity_holds ? "yes" : "no") << "\n";
        std::cout << "additivity holds: " << (report.additivity_holds ? "yes" : "no") << "\n";
        std::cout << "connectivity matches: " << (report.connectivity_matches ? "yes" : "no")
                  << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

std::vector<std::string> stream_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

int run_scan(const Opts& o) {
    int sources = (!o.input.empty() ? 1 : 0) + (o.catalog_n > 0 ? 1 : 0) + (o.trees_n > 0 ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "scan needs exactly one of --input, --catalog <max_n>, --trees <max_n>");

    fairset::ScanTask task;
    if (!o.input.empty()) {
        task.lines = stream_lines(read_all(o.input));
    } else if (o.catalog_n > 0) {
        task.lines = fairset::connected_catalog_graph6(o.catalog_n);
    } else {
        for (int n = 1; n <= o.trees_n; ++n)
            for (const fairset::Graph& t : fairset::free_trees(n))
                task.lines.push_back(fairset::format_graph6(t));
    }
    task.include_singleton_s = o.include_singleton_s;
    task.ceiling = o.ceiling;
    task.force = o.force;
    task.chordal_only = o.chordal_only;
    auto [k, kk] = parse_shard(o.shard);
    task.shard_index = k;
    task.shard_count = kk;
    task.checkpoint_path = o.checkpoint;

    int workers = resolve_workers(o.workers);
    fairset::ScanReport report;
    if (workers <= 1) {
        report = fairset::scan_stream(task);
    } else {
        std::vector<fairset::ScanTask> subtasks;
        for (int w = 0; w < workers; ++w) {
            fairset::ScanTask sub = task;
            sub.shard_index = task.shard_index + w * task.shard_count;
            sub.shard_count = task.shard_count * workers;
            if (!task.checkpoint_path.empty())
                sub.checkpoint_path = task.checkpoint_path + ".w" + std::to_string(w);
            subtasks.push_back(std::move(sub));
        }
        std::vector<fairset::ScanReport> parts(subtasks.size());
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < subtasks.size(); ++w)
            pool.emplace_back(
                [&, w] { parts[w] = fairset::scan_stream(subtasks[w]); });
        for (auto& t : pool) t.join();
        report = fairset::merge_reports(parts);
    }

    if (o.json) {
        json cfg;
        if (!o.input.empty()) cfg["input"] = o.input;
        if (o.catalog_n > 0) cfg["catalog"] = o.catalog_n;
        if (o.trees_n > 0) cfg["trees"] = o.trees_n;
        cfg["include_singleton_s"] = o.include_singleton_s;
        cfg["ceiling"] = o.ceiling;
        cfg["force"] = o.force;
        cfg["chordal_only"] = o.chordal_only;
        cfg["shard"] = o.shard;
        if (!o.checkpoint.empty()) cfg["checkpoint"] = o.checkpoint;
        emit_json("scan", std::move(cfg), fairset::to_json(report));
    } else {
        std::cout << fairset::scan_table(report);
    }
    bool refutation = !report.list_b.empty() || !report.list_c.empty() ||
                      !report.cardinality_violations.empty();
    return refutation ? kExitMismatch : kExitOk;
}

int run_trees(const Opts& o) {
    if (o.max_n < 1 || o.max_n > 10)
        throw std::invalid_argument("--max-n must be in 1..10");
    std::vector<std::string> lines;
    for (int n = 1; n <= o.max_n; ++n)
        for (const fairset::Graph& t : fairset::free_trees(n))
            lines.push_back(fairset::format_graph6(t));
    if (o.json) {
        json cfg;
        cfg["max_n"] = o.max_n;
        json report;
        report["count"] = lines.size();
        report["graph6"] = lines;
        emit_json("trees", std::move(cfg), std::move(report));
    } else {
        for (const std::string& line : lines) std::cout << line << "\n";
    }
    return kExitOk;
}

int run_gen(const Opts& o) {
    if (o.family.empty()) throw std::invalid_argument("gen requires --family");
    fairset::Graph g = load_graph(o);
    if (o.json) {
        json cfg = source_config(o);
        cfg["format"] = o.format;
        json report;
        report["graph6"] = fairset::format_graph6(g);
        report["vertex_count"] = g.vertex_count();
        report["edge_count"] = g.edge_count();
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        report["edges"] = edges;
        emit_json("gen", std::move(cfg), std::move(report));
    } else if (o.format == "edgelist") {
        std::cout << g.vertex_count() << " " << g.edge_count() << "\n";
        for (auto [u, v] : g.edges()) std::cout << u << " " << v << "\n";
    } else {
        std::cout << fairset::format_graph6(g) << "\n";
    }
    return kExitOk;
}

int run_cli(int argc, char** argv) {
    int default_ceiling = env_default_ceiling();

    CLI::App app{"partiality, fair centers, and fair-set inventories of small connected graphs"};
    app.require_subcommand(1);

    Opts fc_o, part_o, enum_o, audit_o, verify_o, prod_o, scan_o, trees_o, gen_o;

    CLI::App* fc = app.add_subcommand("fc", "fair center of a reference set S");
    add_graph_source(fc, fc_o);
    fc->add_option("--set", fc_o.set_csv, "comma-separated 0-based vertices")->required();
    fc->add_flag("--json", fc_o.json, "machine-readable output");

    CLI::App* part = app.add_subcommand("partiality", "partiality profile for a reference set S");
    add_graph_source(part, part_o);
    part->add_option("--set", part_o.set_csv, "comma-separated 0-based vertices")->required();
    part->add_flag("--json", part_o.json, "machine-readable output");

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "complete fair-set inventory");
    add_graph_source(enum_cmd, enum_o);
    add_enumeration_flags(enum_cmd, enum_o, default_ceiling);
    enum_cmd->add_flag("--json", enum_o.json, "machine-readable output");

    CLI::App* audit = app.add_subcommand("audit", "connectivity audit of every fair set");
    add_graph_source(audit, audit_o);
    add_enumeration_flags(audit, audit_o, default_ceiling);
    audit->add_flag("--json", audit_o.json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify-family",
                                          "closed-form oracle versus brute force");
    verify->add_option("--family", verify_o.family,
                       "oracle tag: complete:n, complete_minus_edge:n, complete_bipartite:m,n, "
                       "wheel:n, wheel5, odd_cycle:k, cycle:k, symmetric_even:<family>");
    verify->add_option("--interpretation", verify_o.interpretation,
                       "wheel arc-length reading: edges or vertices")
        ->check(CLI::IsMember({"edges", "vertices"}));
    add_enumeration_flags(verify, verify_o, default_ceiling);
    verify->add_flag("--json", verify_o.json, "machine-readable output");

    CLI::App* prod = app.add_subcommand("product-check",
                                        "fair-center identity on a Cartesian product");
    prod->add_option("--family", prod_o.family, "first factor family tag");
    prod->add_option("--family2", prod_o.family2, "second factor family tag");
    prod->add_option("--set", prod_o.set_csv, "reference set in the first factor")->required();
    prod->add_option("--set2", prod_o.set2_csv, "reference set in the second factor")->required();
    prod_o.seed_opt = prod->add_option("--seed", prod_o.seed, "seed for the random families");
    prod->add_flag("--json", prod_o.json, "machine-readable output");

    CLI::App* scan = app.add_subcommand("scan", "classify a graph corpus and hunt counterexamples");
    scan->add_option("--input", scan_o.input, "graph6 stream file, or - for stdin");
    scan->add_option("--catalog", scan_o.catalog_n,
                     "scan all connected graphs up to this order (<= 7)")
        ->check(CLI::Range(1, 7));
    scan->add_option("--trees", scan_o.trees_n, "scan all free trees up to this order (<= 10)")
        ->check(CLI::Range(1, 10));
    scan->add_flag("--chordal-only", scan_o.chordal_only,
                   "restrict to chordal graphs (characterization check)");
    scan->add_option("--shard", scan_o.shard, "process lines with index % K == k, as k/K");
    scan->add_option("--checkpoint", scan_o.checkpoint, "checkpoint file for resumable scans");
    add_enumeration_flags(scan, scan_o, default_ceiling);
    scan->add_flag("--json", scan_o.json, "machine-readable output");

    CLI::App* trees = app.add_subcommand("trees", "emit all free trees as graph6 lines");
    trees->add_option("--max-n", trees_o.max_n, "largest order (<= 10)")->required();
    trees->add_flag("--json", trees_o.json, "machine-readable output");

    CLI::App* gen = app.add_subcommand("gen", "emit one family graph");
    add_graph_source(gen, gen_o);
    gen->add_flag("--json", gen_o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (fc->parsed()) return run_fc(fc_o);
    if (part->parsed()) return run_partiality(part_o);
    if (enum_cmd->parsed()) return run_enumerate(enum_o);
    if (audit->parsed()) return run_audit(audit_o);
    if (verify->parsed()) return run_verify_family(verify_o);
    if (prod->parsed()) return run_product_check(prod_o);
    if (scan->parsed()) return run_scan(scan_o);
    if (trees->parsed()) return run_trees(trees_o);
    if (gen->parsed()) return run_gen(gen_o);
    throw std::logic_error("no subcommand dispatched");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
