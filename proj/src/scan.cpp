#include "fairset/scan.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "fairset/catalog.hpp"
#include "fairset/graph6.hpp"
#include "fairset/metric.hpp"
#include "fairset/structure.hpp"
#include "fairset/trees.hpp"

namespace fairset {

std::string survivor_kind_name(SurvivorKind kind) {
    switch (kind) {
        case SurvivorKind::conjecture_candidate: return "conjecture_candidate";
        case SurvivorKind::block_disconnected: return "block_disconnected";
        case SurvivorKind::chordal_connected: return "chordal_connected";
        case SurvivorKind::cardinality: return "cardinality";
    }
    throw std::logic_error("unknown survivor kind");
}

namespace {

using nlohmann::json;

SurvivorKind kind_from_name(const std::string& name) {
    for (SurvivorKind k : {SurvivorKind::conjecture_candidate, SurvivorKind::block_disconnected,
                           SurvivorKind::chordal_connected, SurvivorKind::cardinality})
        if (survivor_kind_name(k) == name) return k;
    throw std::invalid_argument("unknown survivor kind '" + name + "'");
}

json set_to_json(VertexSet s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

VertexSet set_from_json(const json& arr) {
    VertexSet s;
    for (const auto& v : arr) s.add(v.get<int>());
    return s;
}

struct GraphVerdict {
    bool block = false;
    bool chordal = false;
    bool all_connected = true;
    std::optional<FairSetEntry> first_disconnected;
    std::vector<FairSetEntry> size_n_minus_1;
};

GraphVerdict classify_graph(const Graph& g, bool include_singleton_s, int ceiling, bool force) {
    GraphVerdict v;
    v.block = is_block_graph(g);
    v.chordal = is_chordal(g);
    EnumerateOptions opt;
    opt.include_singleton_s = include_singleton_s;
    opt.ceiling = ceiling;
    opt.force = force;
    FairSetInventory inv = enumerate_fair_sets(g, opt);
    int n = g.vertex_count();
    for (const auto& entry : inv.entries) {
        if (!induced_connected(g, entry.set)) {
            v.all_connected = false;
            if (!v.first_disconnected) v.first_disconnected = entry;
        }
        if (entry.set.size() == n - 1) v.size_n_minus_1.push_back(entry);
    }
    return v;
}

// One shard's progress, serialized as JSON lines: a header object followed
// by one survivor per line. Written atomically (tmp file + rename).
void write_checkpoint(const std::string& path, const ScanTask& task, const ScanReport& report,
                      std::int64_t last_line) {
    json header;
    header["version"] = 1;
    header["shard_index"] = task.shard_index;
    header["shard_count"] = task.shard_count;
    header["chordal_only"] = report.chordal_only;
    header["include_singleton_s"] = report.include_singleton_s;
    header["last_line"] = last_line;
    header["graphs_scanned"] = report.graphs_scanned;
    header["filtered_out"] = report.filtered_out;
    header["lines_skipped"] = report.lines_skipped;
    header["chordal_count"] = report.chordal_count;
    header["cells"] = {{report.cells[0][0], report.cells[0][1]},
                       {report.cells[1][0], report.cells[1][1]}};
    json skips = json::array();
    for (const auto& [line, reason] : report.skips) skips.push_back({line, reason});
    header["skips"] = skips;

    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
        out << header.dump() << '\n';
        auto dump_list = [&](const std::vector<Survivor>& list) {
            for (const Survivor& s : list) {
                json row;
                row["line"] = s.line;
                row["graph6"] = s.graph6;
                row["kind"] = survivor_kind_name(s.kind);
                row["fair_set"] = set_to_json(s.fair_set);
                row["witness"] = set_to_json(s.witness);
                out << row.dump() << '\n';
            }
        };
        dump_list(report.list_a);
        dump_list(report.list_b);
        dump_list(report.list_c);
        dump_list(report.cardinality_violations);
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace checkpoint file " + path);
}

// Restores report state; returns the last processed line, or nullopt when no
// checkpoint exists yet.
std::optional<std::int64_t> load_checkpoint(const std::string& path, const ScanTask& task,
                                            ScanReport& report) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("checkpoint file " + path + " is empty");
    json header = json::parse(line);
    if (header.at("version").get<int>() != 1)
        throw std::runtime_error("unsupported checkpoint version in " + path);
    if (header.at("shard_index").get<int>() != task.shard_index ||
        header.at("shard_count").get<int>() != task.shard_count ||
        header.at("chordal_only").get<bool>() != task.chordal_only ||
        header.at("include_singleton_s").get<bool>() != task.include_singleton_s)
        throw std::invalid_argument("checkpoint " + path + " belongs to a different scan");

    report.graphs_scanned = header.at("graphs_scanned").get<std::uint64_t>();
    report.filtered_out = header.at("filtered_out").get<std::uint64_t>();
    report.lines_skipped = header.at("lines_skipped").get<std::uint64_t>();
    report.chordal_count = header.at("chordal_count").get<std::uint64_t>();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            report.cells[i][j] = header.at("cells")[i][j].get<std::uint64_t>();
    for (const auto& row : header.at("skips"))
        report.skips.emplace_back(row[0].get<std::uint64_t>(), row[1].get<std::string>());

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json row = json::parse(line);
        Survivor s;
        s.line = row.at("line").get<std::uint64_t>();
        s.graph6 = row.at("graph6").get<std::string>();
        s.kind = kind_from_name(row.at("kind").get<std::string>());
        s.fair_set = set_from_json(row.at("fair_set"));
        s.witness = set_from_json(row.at("witness"));
        switch (s.kind) {
            case SurvivorKind::conjecture_candidate: report.list_a.push_back(s); break;
            case SurvivorKind::block_disconnected: report.list_b.push_back(s); break;
            case SurvivorKind::chordal_connected: report.list_c.push_back(s); break;
            case SurvivorKind::cardinality: report.cardinality_violations.push_back(s); break;
        }
    }
    return header.at("last_line").get<std::int64_t>();
}

}  // namespace

ScanReport scan_stream(const ScanTask& task) {
    if (task.shard_count < 1 || task.shard_index < 0 || task.shard_index >= task.shard_count)
        throw std::invalid_argument("shard spec needs 0 <= index < count");
    ScanReport report;
    report.include_singleton_s = task.include_singleton_s;
    report.chordal_only = task.chordal_only;

    std::int64_t resume_after = -1;
    if (!task.checkpoint_path.empty())
        if (auto last = load_checkpoint(task.checkpoint_path, task, report)) resume_after = *last;

    std::uint64_t handled_this_run = 0;
    std::uint64_t since_checkpoint = 0;
    std::int64_t last_line = resume_after;
    bool stopped_early = false;

    for (std::uint64_t idx = 0; idx < task.lines.size(); ++idx) {
        if (idx % static_cast<std::uint64_t>(task.shard_count) !=
            static_cast<std::uint64_t>(task.shard_index))
            continue;
        if (static_cast<std::int64_t>(idx) <= resume_after) continue;
        if (task.max_graphs_per_run && handled_this_run >= *task.max_graphs_per_run) {
            stopped_early = true;
            break;
        }
        ++handled_this_run;
        ++since_checkpoint;
        last_line = static_cast<std::int64_t>(idx);

        auto skip = [&](const std::string& reason) {
            ++report.lines_skipped;
            report.skips.emplace_back(idx, reason);
        };
        try {
            Graph g = parse_graph6(task.lines[idx]);
            if (g.vertex_count() > task.ceiling && !task.force) {
                skip("order " + std::to_string(g.vertex_count()) + " exceeds enumeration ceiling " +
                     std::to_string(task.ceiling));
            } else if (!is_connected(g)) {
                skip("graph is disconnected");
            } else {
                bool chordal = is_chordal(g);
                if (task.chordal_only && !chordal) {
                    ++report.filtered_out;
                } else {
                    GraphVerdict v =
                        classify_graph(g, task.include_singleton_s, task.ceiling, task.force);
                    ++report.graphs_scanned;
                    report.chordal_count += v.chordal ? 1 : 0;
                    ++report.cells[v.block ? 1 : 0][v.all_connected ? 1 : 0];
                    std::string g6 = format_graph6(g);
                    if (!v.block && v.all_connected) {
                        report.list_a.push_back(
                            {idx, g6, SurvivorKind::conjecture_candidate, {}, {}});
                        if (v.chordal)
                            report.list_c.push_back(
                                {idx, g6, SurvivorKind::chordal_connected, {}, {}});
                    }
                    if (v.block && !v.all_connected)
                        report.list_b.push_back({idx, g6, SurvivorKind::block_disconnected,
                                                 v.first_disconnected->set,
                                                 v.first_disconnected->witness});
                    for (const auto& entry : v.size_n_minus_1)
                        report.cardinality_violations.push_back(
                            {idx, g6, SurvivorKind::cardinality, entry.set, entry.witness});
                }
            }
        } catch (const std::exception& e) {
            skip(e.what());
        }

        if (!task.checkpoint_path.empty() && since_checkpoint >= task.checkpoint_every) {
            write_checkpoint(task.checkpoint_path, task, report, last_line);
            since_checkpoint = 0;
        }
    }

    report.complete = !stopped_early;
    if (!task.checkpoint_path.empty()) write_checkpoint(task.checkpoint_path, task, report, last_line);
    return report;
}

ScanReport chordal_equivalence_scan(ScanTask task) {
    task.chordal_only = true;
    return scan_stream(task);
}

ScanReport tree_lemma_scan(int max_n, bool include_singleton_s) {
    if (max_n < 1 || max_n > 10)
        throw std::invalid_argument("tree_lemma_scan covers orders 1..10");
    ScanTask task;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& t : free_trees(n)) task.lines.push_back(format_graph6(t));
    task.include_singleton_s = include_singleton_s;
    return scan_stream(task);
}

ScanReport merge_reports(const std::vector<ScanReport>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge_reports needs at least one part");
    ScanReport merged;
    merged.include_singleton_s = parts.front().include_singleton_s;
    merged.chordal_only = parts.front().chordal_only;
    for (const ScanReport& p : parts) {
        if (p.include_singleton_s != merged.include_singleton_s ||
            p.chordal_only != merged.chordal_only)
            throw std::invalid_argument("cannot merge reports with different settings");
        merged.complete = merged.complete && p.complete;
        merged.graphs_scanned += p.graphs_scanned;
        merged.filtered_out += p.filtered_out;
        merged.lines_skipped += p.lines_skipped;
        merged.chordal_count += p.chordal_count;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) merged.cells[i][j] += p.cells[i][j];
        auto append = [](std::vector<Survivor>& dst, const std::vector<Survivor>& src) {
            dst.insert(dst.end(), src.begin(), src.end());
        };
        append(merged.list_a, p.list_a);
        append(merged.list_b, p.list_b);
        append(merged.list_c, p.list_c);
        append(merged.cardinality_violations, p.cardinality_violations);
        merged.skips.insert(merged.skips.end(), p.skips.begin(), p.skips.end());
    }
    auto by_line = [](const Survivor& a, const Survivor& b) { return a.line < b.line; };
    std::stable_sort(merged.list_a.begin(), merged.list_a.end(), by_line);
    std::stable_sort(merged.list_b.begin(), merged.list_b.end(), by_line);
    std::stable_sort(merged.list_c.begin(), merged.list_c.end(), by_line);
    std::stable_sort(merged.cardinality_violations.begin(), merged.cardinality_violations.end(),
                     by_line);
    std::stable_sort(merged.skips.begin(), merged.skips.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return merged;
}

std::vector<std::string> connected_catalog_graph6(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("connected catalog covers orders 1..7");
    std::vector<std::string> lines;
    for (int n = 1; n <= max_n; ++n)
        for_each_connected_graph(n, [&](const Graph& g) { lines.push_back(format_graph6(g)); });
    return lines;
}

bool reverify_survivor(const Survivor& s, bool include_singleton_s, int ceiling, bool force) {
    Graph g = parse_graph6(s.graph6);
    if (!is_connected(g)) return false;
    GraphVerdict v = classify_graph(g, include_singleton_s, ceiling, force);
    DistanceMatrix dm(g);
    auto witness_checks = [&]() {
        return !s.fair_set.empty() && fair_center(dm, s.witness).center == s.fair_set;
    };
    switch (s.kind) {
        case SurvivorKind::conjecture_candidate:
            return !v.block && v.all_connected;
        case SurvivorKind::block_disconnected:
            return v.block && witness_checks() && !induced_connected(g, s.fair_set);
        case SurvivorKind::chordal_connected:
            return v.chordal && !v.block && v.all_connected;
        case SurvivorKind::cardinality:
            return witness_checks() && s.fair_set.size() == g.vertex_count() - 1;
    }
    return false;
}

}  // namespace fairset
