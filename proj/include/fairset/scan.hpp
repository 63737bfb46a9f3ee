#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairset/fairness.hpp"
#include "fairset/graph.hpp"
#include "fairset/vertex_set.hpp"

namespace fairset {

struct ScanTask {
    std::vector<std::string> lines;  // graph6 stream, one graph per line
    bool include_singleton_s = false;
    int ceiling = kDefaultEnumerationCeiling;
    bool force = false;
    bool chordal_only = false;  // skip non-chordal graphs (counted separately)
    int shard_index = 0;        // this worker handles lines with index % shard_count == shard_index
    int shard_count = 1;
    std::string checkpoint_path;            // empty: no checkpointing
    std::uint64_t checkpoint_every = 256;   // graphs between checkpoint writes
    std::optional<std::uint64_t> max_graphs_per_run;  // stop early, resumable via checkpoint
};

enum class SurvivorKind {
    conjecture_candidate,  // non-block graph, every fair set connected
    block_disconnected,    // block graph with a disconnected fair set
    chordal_connected,     // chordal non-block graph, every fair set connected
    cardinality,           // fair set of size n-1
};

std::string survivor_kind_name(SurvivorKind kind);

struct Survivor {
    std::uint64_t line = 0;  // index in the unsharded stream
    std::string graph6;
    SurvivorKind kind = SurvivorKind::conjecture_candidate;
    VertexSet fair_set;  // offending set; empty for the all-connected kinds
    VertexSet witness;   // its witness S, when fair_set is nonempty
};

// Re-run the stored verdict from the survivor's graph6 string alone.
bool reverify_survivor(const Survivor& s, bool include_singleton_s,
                       int ceiling = kDefaultEnumerationCeiling, bool force = false);

struct ScanReport {
    bool include_singleton_s = false;
    bool chordal_only = false;
    bool complete = true;  // false when max_graphs_per_run stopped the pass early
    std::uint64_t graphs_scanned = 0;
    std::uint64_t filtered_out = 0;  // non-chordal graphs under chordal_only
    std::uint64_t lines_skipped = 0;
    std::vector<std::pair<std::uint64_t, std::string>> skips;  // (line, reason)
    std::uint64_t chordal_count = 0;
    // cells[is_block][all_fair_sets_connected]
    std::uint64_t cells[2][2] = {{0, 0}, {0, 0}};
    std::vector<Survivor> list_a;  // conjecture counterexample candidates
    std::vector<Survivor> list_b;  // would refute the block-graph direction
    std::vector<Survivor> list_c;  // would refute the chordal characterization
    std::vector<Survivor> cardinality_violations;
};

// Classify every graph in the task's shard of the stream: block/chordal
// recognition, fair-set inventory, connectivity audit, cardinality audit.
// Malformed, disconnected, or over-ceiling lines are skipped and logged.
ScanReport scan_stream(const ScanTask& task);

// scan_stream restricted to chordal graphs: checks the biconditional
// "block graph <=> every fair set connected" on each.
ScanReport chordal_equivalence_scan(ScanTask task);

// Audit every free tree on 1..max_n vertices (max_n <= 10); a tree with a
// disconnected fair set would land in list_b.
ScanReport tree_lemma_scan(int max_n, bool include_singleton_s = false);

// Combine disjoint shard reports into the report of the unsharded scan.
ScanReport merge_reports(const std::vector<ScanReport>& parts);

// The n = 1..max_n connected catalog (max_n <= 7) as graph6 lines, the
// corpus the conjecture scan runs on.
std::vector<std::string> connected_catalog_graph6(int max_n);

}  // namespace fairset
