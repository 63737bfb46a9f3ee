#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairset/graph.hpp"
#include "fairset/metric.hpp"
#include "fairset/vertex_set.hpp"

namespace fairset {

// f(x, S) = max distance from x into S minus min distance from x into S.
int partiality(const DistanceMatrix& dm, int x, VertexSet s);

struct PartialityProfile {
    VertexSet s;
    std::vector<int> f;
    int min_f;
};

PartialityProfile partiality_profile(const DistanceMatrix& dm, VertexSet s);

struct FairCenterResult {
    VertexSet s;
    VertexSet center;
    int min_partiality;
};

// Vertices of minimum partiality with respect to s. Nonempty by
// construction; equals V whenever |s| = 1.
FairCenterResult fair_center(const DistanceMatrix& dm, VertexSet s);

inline constexpr int kDefaultEnumerationCeiling = 24;

struct EnumerateOptions {
    bool include_singleton_s = false;
    std::optional<std::uint64_t> subset_cap;  // prefix of the iteration order
    int ceiling = kDefaultEnumerationCeiling;
    bool force = false;
    int workers = 1;
};

struct FairSetEntry {
    VertexSet set;
    VertexSet witness;   // first S in (popcount, numeric) order with FC(S) = set
    int min_partiality;  // partiality attained by that witness
};

struct FairSetInventory {
    std::string graph6;  // identity of the audited graph
    int vertex_count = 0;
    bool include_singleton_s = false;
    int ceiling = kDefaultEnumerationCeiling;  // limit the enumeration ran under
    std::uint64_t subsets_examined = 0;
    std::optional<std::uint64_t> subset_cap;
    bool truncated = false;
    std::vector<FairSetEntry> entries;  // sorted by (size, numeric mask)

    const FairSetEntry* find(VertexSet a) const;
    bool contains(VertexSet a) const { return find(a) != nullptr; }
};

/// Exhaustive fair-set inventory: every S with |S| >= 2 (singletons too under
// include_singleton_s) in (popcount, then numeric) order. The subset space
// may be split across workers; witnesses are merged back to the global
// iteration-order minimum, so results never depend on worker count.
FairSetInventory enumerate_fair_sets(const Graph& g, const EnumerateOptions& opt = {});

// Smallest S (same order) whose fair center equals a, if any.
std::optional<FairCenterResult> find_witness(const Graph& g, VertexSet a,
                                             bool include_singleton_s = false,
                                             int ceiling = kDefaultEnumerationCeiling,
                                             bool force = false);

struct AuditVerdict {
    VertexSet set;
    bool connected;
};

struct AuditReport {
    std::string graph6;
    bool include_singleton_s = false;
    bool all_connected = true;
    std::vector<AuditVerdict> verdicts;
    std::vector<FairSetEntry> disconnected;
};

// Connectivity verdict for every fair set in the inventory. The inventory
// must have been built from the same graph.
AuditReport connectivity_audit(const Graph& g, const FairSetInventory& inv);

}  // namespace fairset
