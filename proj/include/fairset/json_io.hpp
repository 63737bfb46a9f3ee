#pragma once

#include <string>

#include "json.hpp"

#include "fairset/fairness.hpp"
#include "fairset/oracles.hpp"
#include "fairset/scan.hpp"
#include "fairset/vertex_set.hpp"

namespace fairset {

// All exports list vertex sets as ascending 0-based arrays; keys come out
// sorted, so equal reports serialize to equal bytes. Passing one_based adds a
// "<key>_1based" sibling next to every set, for reading against sources that
// label family graphs from 1.

nlohmann::json set_json(VertexSet s);

nlohmann::json to_json(const PartialityProfile& p, bool one_based = false);
nlohmann::json to_json(const FairCenterResult& r, bool one_based = false);
nlohmann::json to_json(const FairSetInventory& inv, bool one_based = false);
nlohmann::json to_json(const AuditReport& report, bool one_based = false);
nlohmann::json to_json(const DiscrepancyReport& report, bool one_based = false);
nlohmann::json to_json(const ProductCheckReport& report, bool one_based = false);
nlohmann::json to_json(const Survivor& s);
nlohmann::json to_json(const ScanReport& report);

// Human-readable 2x2 classification table plus survivor tallies.
std::string scan_table(const ScanReport& report);

}  // namespace fairset
