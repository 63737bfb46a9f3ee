#include "fairset/json_io.hpp"

#include <sstream>

namespace fairset {

using nlohmann::json;

namespace {

json set_json_shifted(VertexSet s, int shift) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v + shift); });
    return arr;
}

void put_set(json& obj, const std::string& key, VertexSet s, bool one_based) {
    obj[key] = set_json_shifted(s, 0);
    if (one_based) obj[key + "_1based"] = set_json_shifted(s, 1);
}

json entry_json(const FairSetEntry& e, bool one_based) {
    json obj;
    put_set(obj, "set", e.set, one_based);
    put_set(obj, "witness", e.witness, one_based);
    obj["min_partiality"] = e.min_partiality;
    return obj;
}

}  // namespace

json set_json(VertexSet s) { return set_json_shifted(s, 0); }

json to_json(const PartialityProfile& p, bool one_based) {
    json obj;
    put_set(obj, "s", p.s, one_based);
    obj["f"] = p.f;
    obj["min_f"] = p.min_f;
    return obj;
}

json to_json(const FairCenterResult& r, bool one_based) {
    json obj;
    put_set(obj, "s", r.s, one_based);
    put_set(obj, "center", r.center, one_based);
    obj["min_partiality"] = r.min_partiality;
    return obj;
}

json to_json(const FairSetInventory& inv, bool one_based) {
    json obj;
    obj["graph6"] = inv.graph6;
    obj["vertex_count"] = inv.vertex_count;
    obj["include_singleton_s"] = inv.include_singleton_s;
    obj["ceiling"] = inv.ceiling;
    obj["subsets_examined"] = inv.subsets_examined;
    obj["subset_cap"] = inv.subset_cap ? json(*inv.subset_cap) : json(nullptr);
    obj["truncated"] = inv.truncated;
    obj["fair_set_count"] = inv.entries.size();
    json entries = json::array();
    for (const auto& e : inv.entries) entries.push_back(entry_json(e, one_based));
    obj["entries"] = entries;
    return obj;
}

json to_json(const AuditReport& report, bool one_based) {
    json obj;
    obj["graph6"] = report.graph6;
    obj["include_singleton_s"] = report.include_singleton_s;
    obj["all_connected"] = report.all_connected;
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        json row;
        put_set(row, "set", v.set, one_based);
        row["connected"] = v.connected;
        verdicts.push_back(row);
    }
    obj["verdicts"] = verdicts;
    json bad = json::array();
    for (const auto& e : report.disconnected) bad.push_back(entry_json(e, one_based));
    obj["disconnected"] = bad;
    return obj;
}

json to_json(const DiscrepancyReport& report, bool one_based) {
    json obj;
    obj["family"] = report.family;
    obj["graph6"] = report.graph6;
    obj["include_singleton_s"] = report.include_singleton_s;
    obj["interpretation"] =
        report.interpretation ? json(interpretation_name(*report.interpretation)) : json(nullptr);
    obj["candidates_checked"] = report.candidates_checked;
    obj["exact"] = report.exact();
    json fp = json::array();
    for (VertexSet s : report.false_positives) fp.push_back(set_json_shifted(s, 0));
    obj["false_positives"] = fp;
    if (one_based) {
        json fp1 = json::array();
        for (VertexSet s : report.false_positives) fp1.push_back(set_json_shifted(s, 1));
        obj["false_positives_1based"] = fp1;
    }
    json fn = json::array();
    for (VertexSet s : report.false_negatives) fn.push_back(set_json_shifted(s, 0));
    obj["false_negatives"] = fn;
    if (one_based) {
        json fn1 = json::array();
        for (VertexSet s : report.false_negatives) fn1.push_back(set_json_shifted(s, 1));
        obj["false_negatives_1based"] = fn1;
    }
    obj["notes"] = report.notes;
    return obj;
}

json to_json(const ProductCheckReport& report, bool one_based) {
    json obj;
    put_set(obj, "s1", report.s1, one_based);
    put_set(obj, "s2", report.s2, one_based);
    put_set(obj, "product_s", report.product_s, one_based);
    put_set(obj, "fc1", report.fc1, one_based);
    put_set(obj, "fc2", report.fc2, one_based);
    put_set(obj, "fc_product", report.fc_product, one_based);
    obj["identity_holds"] = report.identity_holds;
    obj["additivity_holds"] = report.additivity_holds;
    obj["connectivity_matches"] = report.connectivity_matches;
    return obj;
}

json to_json(const Survivor& s) {
    json obj;
    obj["line"] = s.line;
    obj["graph6"] = s.graph6;
    obj["kind"] = survivor_kind_name(s.kind);
    obj["fair_set"] = set_json_shifted(s.fair_set, 0);
    obj["witness"] = set_json_shifted(s.witness, 0);
    return obj;
}

json to_json(const ScanReport& report) {
    json obj;
    obj["include_singleton_s"] = report.include_singleton_s;
    obj["chordal_only"] = report.chordal_only;
    obj["complete"] = report.complete;
    obj["graphs_scanned"] = report.graphs_scanned;
    obj["filtered_out"] = report.filtered_out;
    obj["lines_skipped"] = report.lines_skipped;
    json skips = json::array();
    for (const auto& [line, reason] : report.skips) skips.push_back({line, reason});
    obj["skips"] = skips;
    obj["chordal_count"] = report.chordal_count;
    obj["cells"] = {
        {"block_all_connected", report.cells[1][1]},
        {"block_some_disconnected", report.cells[1][0]},
        {"nonblock_all_connected", report.cells[0][1]},
        {"nonblock_some_disconnected", report.cells[0][0]},
    };
    auto list_json = [](const std::vector<Survivor>& list) {
        json arr = json::array();
        for (const Survivor& s : list) arr.push_back(to_json(s));
        return arr;
    };
    obj["conjecture_candidates"] = list_json(report.list_a);
    obj["block_disconnected"] = list_json(report.list_b);
    obj["chordal_nonblock_connected"] = list_json(report.list_c);
    obj["cardinality_violations"] = list_json(report.cardinality_violations);
    return obj;
}

std::string scan_table(const ScanReport& report) {
    std::ostringstream out;
    out << "classification (graphs scanned: " << report.graphs_scanned << ")\n";
    out << "                      all fair sets connected   some fair set disconnected\n";
    out << "  block graph         " << report.cells[1][1] << "\t\t\t" << report.cells[1][0] << "\n";
    out << "  non-block graph     " << report.cells[0][1] << "\t\t\t" << report.cells[0][0] << "\n";
    out << "chordal: " << report.chordal_count << " of " << report.graphs_scanned;
    if (report.chordal_only) out << " (non-chordal filtered out: " << report.filtered_out << ")";
    out << "\n";
    out << "skipped lines: " << report.lines_skipped << "\n";
    for (const auto& [line, reason] : report.skips)
        out << "  line " << line << ": " << reason << "\n";
    out << "survivors: conjecture candidates " << report.list_a.size() << ", block-disconnected "
        << report.list_b.size() << ", chordal-nonblock-connected " << report.list_c.size()
        << ", cardinality " << report.cardinality_violations.size() << "\n";
    if (!report.complete) out << "NOTE: pass stopped early; resume from the checkpoint\n";
    return out.str();
}

}  // namespace fairset
