#include "doctest.h"

#include "fairset/fairness.hpp"
#include "fairset/graph.hpp"
#include "fairset/json_io.hpp"
#include "fairset/metric.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace fairset;

namespace {

// Two K4's sharing the triangle {1,2,3}.
Graph pasted_k4() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
}

std::vector<VertexSet> fair_sets_of(const FairSetInventory& inv) {
    std::vector<VertexSet> out;
    for (const auto& e : inv.entries) out.push_back(e.set);
    return out;
}

}  // namespace

TEST_CASE("partiality basics") {
    DistanceMatrix k4(generate({Family::complete, 4}));
    CHECK(partiality(k4, 0, VertexSet{0, 1}) == 1);  // in S: max 1, min 0
    CHECK(partiality(k4, 2, VertexSet{0, 1}) == 0);  // outside: both at distance 1
    DistanceMatrix p4(generate({Family::path, 4}));
    CHECK(partiality(p4, 0, VertexSet{0}) == 0);
    CHECK(partiality(p4, 0, VertexSet{1, 3}) == 2);
    CHECK_THROWS_AS(partiality(p4, 0, VertexSet{}), std::invalid_argument);
    CHECK_THROWS_AS(partiality(p4, 0, VertexSet{4}), std::invalid_argument);
    CHECK_THROWS_AS(partiality(p4, 4, VertexSet{0}), std::invalid_argument);
}

TEST_CASE("partiality profile on the five-wheel") {
    // Rim 0..3, hub 4.
    DistanceMatrix dm(generate({Family::wheel, 5}));
    PartialityProfile p = partiality_profile(dm, VertexSet::full(5));
    CHECK(p.f == std::vector<int>{2, 2, 2, 2, 1});
    CHECK(p.min_f == 1);
    for (int x = 0; x < 5; ++x) CHECK(p.f[static_cast<std::size_t>(x)] >= 0);
}

TEST_CASE("profile invariant: members attain min distance zero") {
    std::vector<Graph> corpus = {generate({Family::cycle, 6}), generate({Family::wheel, 6}),
                                 generate({Family::random_tree, 8, 0, 3})};
    for (const Graph& g : corpus) {
        DistanceMatrix dm(g);
        VertexSet s{0, 2, 3};
        PartialityProfile p = partiality_profile(dm, s);
        s.for_each([&](int x) {
            int far = 0;
            s.for_each([&](int v) { far = std::max(far, dm.at(x, v)); });
            CHECK(p.f[static_cast<std::size_t>(x)] == far);
        });
    }
}

TEST_CASE("fair center fixtures") {
    DistanceMatrix k4(generate({Family::complete, 4}));
    FairCenterResult r = fair_center(k4, VertexSet{0, 1});
    CHECK(r.center == VertexSet{2, 3});
    CHECK(r.min_partiality == 0);

    // Singleton reference set: zero partiality everywhere.
    CHECK(fair_center(k4, VertexSet{2}).center == VertexSet::full(4));

    DistanceMatrix w5(generate({Family::wheel, 5}));
    CHECK(fair_center(w5, VertexSet{4, 3}).center == VertexSet{0, 2});

    DistanceMatrix pasted(pasted_k4());
    FairCenterResult shared = fair_center(pasted, VertexSet{1, 2, 3});
    CHECK(shared.center == VertexSet{0, 4});
    CHECK(shared.min_partiality == 0);

    DistanceMatrix w8(generate({Family::wheel, 8}));  // rim 0..6, hub 7
    CHECK(fair_center(w8, VertexSet{0, 1, 2, 7}).center == VertexSet::full(8) - VertexSet{0, 2});

    CHECK_THROWS_AS(fair_center(k4, VertexSet{}), std::invalid_argument);
}

TEST_CASE("five-cycle inventory matches the frozen enumeration") {
    FairSetInventory inv = enumerate_fair_sets(generate({Family::cycle, 5}));
    CHECK(inv.vertex_count == 5);
    CHECK(inv.subsets_examined == 26);  // 2^5 - 5 - 1
    CHECK(!inv.truncated);
    CHECK(inv.entries.size() == 16);
    // Every independent set of C5 is fair: 5 singletons + 5 independent pairs.
    for (int v = 0; v < 5; ++v) CHECK(inv.contains(VertexSet::single(v)));
    CHECK(inv.contains(VertexSet{0, 2}));
    CHECK(inv.contains(VertexSet{1, 4}));
    CHECK(!inv.contains(VertexSet{0, 1}));
    CHECK(inv.contains(VertexSet::full(5)));
    // Frozen witness: the very first pair {0,1} centers on {3}.
    const FairSetEntry* e = inv.find(VertexSet{3});
    REQUIRE(e != nullptr);
    CHECK(e->witness == VertexSet{0, 1});
    CHECK(e->min_partiality == 0);
}

TEST_CASE("complete graph inventory includes the full vertex set") {
    FairSetInventory inv = enumerate_fair_sets(generate({Family::complete, 4}));
    CHECK(inv.entries.size() == 11);  // 4 singletons, 6 pairs, V
    CHECK(inv.contains(VertexSet::full(4)));
    const FairSetEntry* v = inv.find(VertexSet::full(4));
    REQUIRE(v != nullptr);
    CHECK(v->witness == VertexSet::full(4));  // S = V is the only strict witness
    CHECK(v->min_partiality == 1);
    const FairSetEntry* pair = inv.find(VertexSet{2, 3});
    REQUIRE(pair != nullptr);
    CHECK(pair->witness == VertexSet{0, 1});
    for (const auto& entry : inv.entries) CHECK(entry.set.size() != 3);  // never n-1
}

TEST_CASE("five-wheel inventory is exactly the six frozen sets") {
    FairSetInventory inv = enumerate_fair_sets(generate({Family::wheel, 5}));
    std::vector<VertexSet> expect = {{4}, {0, 2}, {1, 3}, {0, 2, 4}, {1, 3, 4}, {0, 1, 2, 3, 4}};
    CHECK(fair_sets_of(inv) == expect);
    const FairSetEntry* v = inv.find(VertexSet::full(5));
    REQUIRE(v != nullptr);
    CHECK(v->witness == VertexSet{0, 1, 4});
}

TEST_CASE("singleton flag semantics") {
    Graph k1(1, {});
    FairSetInventory strict = enumerate_fair_sets(k1);
    CHECK(strict.entries.empty());
    CHECK(strict.subsets_examined == 0);

    EnumerateOptions opt;
    opt.include_singleton_s = true;
    FairSetInventory permissive = enumerate_fair_sets(k1, opt);
    CHECK(permissive.entries.size() == 1);
    CHECK(permissive.entries[0].set == VertexSet{0});
    CHECK(permissive.entries[0].witness == VertexSet{0});

    // On K4 the flag changes only V's witness: the first singleton wins.
    FairSetInventory k4p = enumerate_fair_sets(generate({Family::complete, 4}), opt);
    CHECK(k4p.entries.size() == 11);
    const FairSetEntry* v = k4p.find(VertexSet::full(4));
    REQUIRE(v != nullptr);
    CHECK(v->witness == VertexSet{0});
    CHECK(v->min_partiality == 0);
    CHECK(k4p.subsets_examined == 15);
}

TEST_CASE("witness invariant: every entry reproduces its set") {
    for (const FamilySpec& spec : {FamilySpec{Family::cycle, 6}, FamilySpec{Family::wheel, 6},
                                   FamilySpec{Family::complete_bipartite, 2, 3},
                                   FamilySpec{Family::random_tree, 7, 0, 9}}) {
        Graph g = generate(spec);
        DistanceMatrix dm(g);
        for (bool flag : {false, true}) {
            EnumerateOptions opt;
            opt.include_singleton_s = flag;
            FairSetInventory inv = enumerate_fair_sets(g, opt);
            for (const auto& e : inv.entries) {
                if (!flag) CHECK(e.witness.size() >= 2);
                FairCenterResult r = fair_center(dm, e.witness);
                CHECK(r.center == e.set);
                CHECK(r.min_partiality == e.min_partiality);
                CHECK(e.set.size() != g.vertex_count() - 1);
            }
        }
    }
}

TEST_CASE("worker count never changes the inventory") {
    Graph g = generate({Family::cycle, 12});  // 4083 subsets, above the serial cutoff
    EnumerateOptions one;
    one.workers = 1;
    EnumerateOptions three;
    three.workers = 3;
    FairSetInventory a = enumerate_fair_sets(g, one);
    FairSetInventory b = enumerate_fair_sets(g, three);
    CHECK(a.subsets_examined == b.subsets_examined);
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));
}

TEST_CASE("subset cap truncates the iteration prefix") {
    Graph c5 = generate({Family::cycle, 5});
    EnumerateOptions opt;
    opt.subset_cap = 10;  // all ten pairs, nothing else
    FairSetInventory capped = enumerate_fair_sets(c5, opt);
    CHECK(capped.subsets_examined == 10);
    CHECK(capped.truncated);
    FairSetInventory full = enumerate_fair_sets(c5);
    for (const auto& e : capped.entries) {
        const FairSetEntry* f = full.find(e.set);
        REQUIRE(f != nullptr);
        CHECK(f->witness == e.witness);  // prefix witnesses are already final
    }
    CHECK(capped.entries.size() < full.entries.size());

    opt.subset_cap = 1000;
    FairSetInventory uncapped = enumerate_fair_sets(c5, opt);
    CHECK(!uncapped.truncated);
    CHECK(uncapped.subsets_examined == 26);
}

TEST_CASE("enumeration ceiling") {
    Graph c5 = generate({Family::cycle, 5});
    EnumerateOptions opt;
    opt.ceiling = 4;
    CHECK_THROWS_WITH_AS(enumerate_fair_sets(c5, opt),
                         "order 5 exceeds enumeration ceiling 4 (force to override)",
                         std::invalid_argument);
    opt.force = true;
    CHECK(enumerate_fair_sets(c5, opt).entries.size() == 16);
    CHECK(kDefaultEnumerationCeiling == 24);
}

TEST_CASE("find_witness agrees with the inventory") {
    Graph c5 = generate({Family::cycle, 5});
    auto hit = find_witness(c5, VertexSet{3});
    REQUIRE(hit.has_value());
    CHECK(hit->s == VertexSet{0, 1});
    CHECK(hit->center == VertexSet{3});

    CHECK(!find_witness(c5, VertexSet{0, 1}).has_value());
    CHECK(!find_witness(generate({Family::complete, 4}), VertexSet{0, 1, 2}).has_value());

    auto strict_v = find_witness(generate({Family::complete, 4}), VertexSet::full(4));
    REQUIRE(strict_v.has_value());
    CHECK(strict_v->s == VertexSet::full(4));
    auto permissive_v = find_witness(generate({Family::complete, 4}), VertexSet::full(4), true);
    REQUIRE(permissive_v.has_value());
    CHECK(permissive_v->s == VertexSet{0});

    CHECK_THROWS_AS(find_witness(c5, VertexSet{}), std::invalid_argument);
    CHECK_THROWS_AS(find_witness(c5, VertexSet{0}, false, 4), std::invalid_argument);
}

TEST_CASE("connectivity audit") {
    Graph c5 = generate({Family::cycle, 5});
    FairSetInventory inv = enumerate_fair_sets(c5);
    AuditReport report = connectivity_audit(c5, inv);
    CHECK(report.verdicts.size() == inv.entries.size());
    CHECK(!report.all_connected);
    bool found = false;
    for (const auto& e : report.disconnected)
        if (e.set == VertexSet{0, 2}) found = true;
    CHECK(found);

    Graph p4 = generate({Family::path, 4});
    AuditReport tree_report = connectivity_audit(p4, enumerate_fair_sets(p4));
    CHECK(tree_report.all_connected);
    CHECK(tree_report.disconnected.empty());

    CHECK_THROWS_AS(connectivity_audit(p4, inv), std::invalid_argument);
}
