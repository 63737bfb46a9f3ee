#include "doctest.h"

#include "fairset/catalog.hpp"
#include "fairset/graph.hpp"
#include "fairset/graph6.hpp"
#include "fairset/structure.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace fairset;

TEST_CASE("graph construction basics") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == VertexSet{0, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.vertices() == VertexSet::full(4));
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("duplicate edges collapse silently") {
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g == Graph(3, {{0, 1}, {1, 2}}));
    CHECK(g == build_graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("neighbors range check") {
    Graph g(2, {{0, 1}});
    CHECK_THROWS_AS(g.neighbors(2), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(-1), std::invalid_argument);
}

TEST_CASE("family generators and labelings") {
    Graph p4 = generate(parse_family("path:4"));
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph c5 = generate(parse_family("cycle:5"));
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(4, 0));
    CHECK(c5.degree(2) == 2);

    Graph k5 = generate(parse_family("complete:5"));
    CHECK(k5.edge_count() == 10);

    Graph k5e = generate(parse_family("complete_minus_edge:5"));
    CHECK(k5e.edge_count() == 9);
    CHECK(!k5e.has_edge(0, 1));
    CHECK(k5e.has_edge(0, 2));

    Graph k23 = generate(parse_family("complete_bipartite:2,3"));
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(!k23.has_edge(0, 1));  // same side X = {0,1}
    CHECK(k23.has_edge(0, 2));
    CHECK(!k23.has_edge(2, 3));  // same side Y = {2,3,4}

    // Rim cycle 0..n-2, hub n-1.
    Graph w5 = generate(parse_family("wheel:5"));
    CHECK(w5.vertex_count() == 5);
    CHECK(w5.edge_count() == 8);
    CHECK(w5.degree(4) == 4);
    CHECK(w5.has_edge(0, 1));
    CHECK(w5.has_edge(3, 0));
    CHECK(!w5.has_edge(0, 2));

    Graph star3 = generate(parse_family("star:3"));
    CHECK(star3.vertex_count() == 4);
    CHECK(star3.degree(0) == 3);
    CHECK(star3 == generate(parse_family("complete_bipartite:1,3")));

    Graph q3 = generate(parse_family("hypercube:3"));
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(q3.has_edge(0, 4));
    CHECK(!q3.has_edge(0, 3));
}

TEST_CASE("wheel5 is the plain wheel on five vertices") {
    CHECK(parse_family("wheel5") == FamilySpec{Family::wheel, 5});
    CHECK(generate(parse_family("wheel5")) == generate(parse_family("wheel:5")));
    CHECK_THROWS_AS(parse_family("wheel5:5"), std::invalid_argument);
}

TEST_CASE("parse_family rejects malformed specs") {
    CHECK_THROWS_AS(parse_family("moebius:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("cycle:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("cycle:2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("complete_bipartite:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("path:x"), std::invalid_argument);
    CHECK_THROWS_AS(generate(parse_family("cycle:2")), std::invalid_argument);  // needs k >= 3
    CHECK_THROWS_AS(generate(parse_family("wheel:3")), std::invalid_argument);  // needs n >= 4
}

TEST_CASE("family_name round trips") {
    for (const char* text : {"path:7", "cycle:6", "complete:4", "complete_minus_edge:5",
                             "complete_bipartite:2,3", "wheel:6", "star:4", "hypercube:3",
                             "random_tree:9,42", "random_block_graph:10,7"}) {
        FamilySpec spec = parse_family(text);
        CHECK(parse_family(family_name(spec)) == spec);
    }
}

TEST_CASE("random families are seed-deterministic") {
    Graph t1 = generate(parse_family("random_tree:12,5"));
    Graph t2 = generate(parse_family("random_tree:12,5"));
    CHECK(t1 == t2);
    CHECK(t1.vertex_count() == 12);
    CHECK(t1.edge_count() == 11);
    CHECK(is_connected(t1));
    CHECK(t1 != generate(parse_family("random_tree:12,6")));

    Graph b1 = generate(parse_family("random_block_graph:10,3"));
    CHECK(b1 == generate(parse_family("random_block_graph:10,3")));
    CHECK(b1.vertex_count() == 10);
    CHECK(is_connected(b1));
    CHECK(is_block_graph(b1));
}

TEST_CASE("graph6 canonical fixtures") {
    Graph k1 = parse_graph6("@");
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(format_graph6(k1) == "@");

    CHECK(format_graph6(Graph(2, {{0, 1}})) == "A_");
    CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));

    Graph k5 = generate(parse_family("complete:5"));
    CHECK(format_graph6(k5) == "D~{");
    CHECK(parse_graph6("D~{") == k5);
}

TEST_CASE("graph6 accepts optional header and trailing newline") {
    Graph k5 = generate(parse_family("complete:5"));
    CHECK(parse_graph6(">>graph6<<D~{") == k5);
    CHECK(parse_graph6("D~{\n") == k5);
    CHECK(parse_graph6("D~{\r\n") == k5);
}

TEST_CASE("graph6 long-form order") {
    Graph p63 = generate(parse_family("path:63"));
    std::string line = format_graph6(p63);
    CHECK(line.substr(0, 4) == "~??~");
    CHECK(parse_graph6(line) == p63);

    Graph p64 = generate(parse_family("path:64"));
    CHECK(parse_graph6(format_graph6(p64)) == p64);
}

TEST_CASE("graph6 round trips every family at small orders") {
    std::vector<Graph> corpus;
    for (int k = 1; k <= 20; ++k) corpus.push_back(generate({Family::path, k}));
    for (int k = 3; k <= 20; ++k) corpus.push_back(generate({Family::cycle, k}));
    for (int n = 1; n <= 12; ++n) corpus.push_back(generate({Family::complete, n}));
    for (int n = 3; n <= 12; ++n) corpus.push_back(generate({Family::complete_minus_edge, n}));
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 5; ++n) corpus.push_back(generate({Family::complete_bipartite, m, n}));
    for (int n = 4; n <= 12; ++n) corpus.push_back(generate({Family::wheel, n}));
    for (int d = 1; d <= 6; ++d) corpus.push_back(generate({Family::hypercube, d}));
    for (const Graph& g : corpus) CHECK(parse_graph6(format_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed lines") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D~"), std::invalid_argument);    // truncated
    CHECK_THROWS_AS(parse_graph6("D~{{"), std::invalid_argument);  // oversize
    CHECK_THROWS_AS(parse_graph6("AO"), std::invalid_argument);    // nonzero padding
    CHECK_THROWS_AS(parse_graph6("A\x1f"), std::invalid_argument); // byte outside range
    CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);     // order 0
    CHECK_THROWS_AS(parse_graph6("~~????"), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    std::istringstream in("# a triangle plus a tail\n4 4\n0 1\n1 2\n2 0\n2 3\n");
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(2, 3));

    std::istringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(missing), std::invalid_argument);
    std::istringstream bad_header("three 2\n");
    CHECK_THROWS_AS(parse_edge_list(bad_header), std::invalid_argument);
    std::istringstream trailing("2 1\n0 1\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(trailing), std::invalid_argument);
    std::istringstream bad_edge("2 1\n0 1 9\n");
    CHECK_THROWS_AS(parse_edge_list(bad_edge), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_edge_list(empty), std::invalid_argument);
}

TEST_CASE("cartesian product shape and labeling") {
    Graph p2 = generate({Family::path, 2});
    Graph p3 = generate({Family::path, 3});
    Graph p4 = generate({Family::path, 4});

    Graph grid = cartesian_product(p3, p4);
    CHECK(grid.vertex_count() == 12);
    CHECK(grid.edge_count() == 17);  // |E1|*n2 + n1*|E2| = 2*4 + 3*3
    // (u,v) -> u*4+v: (0,0)-(0,1) and (0,0)-(1,0).
    CHECK(grid.has_edge(0, 1));
    CHECK(grid.has_edge(0, 4));
    CHECK(!grid.has_edge(0, 5));

    Graph square = cartesian_product(p2, p2);
    CHECK(square.vertex_count() == 4);
    CHECK(square.edge_count() == 4);
    CHECK(canonical_edge_mask(square) == canonical_edge_mask(generate({Family::cycle, 4})));

    CHECK_THROWS_AS(cartesian_product(generate({Family::path, 9}), generate({Family::path, 8})),
                    std::invalid_argument);
}

TEST_CASE("iterated products of an edge build hypercubes") {
    Graph k2 = generate({Family::complete, 2});
    Graph cube = k2;
    for (int d = 2; d <= 4; ++d) {
        cube = cartesian_product(cube, k2);
        CHECK(cube == generate({Family::hypercube, d}));  // labeled equality
    }
    CHECK(canonical_edge_mask(cartesian_product(cartesian_product(k2, k2), k2)) ==
          canonical_edge_mask(generate({Family::hypercube, 3})));
}

TEST_CASE("product edge count formula on assorted pairs") {
    std::vector<FamilySpec> specs = {{Family::path, 5}, {Family::cycle, 4},
                                     {Family::complete, 3}, {Family::star, 3}};
    for (const auto& s1 : specs)
        for (const auto& s2 : specs) {
            Graph a = generate(s1), b = generate(s2);
            if (a.vertex_count() * b.vertex_count() > 64) continue;
            Graph p = cartesian_product(a, b);
            CHECK(p.edge_count() ==
                  a.edge_count() * b.vertex_count() + a.vertex_count() * b.edge_count());
        }
}
