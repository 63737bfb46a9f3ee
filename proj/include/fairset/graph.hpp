#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairset/vertex_set.hpp"

namespace fairset {

// Simple undirected graph on at most 64 vertices, adjacency kept as one
// VertexSet row per vertex. Immutable after construction.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const;
    int degree(int v) const { return neighbors(v).size(); }
    bool has_edge(int u, int v) const;

    // Edges as (u,v) with u < v, ascending lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<VertexSet> adj_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

enum class Family {
    path,
    cycle,
    complete,
    complete_minus_edge,
    complete_bipartite,
    wheel,
    star,
    hypercube,
    random_tree,
    random_block_graph,
};

// Family tag plus up to two integer parameters and a seed for the random
// families. Canonical text form is "name:a", "name:a,b" or "name:a,seed".
struct FamilySpec {
    Family family;
    int a = 0;
    int b = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family(const std::string& text);
std::string family_name(const FamilySpec& spec);

// Canonical labelings:
//   path:k        0-1-...-(k-1)
//   cycle:k       edges (i, i+1 mod k)
//   complete:n
//   complete_minus_edge:n   K_n without the edge (0,1)
//   complete_bipartite:m,n  X = 0..m-1, Y = m..m+n-1
//   wheel:n       rim cycle 0..n-2, hub n-1
//   star:n        complete_bipartite(1, n), center 0
//   hypercube:d   i adjacent to i XOR 2^b
//   random_tree:n,seed
//   random_block_graph:n,seed
Graph generate(const FamilySpec& spec);

// Vertex (u,v) of g x h maps to index u*|V(h)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace fairset
