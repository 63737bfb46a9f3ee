#pragma once

#include <vector>

#include "fairset/graph.hpp"
#include "fairset/vertex_set.hpp"

namespace fairset {

struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // DFS discovery order; bridges appear as 2-sets
    VertexSet cut_vertices;
};

// Biconnected components of a connected graph. Every edge lies in exactly
// one block; a vertex is a cut vertex iff it lies in at least two blocks.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

bool is_connected(const Graph& g);

// True iff every block induces a clique (trees and pasted cliques qualify).
bool is_block_graph(const Graph& g);

// Lex-BFS ordering followed by an explicit perfect-elimination-order check.
bool is_chordal(const Graph& g);

// Vertex-block incidence graph of a connected block graph: original
// vertices keep their ids, block j becomes vertex n+j. Always a tree, and
// distances between original vertices double.
Graph skeleton(const Graph& g);

// Does a (nonempty, within range) induce a connected subgraph?
bool induced_connected(const Graph& g, VertexSet a);

}  // namespace fairset
