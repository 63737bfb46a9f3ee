#pragma once

#include <cstdint>
#include <functional>

#include "fairset/graph.hpp"

namespace fairset {

// Edge (i,j) with i < j occupies bit j*(j-1)/2 + i: column-major upper
// triangle, the same order graph6 uses. Orders up to 11 fit in 64 bits.
std::uint64_t edge_mask(const Graph& g);
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Minimum edge mask over all vertex relabelings; equal masks mean isomorphic
// graphs. Permutation sweep, so n <= 8.
std::uint64_t canonical_edge_mask(const Graph& g);

// One representative per isomorphism class of connected graphs on n vertices
// (n <= 7), visited in ascending canonical-edge-mask order. Each
// representative is the minimum mask of its orbit.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace fairset
