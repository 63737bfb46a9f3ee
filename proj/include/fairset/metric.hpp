#pragma once

#include <vector>

#include "fairset/graph.hpp"
#include "fairset/vertex_set.hpp"

namespace fairset {

// Dense all-pairs hop distances, built by BFS from every vertex.
// Construction rejects disconnected graphs (naming an unreachable pair).
// Immutable; safe for concurrent reads.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int n() const { return n_; }
    int at(int i, int j) const;
    int eccentricity(int v) const;

private:
    int n_;
    std::vector<int> d_;  // row-major n*n
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

struct EccentricityProfile {
    std::vector<int> ecc;
    int diameter;
    int radius;
};

EccentricityProfile eccentricity_profile(const DistanceMatrix& dm);

// Vertices attaining e(u).
VertexSet eccentric_vertices(const DistanceMatrix& dm, int u);

// I(u,v) = { w : d(u,w) + d(w,v) = d(u,v) }.
VertexSet interval(const DistanceMatrix& dm, int u, int v);

// Every vertex attains the diameter.
bool is_even_graph(const DistanceMatrix& dm);

// Every vertex u admits some v with interval(u, v) covering all of V.
bool is_symmetric_even(const Graph& g, const DistanceMatrix& dm);

struct EccentricMap {
    bool total;            // every vertex has exactly one eccentric vertex
    std::vector<int> bar;  // bar[v] = that vertex; -1 where not unique
};

EccentricMap unique_eccentric_map(const DistanceMatrix& dm);

// d(u,v) + d(u, bar(v)) = diameter for all u, v. Requires a total map.
bool antipodal_sum_check(const DistanceMatrix& dm, const EccentricMap& em);

}  // namespace fairset
