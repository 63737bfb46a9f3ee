#include "fairset/metric.hpp"

#include <stdexcept>

namespace fairset {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
    d_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_; ++s) {
        int* row = d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n_);
        row[s] = 0;
        VertexSet reached = VertexSet::single(s);
        VertexSet frontier = reached;
        int depth = 0;
        while (!frontier.empty()) {
            ++depth;
            VertexSet next;
            frontier.for_each([&](int v) { next = next | g.neighbors(v); });
            next = next - reached;
            next.for_each([&](int v) { row[v] = depth; });
            reached = reached | next;
            frontier = next;
        }
        if (reached != g.vertices()) {
            int missing = (g.vertices() - reached).min();
            throw std::invalid_argument("graph is disconnected: no path between " +
                                        std::to_string(s) + " and " + std::to_string(missing));
        }
    }
}

int DistanceMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::invalid_argument("distance index out of range");
    return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
}

int DistanceMatrix::eccentricity(int v) const {
    int e = 0;
    for (int w = 0; w < n_; ++w)
        if (at(v, w) > e) e = at(v, w);
    return e;
}

EccentricityProfile eccentricity_profile(const DistanceMatrix& dm) {
    EccentricityProfile p;
    p.ecc.reserve(static_cast<std::size_t>(dm.n()));
    for (int v = 0; v < dm.n(); ++v) p.ecc.push_back(dm.eccentricity(v));
    p.diameter = 0;
    p.radius = p.ecc.empty() ? 0 : p.ecc[0];
    for (int e : p.ecc) {
        if (e > p.diameter) p.diameter = e;
        if (e < p.radius) p.radius = e;
    }
    return p;
}

VertexSet eccentric_vertices(const DistanceMatrix& dm, int u) {
    int e = dm.eccentricity(u);
    VertexSet out;
    for (int v = 0; v < dm.n(); ++v)
        if (dm.at(u, v) == e) out.add(v);
    return out;
}

VertexSet interval(const DistanceMatrix& dm, int u, int v) {
    VertexSet out;
    int duv = dm.at(u, v);
    for (int w = 0; w < dm.n(); ++w)
        if (dm.at(u, w) + dm.at(w, v) == duv) out.add(w);
    return out;
}

bool is_even_graph(const DistanceMatrix& dm) {
    int diameter = eccentricity_profile(dm).diameter;
    for (int v = 0; v < dm.n(); ++v)
        if (dm.eccentricity(v) != diameter) return false;
    return true;
}

bool is_symmetric_even(const Graph& g, const DistanceMatrix& dm) {
    for (int u = 0; u < dm.n(); ++u) {
        bool found = false;
        for (int v = 0; v < dm.n() && !found; ++v)
            if (interval(dm, u, v) == g.vertices()) found = true;
        if (!found) return false;
    }
    return true;
}

EccentricMap unique_eccentric_map(const DistanceMatrix& dm) {
    EccentricMap em;
    em.total = true;
    em.bar.assign(static_cast<std::size_t>(dm.n()), -1);
    for (int v = 0; v < dm.n(); ++v) {
        VertexSet far = eccentric_vertices(dm, v);
        if (far.size() == 1)
            em.bar[static_cast<std::size_t>(v)] = far.min();
        else
            em.total = false;
    }
    return em;
}

bool antipodal_sum_check(const DistanceMatrix& dm, const EccentricMap& em) {
    if (!em.total)
        throw std::invalid_argument("antipodal_sum_check: eccentric map is not total");
    if (static_cast<int>(em.bar.size()) != dm.n())
        throw std::invalid_argument("antipodal_sum_check: map size mismatch");
    int diameter = eccentricity_profile(dm).diameter;
    for (int u = 0; u < dm.n(); ++u)
        for (int v = 0; v < dm.n(); ++v)
            if (dm.at(u, v) + dm.at(u, em.bar[static_cast<std::size_t>(v)]) != diameter) return false;
    return true;
}

}  // namespace fairset
