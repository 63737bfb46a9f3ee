#include "fairset/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fairset {

namespace {

constexpr int bit_index(int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
}

int mask_bits(int n) { return n * (n - 1) / 2; }

std::uint64_t permuted_mask(std::uint64_t mask, int n, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> bit_index(i, j) & 1u) {
                int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                out |= std::uint64_t{1} << bit_index(a, b);
            }
    return out;
}

bool mask_connected(std::uint64_t mask, int n) {
    std::uint64_t adj[11] = {};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> bit_index(i, j) & 1u) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    std::uint64_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= adj[std::countr_zero(m)];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

std::uint64_t edge_mask(const Graph& g) {
    if (g.vertex_count() > 11)
        throw std::invalid_argument("edge_mask needs order <= 11");
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << bit_index(u, v);
    return mask;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n < 1 || n > 11) throw std::invalid_argument("graph_from_edge_mask needs order 1..11");
    if (n < 11 && mask >> mask_bits(n))
        throw std::invalid_argument("edge mask has bits beyond the order");
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> bit_index(i, j) & 1u) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::uint64_t canonical_edge_mask(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_edge_mask needs order <= 8");
    std::uint64_t mask = edge_mask(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = mask;
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, permuted_mask(mask, n, perm));
    return best;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 7) throw std::invalid_argument("connected catalog covers orders 1..7");
    if (n == 1) {
        visit(Graph(1, {}));
        return;
    }
    int bits = mask_bits(n);
    std::vector<bool> seen(std::size_t{1} << bits);
    std::vector<int> perm(static_cast<std::size_t>(n));

    // Ascending scan: the first unseen connected mask is its orbit minimum,
    // because every earlier isomorphic mask would have marked it.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        if (seen[mask]) continue;
        if (!mask_connected(mask, n)) continue;
        visit(graph_from_edge_mask(n, mask));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            seen[permuted_mask(mask, n, perm)] = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

}  // namespace fairset
