#include "fairset/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fairset {

void for_each_rooted_tree(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("rooted tree order must be in 1..64");
    if (n == 1) {
        visit({-1});
        return;
    }

    // Level sequence: depth of each preorder vertex, root at depth 1. The
    // first sequence is the path 1,2,...,n; the successor chops the rightmost
    // deep vertex and tiles the tail with the block above it.
    std::vector<int> level(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) level[static_cast<std::size_t>(i)] = i + 1;

    std::vector<int> parent(static_cast<std::size_t>(n));
    while (true) {
        parent[0] = -1;
        for (int i = 1; i < n; ++i) {
            int j = i - 1;
            while (level[static_cast<std::size_t>(j)] != level[static_cast<std::size_t>(i)] - 1) --j;
            parent[static_cast<std::size_t>(i)] = j;
        }
        visit(parent);

        int p = n - 1;
        while (p >= 0 && level[static_cast<std::size_t>(p)] <= 2) --p;
        if (p < 0) break;
        int q = p - 1;
        while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
        for (int i = p; i < n; ++i)
            level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - (p - q))];
    }
}

namespace {

std::string ahu(int v, int from, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> kids;
    for (int u : adj[static_cast<std::size_t>(v)])
        if (u != from) kids.push_back(ahu(u, v, adj));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const std::string& k : kids) s += k;
    return s + ")";
}

// 1 or 2 centers of a tree, found by peeling leaves.
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> layer, alive(static_cast<std::size_t>(n), 1);
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            alive[static_cast<std::size_t>(v)] = 0;
            --remaining;
            for (int u : adj[static_cast<std::size_t>(v)])
                if (alive[static_cast<std::size_t>(u)] && --degree[static_cast<std::size_t>(u)] == 1)
                    next.push_back(u);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) centers.push_back(v);
    return centers;
}

std::string free_tree_key(const std::vector<std::vector<int>>& adj) {
    std::vector<int> centers = tree_centers(adj);
    if (centers.size() == 1) return ahu(centers[0], -1, adj);
    std::string a = ahu(centers[0], centers[1], adj);
    std::string b = ahu(centers[1], centers[0], adj);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

}  // namespace

std::vector<Graph> free_trees(int n) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    for_each_rooted_tree(n, [&](const std::vector<int>& parent) {
        std::vector<std::vector<int>> adj(parent.size());
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) {
            int p = parent[static_cast<std::size_t>(i)];
            adj[static_cast<std::size_t>(p)].push_back(i);
            adj[static_cast<std::size_t>(i)].push_back(p);
            edges.emplace_back(p, i);
        }
        if (seen.insert(free_tree_key(adj)).second) out.push_back(Graph(n, edges));
    });
    return out;
}

}  // namespace fairset
