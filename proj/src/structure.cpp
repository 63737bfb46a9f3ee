#include "fairset/structure.hpp"

#include <cstdint>
#include <stdexcept>

namespace fairset {

bool is_connected(const Graph& g) {
    VertexSet reached = VertexSet::single(0);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next = next | g.neighbors(v); });
        frontier = next - reached;
        reached = reached | next;
    }
    return reached == g.vertices();
}

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;

    explicit BlockDfs(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.vertex_count()), -1),
          low(static_cast<std::size_t>(graph.vertex_count()), -1) {}

    void run(int u, int parent) {
        auto ui = static_cast<std::size_t>(u);
        disc[ui] = low[ui] = timer++;
        g.neighbors(u).for_each([&](int v) {
            if (v == parent) return;  // simple graph: the one tree edge back
            auto vi = static_cast<std::size_t>(v);
            if (disc[vi] == -1) {
                edge_stack.emplace_back(u, v);
                run(v, u);
                if (low[vi] < low[ui]) low[ui] = low[vi];
                if (low[vi] >= disc[ui]) {
                    VertexSet block;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.add(e.first);
                        block.add(e.second);
                        if (e == std::pair{u, v}) break;
                    }
                    blocks.push_back(block);
                }
            } else if (disc[vi] < disc[ui]) {
                edge_stack.emplace_back(u, v);
                if (disc[vi] < low[ui]) low[ui] = disc[vi];
            }
        });
    }
};

}  // namespace

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("blocks_and_cut_vertices: graph is disconnected");
    BlockDecomposition out;
    if (g.vertex_count() == 1) {
        out.blocks.push_back(VertexSet::single(0));
        return out;
    }
    BlockDfs dfs(g);
    dfs.run(0, -1);
    out.blocks = std::move(dfs.blocks);
    std::vector<int> membership(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& block : out.blocks)
        block.for_each([&](int v) { ++membership[static_cast<std::size_t>(v)]; });
    for (int v = 0; v < g.vertex_count(); ++v)
        if (membership[static_cast<std::size_t>(v)] >= 2) out.cut_vertices.add(v);
    return out;
}

bool is_block_graph(const Graph& g) {
    auto decomposition = blocks_and_cut_vertices(g);
    for (const auto& block : decomposition.blocks) {
        bool clique = true;
        block.for_each([&](int v) {
            if (!(block - VertexSet::single(v)).subset_of(g.neighbors(v))) clique = false;
        });
        if (!clique) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> label(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < n; ++t) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (pos[vi] == -1 && (best == -1 || label[vi] > label[static_cast<std::size_t>(best)]))
                best = v;
        }
        pos[static_cast<std::size_t>(best)] = t;
        order[static_cast<std::size_t>(t)] = best;
        std::uint64_t weight = std::uint64_t{1} << (n - 1 - t);
        g.neighbors(best).for_each([&](int v) {
            if (pos[static_cast<std::size_t>(v)] == -1) label[static_cast<std::size_t>(v)] |= weight;
        });
    }
    // Reverse visit order is a perfect elimination order iff G is chordal:
    // among each vertex's earlier-visited neighbors, the latest-visited one
    // must dominate the rest.
    VertexSet before;
    for (int t = 0; t < n; ++t) {
        int u = order[static_cast<std::size_t>(t)];
        VertexSet r = g.neighbors(u) & before;
        if (r.size() >= 2) {
            int p = -1;
            r.for_each([&](int v) {
                if (p == -1 || pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(p)]) p = v;
            });
            if (!(r - VertexSet::single(p)).subset_of(g.neighbors(p))) return false;
        }
        before.add(u);
    }
    return true;
}

Graph skeleton(const Graph& g) {
    if (!is_block_graph(g)) throw std::invalid_argument("skeleton: graph is not a connected block graph");
    auto decomposition = blocks_and_cut_vertices(g);
    int n = g.vertex_count();
    int r = static_cast<int>(decomposition.blocks.size());
    std::vector<std::pair<int, int>> e;
    for (int j = 0; j < r; ++j)
        decomposition.blocks[static_cast<std::size_t>(j)].for_each(
            [&](int v) { e.emplace_back(v, n + j); });
    return Graph(n + r, e);
}

bool induced_connected(const Graph& g, VertexSet a) {
    if (a.empty()) throw std::invalid_argument("induced_connected: empty set");
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("induced_connected: set exceeds vertex range");
    VertexSet reached = VertexSet::single(a.min());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next = next | (g.neighbors(v) & a); });
        frontier = next - reached;
        reached = reached | next;
    }
    return reached == a;
}

}  // namespace fairset
