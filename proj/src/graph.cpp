#include "fairset/graph.hpp"

#include <random>
#include <stdexcept>

namespace fairset {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 1..64");
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for order " + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        // Duplicate edges collapse silently; the adjacency rows are sets.
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (const auto& row : adj_) deg_sum += row.size();
    return deg_sum / 2;
}

VertexSet Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    return neighbors(u).contains(v) && u != v;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

namespace {

const struct {
    const char* name;
    Family family;
    int params;  // number of integer parameters, excluding seed
    bool seeded;
} kFamilies[] = {
    {"path", Family::path, 1, false},
    {"cycle", Family::cycle, 1, false},
    {"complete", Family::complete, 1, false},
    {"complete_minus_edge", Family::complete_minus_edge, 1, false},
    {"complete_bipartite", Family::complete_bipartite, 2, false},
    {"wheel", Family::wheel, 1, false},
    {"star", Family::star, 1, false},
    {"hypercube", Family::hypercube, 1, false},
    {"random_tree", Family::random_tree, 1, true},
    {"random_block_graph", Family::random_block_graph, 1, true},
};

long long parse_int(const std::string& text) {
    std::size_t pos = 0;
    long long value = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in number '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = text.find(sep, start);
        parts.push_back(text.substr(start, at - start));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    return parts;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    std::size_t colon = text.find(':');
    std::string name = text.substr(0, colon);
    if (name == "wheel5" && colon == std::string::npos) return FamilySpec{Family::wheel, 5};
    for (const auto& row : kFamilies) {
        if (name != row.name) continue;
        if (colon == std::string::npos)
            throw std::invalid_argument("family '" + name + "' needs parameters, e.g. " + name + ":4");
        auto parts = split(text.substr(colon + 1), ',');
        int expected = row.params + (row.seeded ? 1 : 0);
        if (static_cast<int>(parts.size()) != expected && !(row.seeded && static_cast<int>(parts.size()) == row.params))
            throw std::invalid_argument("family '" + name + "' expects " + std::to_string(expected) +
                                        " parameter(s)");
        FamilySpec spec{row.family};
        try {
            spec.a = static_cast<int>(parse_int(parts[0]));
            if (row.params > 1) spec.b = static_cast<int>(parse_int(parts[1]));
            if (row.seeded && parts.size() > static_cast<std::size_t>(row.params))
                spec.seed = static_cast<std::uint64_t>(parse_int(parts[static_cast<std::size_t>(row.params)]));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric parameter in family '" + text + "'");
        }
        return spec;
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(const FamilySpec& spec) {
    for (const auto& row : kFamilies) {
        if (row.family != spec.family) continue;
        std::string out = row.name;
        out += ":" + std::to_string(spec.a);
        if (row.params > 1) out += "," + std::to_string(spec.b);
        if (row.seeded) out += "," + std::to_string(spec.seed);
        return out;
    }
    throw std::logic_error("unmapped family enum");
}

namespace {

Graph make_path(int k) {
    if (k < 1) throw std::invalid_argument("path needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph(k, e);
}

Graph make_complete(int n, bool drop01) {
    if (n < 1 || (drop01 && n < 3))
        throw std::invalid_argument(drop01 ? "complete_minus_edge needs n >= 3" : "complete needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(drop01 && i == 0 && j == 1)) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite needs m,n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
    return Graph(m + n, e);
}

Graph make_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
    std::vector<std::pair<int, int>> e;
    int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        e.emplace_back(i, (i + 1) % rim);
        e.emplace_back(i, n - 1);
    }
    return Graph(n, e);
}

Graph make_hypercube(int d) {
    if (d < 1 || d > 6) throw std::invalid_argument("hypercube needs 1 <= d <= 6");
    std::vector<std::pair<int, int>> e;
    int n = 1 << d;
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b)
            if (i < (i ^ (1 << b))) e.emplace_back(i, i ^ (1 << b));
    return Graph(n, e);
}

Graph make_random_tree(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_tree needs 1 <= n <= 64");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        e.emplace_back(pick(rng), i);
    }
    return Graph(n, e);
}

// Grow a block graph by repeatedly pasting a clique of size 2..4 at a
// uniformly chosen existing vertex; pasted vertices beyond the budget are
// dropped so the graph lands on exactly n vertices.
Graph make_random_block_graph(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_block_graph needs 1 <= n <= 64");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    int built = 1;
    while (built < n) {
        std::uniform_int_distribution<int> pick_vertex(0, built - 1);
        std::uniform_int_distribution<int> pick_extra(1, 3);
        int at = pick_vertex(rng);
        int extra = std::min(pick_extra(rng), n - built);
        std::vector<int> clique{at};
        for (int i = 0; i < extra; ++i) clique.push_back(built++);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                e.emplace_back(clique[i], clique[j]);
    }
    return Graph(n, e);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(spec.a);
        case Family::cycle: return make_cycle(spec.a);
        case Family::complete: return make_complete(spec.a, false);
        case Family::complete_minus_edge: return make_complete(spec.a, true);
        case Family::complete_bipartite: return make_complete_bipartite(spec.a, spec.b);
        case Family::wheel: return make_wheel(spec.a);
        case Family::star: return make_complete_bipartite(1, spec.a);
        case Family::hypercube: return make_hypercube(spec.a);
        case Family::random_tree: return make_random_tree(spec.a, spec.seed);
        case Family::random_block_graph: return make_random_block_graph(spec.a, spec.seed);
    }
    throw std::logic_error("unmapped family enum");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    long long total = static_cast<long long>(g.vertex_count()) * h.vertex_count();
    if (total > kMaxVertices)
        throw std::invalid_argument("product order " + std::to_string(total) + " exceeds 64");
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < nh; ++v) {
            h.neighbors(v).for_each([&](int w) {
                if (v < w) e.emplace_back(u * nh + v, u * nh + w);
            });
            g.neighbors(u).for_each([&](int x) {
                if (u < x) e.emplace_back(u * nh + v, x * nh + v);
            });
        }
    return Graph(static_cast<int>(total), e);
}

}  // namespace fairset
