#include "fairset/graph6.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace fairset {

namespace {

constexpr int kOffset = 63;  // printable-range offset shared by all graph6 bytes

int byte_value(char c, std::size_t at) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw std::invalid_argument("graph6: byte " + std::to_string(at) + " outside 63..126");
    return u - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    std::size_t at = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw std::invalid_argument("graph6: order beyond 258047 not supported");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated long-form order");
        n = 0;
        for (at = 1; at <= 3; ++at) n = (n << 6) | byte_value(line[at], at);
    } else {
        n = byte_value(line[0], 0);
        at = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " outside 1..64");

    long long bit_count = n * (n - 1) / 2;
    std::size_t need = at + static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() != need)
        throw std::invalid_argument("graph6: expected " + std::to_string(need) + " bytes, got " +
                                    std::to_string(line.size()));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int v = byte_value(line[at + static_cast<std::size_t>(bit / 6)],
                               at + static_cast<std::size_t>(bit / 6));
            if (v >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    // trailing padding bits must be zero
    for (; bit % 6 != 0; ++bit) {
        int v = byte_value(line[at + static_cast<std::size_t>(bit / 6)],
                           at + static_cast<std::size_t>(bit / 6));
        if (v >> (5 - bit % 6) & 1) throw std::invalid_argument("graph6: nonzero padding bit");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kOffset);
    } else {
        out += '~';
        out += static_cast<char>((n >> 12 & 63) + kOffset);
        out += static_cast<char>((n >> 6 & 63) + kOffset);
        out += static_cast<char>((n & 63) + kOffset);
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + kOffset);
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out += static_cast<char>((acc << (6 - filled)) + kOffset);
    return out;
}

Graph parse_edge_list(std::istream& in) {
    auto next_line = [&](std::string& s) {
        while (std::getline(in, s)) {
            std::size_t hash = s.find('#');
            if (hash != std::string::npos) s.erase(hash);
            std::size_t last = s.find_last_not_of(" \t\r");
            if (last == std::string::npos) continue;
            s.erase(last + 1);
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw std::invalid_argument("edge list: missing header line \"n m\"");
    std::istringstream head(line);
    long long n = 0, m = 0;
    if (!(head >> n >> m) || (head >> line))
        throw std::invalid_argument("edge list: header must be \"n m\"");
    std::vector<std::pair<int, int>> edges;
    for (long long k = 0; k < m; ++k) {
        if (!next_line(line)) throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                                          " edges, got " + std::to_string(k));
        std::istringstream row(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            throw std::invalid_argument("edge list: bad edge line \"" + line + "\"");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(line)) throw std::invalid_argument("edge list: trailing content \"" + line + "\"");
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("edge list: order " + std::to_string(n) + " outside 1..64");
    return Graph(static_cast<int>(n), edges);
}

}  // namespace fairset
