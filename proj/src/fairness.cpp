#include "fairset/fairness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "fairset/graph6.hpp"
#include "fairset/structure.hpp"

namespace fairset {

namespace {

void check_reference_set(const DistanceMatrix& dm, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("reference set is empty");
    if (!s.subset_of(VertexSet::full(dm.n())))
        throw std::invalid_argument("reference set exceeds vertex range");
}

// Binomial table; entries that would overflow n <= 64 never arise.
struct Binomials {
    std::uint64_t c[65][65];
    Binomials() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = (k > n - 1 ? 0 : c[n - 1][k]) + c[n - 1][k - 1];
            for (int k = n + 1; k <= 64; ++k) c[n][k] = 0;
        }
    }
};

std::uint64_t choose(int n, int k) {
    static const Binomials table;
    return table.c[n][k];
}

// r-th k-subset mask in ascending numeric (colex) order.
std::uint64_t unrank_subset(int k, std::uint64_t r) {
    std::uint64_t bits = 0;
    int kk = k;
    int c = 63;
    while (kk > 0) {
        while (choose(c, kk) > r) --c;
        bits |= std::uint64_t{1} << c;
        r -= choose(c, kk);
        --kk;
        --c;
    }
    return bits;
}

// Next mask with the same popcount (Gosper); caller stops before the last one.
std::uint64_t next_same_popcount(std::uint64_t mask) {
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    return (((ripple ^ mask) >> 2) / low) | ripple;
}

struct Layer {
    int k;
    std::uint64_t count;
};

struct LocalHit {
    std::uint64_t witness;
    int min_partiality;
};

// Scan subset ranks [lo, hi) of the layered iteration order, recording the
// first witness per fair set seen inside the range.
void scan_range(const DistanceMatrix& dm, const std::vector<Layer>& layers, std::uint64_t lo,
                std::uint64_t hi, std::map<std::uint64_t, LocalHit>& out) {
    std::uint64_t base = 0;
    std::size_t li = 0;
    while (li < layers.size() && base + layers[li].count <= lo) base += layers[li++].count;
    if (li >= layers.size()) return;
    std::uint64_t offset = lo - base;
    std::uint64_t mask = unrank_subset(layers[li].k, offset);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        auto fc = fair_center(dm, VertexSet(mask));
        out.try_emplace(fc.center.bits(), LocalHit{mask, fc.min_partiality});
        if (rank + 1 == hi) break;
        if (++offset == layers[li].count) {
            ++li;
            offset = 0;
            mask = (layers[li].k == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << layers[li].k) - 1;
        } else {
            mask = next_same_popcount(mask);
        }
    }
}

std::vector<Layer> make_layers(int n, bool include_singleton_s) {
    std::vector<Layer> layers;
    for (int k = include_singleton_s ? 1 : 2; k <= n; ++k)
        layers.push_back({k, choose(n, k)});
    return layers;
}

}  // namespace

int partiality(const DistanceMatrix& dm, int x, VertexSet s) {
    check_reference_set(dm, s);
    if (x < 0 || x >= dm.n()) throw std::invalid_argument("vertex out of range");
    int lo = kMaxVertices, hi = 0;
    s.for_each([&](int v) {
        int d = dm.at(x, v);
        if (d < lo) lo = d;
        if (d > hi) hi = d;
    });
    return hi - lo;
}

PartialityProfile partiality_profile(const DistanceMatrix& dm, VertexSet s) {
    check_reference_set(dm, s);
    PartialityProfile p;
    p.s = s;
    p.f.reserve(static_cast<std::size_t>(dm.n()));
    p.min_f = kMaxVertices;
    for (int x = 0; x < dm.n(); ++x) {
        p.f.push_back(partiality(dm, x, s));
        if (p.f.back() < p.min_f) p.min_f = p.f.back();
    }
    return p;
}

FairCenterResult fair_center(const DistanceMatrix& dm, VertexSet s) {
    check_reference_set(dm, s);
    FairCenterResult r;
    r.s = s;
    r.min_partiality = kMaxVertices;
    for (int x = 0; x < dm.n(); ++x) {
        int lo = kMaxVertices, hi = 0;
        s.for_each([&](int v) {
            int d = dm.at(x, v);
            if (d < lo) lo = d;
            if (d > hi) hi = d;
        });
        int f = hi - lo;
        if (f < r.min_partiality) {
            r.min_partiality = f;
            r.center = VertexSet::single(x);
        } else if (f == r.min_partiality) {
            r.center.add(x);
        }
    }
    return r;
}

const FairSetEntry* FairSetInventory::find(VertexSet a) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), a,
                               [](const FairSetEntry& e, VertexSet key) {
                                   return size_lex_less(e.set, key);
                               });
    if (it != entries.end() && it->set == a) return &*it;
    return nullptr;
}

FairSetInventory enumerate_fair_sets(const Graph& g, const EnumerateOptions& opt) {
    int n = g.vertex_count();
    if (n > opt.ceiling && !opt.force)
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds enumeration ceiling " +
                                    std::to_string(opt.ceiling) + " (force to override)");
    DistanceMatrix dm(g);
    auto layers = make_layers(n, opt.include_singleton_s);
    std::uint64_t total = 0;
    for (const auto& layer : layers) total += layer.count;
    std::uint64_t examined = total;
    if (opt.subset_cap && *opt.subset_cap < examined) examined = *opt.subset_cap;

    int workers = std::clamp(opt.workers, 1, 64);
    if (examined < 2048) workers = 1;
    std::vector<std::map<std::uint64_t, LocalHit>> partial(static_cast<std::size_t>(workers));
    if (workers == 1) {
        scan_range(dm, layers, 0, examined, partial[0]);
    } else {
        std::uint64_t chunk = (examined + static_cast<std::uint64_t>(workers) - 1) /
                              static_cast<std::uint64_t>(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
            std::uint64_t hi = std::min(examined, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] {
                scan_range(dm, layers, lo, hi, partial[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Chunks cover ascending rank ranges, so inserting in chunk order keeps
    // the globally first witness.
    std::map<std::uint64_t, LocalHit> merged;
    for (auto& local : partial)
        for (const auto& [set_bits, hit] : local) merged.try_emplace(set_bits, hit);

    FairSetInventory inv;
    inv.graph6 = format_graph6(g);
    inv.vertex_count = n;
    inv.include_singleton_s = opt.include_singleton_s;
    inv.ceiling = opt.ceiling;
    inv.subsets_examined = examined;
    inv.subset_cap = opt.subset_cap;
    inv.truncated = examined < total;
    inv.entries.reserve(merged.size());
    for (const auto& [set_bits, hit] : merged)
        inv.entries.push_back({VertexSet(set_bits), VertexSet(hit.witness), hit.min_partiality});
    std::sort(inv.entries.begin(), inv.entries.end(),
              [](const FairSetEntry& a, const FairSetEntry& b) { return size_lex_less(a.set, b.set); });
    return inv;
}

std::optional<FairCenterResult> find_witness(const Graph& g, VertexSet a, bool include_singleton_s,
                                             int ceiling, bool force) {
    int n = g.vertex_count();
    if (n > ceiling && !force)
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds enumeration ceiling " +
                                    std::to_string(ceiling) + " (force to override)");
    if (a.empty() || !a.subset_of(g.vertices()))
        throw std::invalid_argument("candidate set must be a nonempty subset of the vertices");
    DistanceMatrix dm(g);
    for (const auto& layer : make_layers(n, include_singleton_s)) {
        std::uint64_t mask = (layer.k == 64) ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << layer.k) - 1;
        for (std::uint64_t i = 0; i < layer.count; ++i) {
            auto fc = fair_center(dm, VertexSet(mask));
            if (fc.center == a) return fc;
            if (i + 1 < layer.count) mask = next_same_popcount(mask);
        }
    }
    return std::nullopt;
}

AuditReport connectivity_audit(const Graph& g, const FairSetInventory& inv) {
    if (format_graph6(g) != inv.graph6)
        throw std::invalid_argument("connectivity_audit: inventory belongs to a different graph");
    AuditReport report;
    report.graph6 = inv.graph6;
    report.include_singleton_s = inv.include_singleton_s;
    for (const auto& entry : inv.entries) {
        bool ok = induced_connected(g, entry.set);
        report.verdicts.push_back({entry.set, ok});
        if (!ok) {
            report.all_connected = false;
            report.disconnected.push_back(entry);
        }
    }
    return report;
}

}  // namespace fairset
