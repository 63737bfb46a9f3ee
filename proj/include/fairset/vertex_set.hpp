#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairset {

inline constexpr int kMaxVertices = 64;

// Subset of {0,...,63} stored as a 64-bit mask. Iteration is always in
// ascending vertex order, so anything derived from a VertexSet is
// deterministic.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) add(v);
    }

    static VertexSet full(int n) {
        check_universe(n);
        return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet single(int v) {
        check_vertex(v);
        return VertexSet(std::uint64_t{1} << v);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const {
        return v >= 0 && v < kMaxVertices && (bits_ >> v & 1u);
    }

    void add(int v) {
        check_vertex(v);
        bits_ |= std::uint64_t{1} << v;
    }
    void remove(int v) {
        check_vertex(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    // Lowest vertex; the set must be nonempty.
    int min() const {
        if (empty()) throw std::logic_error("VertexSet::min on empty set");
        return std::countr_zero(bits_);
    }

    // Complement relative to {0,...,n-1}; every member must lie below n.
    VertexSet complement(int n) const {
        VertexSet u = full(n);
        if (!subset_of(u)) throw std::invalid_argument("VertexSet::complement: set exceeds universe");
        return VertexSet(u.bits_ & ~bits_);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t m = bits_; m; m &= m - 1) f(std::countr_zero(m));
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        return a.bits_ <=> b.bits_;
    }

private:
    static void check_vertex(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("vertex index " + std::to_string(v) + " outside 0..63");
    }
    static void check_universe(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("universe size " + std::to_string(n) + " outside 0..64");
    }

    std::uint64_t bits_ = 0;
};

// Ordering by (cardinality, then numeric mask value): the canonical
// enumeration order used everywhere a stream of subsets is produced.
inline bool size_lex_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

}  // namespace fairset
