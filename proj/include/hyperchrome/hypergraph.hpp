#pragma once

// Core hypergraph model: dense vertex/edge ids, edge subsets as 64-bit masks,
// linear edge orders, validation, and connected-component counting.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchrome {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Exhaustive subset enumeration is rejected above these edge counts.
inline constexpr unsigned kDefaultEdgeCap = 24;
inline constexpr unsigned kHardEdgeCap = 30;
// EdgeSubset is a 64-bit mask, so nothing works past 63 edges.
inline constexpr unsigned kMaxSubsetEdges = 63;

class EdgeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A subset of edge ids, packed into a bit mask. Edge id i <-> bit i.
struct EdgeSubset {
    std::uint64_t bits = 0;

    constexpr EdgeSubset() = default;
    explicit constexpr EdgeSubset(std::uint64_t mask) : bits(mask) {}

    static EdgeSubset of(std::initializer_list<EdgeId> ids) {
        EdgeSubset s;
        for (EdgeId e : ids) s.bits |= std::uint64_t{1} << e;
        return s;
    }

    static EdgeSubset all(unsigned edge_count) {
        if (edge_count > kMaxSubsetEdges)
            throw std::invalid_argument("EdgeSubset supports at most 63 edges");
        return EdgeSubset{edge_count == 0 ? 0 : (std::uint64_t{~0ull} >> (64 - edge_count))};
    }

    bool contains(EdgeId e) const { return (bits >> e) & 1u; }
    bool empty() const { return bits == 0; }
    unsigned count() const { return static_cast<unsigned>(std::popcount(bits)); }
    bool subset_of(EdgeSubset other) const { return (bits & ~other.bits) == 0; }

    EdgeSubset with(EdgeId e) const { return EdgeSubset{bits | (std::uint64_t{1} << e)}; }
    EdgeSubset without(EdgeId e) const { return EdgeSubset{bits & ~(std::uint64_t{1} << e)}; }

    friend bool operator==(EdgeSubset a, EdgeSubset b) { return a.bits == b.bits; }
    friend bool operator<(EdgeSubset a, EdgeSubset b) { return a.bits < b.bits; }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t m = bits; m != 0; m &= m - 1)
            fn(static_cast<EdgeId>(std::countr_zero(m)));
    }

    std::vector<EdgeId> members() const {
        std::vector<EdgeId> out;
        out.reserve(count());
        for_each([&](EdgeId e) { out.push_back(e); });
        return out;
    }
};

// Vertices are 0..vertex_count-1; edges keep listing order and identity, so
// parallel edges stay distinct. Each edge is stored sorted and deduplicated.
// Construction does not reject malformed edges; validate() reports them.
class Hypergraph {
public:
    Hypergraph(unsigned vertex_count, std::vector<std::vector<VertexId>> edges,
               std::vector<std::string> vertex_labels = {})
        : vertex_count_(vertex_count),
          edges_(std::move(edges)),
          labels_(std::move(vertex_labels)) {
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
        }
    }

    unsigned vertex_count() const { return vertex_count_; }
    unsigned edge_count() const { return static_cast<unsigned>(edges_.size()); }
    const std::vector<VertexId>& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }

    // External name of a vertex; defaults to 1-based decimal ids.
    std::string vertex_label(VertexId v) const {
        if (v < labels_.size()) return labels_[v];
        return std::to_string(v + 1);
    }

private:
    unsigned vertex_count_;
    std::vector<std::vector<VertexId>> edges_;
    std::vector<std::string> labels_;
};

// Every violation is reported; an empty list means the hypergraph is valid.
inline std::vector<std::string> validate(const Hypergraph& g) {
    std::vector<std::string> violations;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& vs = g.edge(e);
        if (vs.empty()) {
            violations.push_back("edge " + std::to_string(e) + ": empty edge");
            continue;
        }
        for (VertexId v : vs)
            if (v >= g.vertex_count())
                violations.push_back("edge " + std::to_string(e) + ": vertex " +
                                     std::to_string(v) + " out of range");
    }
    return violations;
}

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
    }

    VertexId find(VertexId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<VertexId> parent_;
};

// Number of successful unions performed by the edges of `a`. Component counts
// on any vertex superset of V(a) differ from the scope size by exactly this,
// so equality of merge counts is equality of component counts on a fixed scope.
inline unsigned merge_count(const Hypergraph& g, EdgeSubset a) {
    UnionFind uf(g.vertex_count());
    unsigned merges = 0;
    a.for_each([&](EdgeId e) {
        const auto& vs = g.edge(e);
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (uf.unite(vs[0], vs[i])) ++merges;
    });
    return merges;
}

inline void require_subset_cap(unsigned edge_count, unsigned cap, const char* what) {
    if (cap > kHardEdgeCap) cap = kHardEdgeCap;
    if (edge_count > cap)
        throw EdgeCapError(std::string(what) + ": edge cap exceeded (" +
                           std::to_string(edge_count) + " edges, cap " +
                           std::to_string(cap) + ")");
}

}  // namespace detail

// Vertices covered by at least one edge of `a`, ascending.
inline std::vector<VertexId> covered_vertices(const Hypergraph& g, EdgeSubset a) {
    std::vector<char> seen(g.vertex_count(), 0);
    a.for_each([&](EdgeId e) {
        for (VertexId v : g.edge(e)) seen[v] = 1;
    });
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

// k((V, A)): isolated vertices count as singleton components.
inline unsigned spanning_component_count(const Hypergraph& g, EdgeSubset a) {
    return g.vertex_count() - detail::merge_count(g, a);
}

// k((V(A), A)): components of the subgraph on the covered vertices only.
// The empty subset covers nothing and has zero components.
inline unsigned restricted_component_count(const Hypergraph& g, EdgeSubset a) {
    const auto covered = static_cast<unsigned>(covered_vertices(g, a).size());
    return covered - detail::merge_count(g, a);
}

// A linear order on the edge set, stored as a rank bijection EdgeId -> 1..m.
class EdgeOrder {
public:
    explicit EdgeOrder(std::vector<unsigned> ranks) : rank_(std::move(ranks)) {
        std::vector<char> seen(rank_.size() + 1, 0);
        for (unsigned r : rank_) {
            if (r < 1 || r > rank_.size() || seen[r])
                throw std::invalid_argument("edge order is not a bijection onto 1..m");
            seen[r] = 1;
        }
    }

    // Listing order: edge i gets rank i+1.
    static EdgeOrder listing(unsigned edge_count) {
        std::vector<unsigned> r(edge_count);
        std::iota(r.begin(), r.end(), 1u);
        return EdgeOrder(std::move(r));
    }

    // Edges listed from lowest to highest rank.
    static EdgeOrder from_sequence(const std::vector<EdgeId>& ascending) {
        std::vector<unsigned> r(ascending.size(), 0);
        for (unsigned i = 0; i < ascending.size(); ++i) {
            if (ascending[i] >= r.size())
                throw std::invalid_argument("edge order references edge out of range");
            r[ascending[i]] = i + 1;
        }
        return EdgeOrder(std::move(r));
    }

    unsigned size() const { return static_cast<unsigned>(rank_.size()); }
    unsigned rank(EdgeId e) const { return rank_.at(e); }

    EdgeId edge_at_rank(unsigned r) const {
        for (EdgeId e = 0; e < rank_.size(); ++e)
            if (rank_[e] == r) return e;
        throw std::out_of_range("rank out of range");
    }

    EdgeId max_edge(EdgeSubset a) const {
        if (a.empty()) throw std::invalid_argument("max_edge of empty subset");
        EdgeId best = 0;
        unsigned best_rank = 0;
        a.for_each([&](EdgeId e) {
            if (rank_.at(e) > best_rank) {
                best_rank = rank_[e];
                best = e;
            }
        });
        return best;
    }

    EdgeId min_edge(EdgeSubset a) const {
        if (a.empty()) throw std::invalid_argument("min_edge of empty subset");
        EdgeId best = 0;
        unsigned best_rank = size() + 1;
        a.for_each([&](EdgeId e) {
            if (rank_.at(e) < best_rank) {
                best_rank = rank_[e];
                best = e;
            }
        });
        return best;
    }

private:
    std::vector<unsigned> rank_;
};

}  // namespace hyperchrome
