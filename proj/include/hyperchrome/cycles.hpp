#pragma once

// Delta-cycles: minimal edge sets in which every edge can be deleted without
// changing the component count of the witness subgraph (V(A), A). Broken
// cycles drop the maximal edge of a delta-cycle under a linear edge order.
// Closing edges and block indices mirror the constructions used to cancel
// pruned summation terms.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypergraph.hpp"

namespace hyperchrome {

// k((V(A), A)) == k((V(A), A \ {e})); uncovered vertices of e stay in the
// vertex set and count as singletons. Both sides share the scope V(A), so the
// condition reduces to equal merge counts.
inline bool is_removable(const Hypergraph& g, EdgeSubset a, EdgeId e) {
    if (!a.contains(e)) throw std::invalid_argument("is_removable: edge not in subset");
    return detail::merge_count(g, a) == detail::merge_count(g, a.without(e));
}

inline bool is_delta_cyclic_witness(const Hypergraph& g, EdgeSubset a) {
    if (a.empty()) return false;
    const unsigned merges = detail::merge_count(g, a);
    bool ok = true;
    a.for_each([&](EdgeId e) {
        if (ok && detail::merge_count(g, a.without(e)) != merges) ok = false;
    });
    return ok;
}

namespace detail {

// Gosper's hack: next mask with the same popcount.
inline std::uint64_t next_same_popcount(std::uint64_t v) {
    const std::uint64_t c = v & (0 - v);
    const std::uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace detail

inline bool is_delta_cyclic(const Hypergraph& g, unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "is_delta_cyclic");
    const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t mask = 1; mask < limit; ++mask)
        if (is_delta_cyclic_witness(g, EdgeSubset{mask})) return true;
    return false;
}

// All inclusion-minimal witnesses, ordered by (cardinality, mask). Subsets are
// visited in increasing cardinality, so any subset containing an earlier find
// is non-minimal and skipped before the witness test.
inline std::vector<EdgeSubset> enumerate_delta_cycles(const Hypergraph& g,
                                                      unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "enumerate_delta_cycles");
    const unsigned m = g.edge_count();
    std::vector<EdgeSubset> minimal;
    if (m == 0) return minimal;
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (unsigned card = 1; card <= m; ++card) {
        for (std::uint64_t mask = (std::uint64_t{1} << card) - 1; mask < limit;
             mask = detail::next_same_popcount(mask)) {
            EdgeSubset a{mask};
            bool covered = false;
            for (EdgeSubset c : minimal)
                if (c.subset_of(a)) {
                    covered = true;
                    break;
                }
            if (!covered && is_delta_cyclic_witness(g, a)) minimal.push_back(a);
            if (mask == limit - 1) break;  // Gosper overflows past the full set
        }
    }
    std::sort(minimal.begin(), minimal.end(), [](EdgeSubset x, EdgeSubset y) {
        return x.count() != y.count() ? x.count() < y.count() : x.bits < y.bits;
    });
    return minimal;
}

// Precomputed delta-cycle structure for one (hypergraph, order) pair. Keeps
// the broken cycle set, per-broken-cycle closing edges, and answers block
// index queries without re-enumerating.
class BrokenCycleAnalysis {
public:
    BrokenCycleAnalysis(const Hypergraph& g, const EdgeOrder& order,
                        unsigned cap = kDefaultEdgeCap)
        : order_(order) {
        if (order.size() != g.edge_count())
            throw std::invalid_argument("edge order does not match hypergraph");
        delta_cycles_ = enumerate_delta_cycles(g, cap);

        std::unordered_set<std::uint64_t> cycle_set;
        for (EdgeSubset c : delta_cycles_) cycle_set.insert(c.bits);

        for (EdgeSubset c : delta_cycles_) {
            EdgeSubset b = c.without(order.max_edge(c));
            if (std::find(broken_.begin(), broken_.end(), b) == broken_.end())
                broken_.push_back(b);
        }
        std::sort(broken_.begin(), broken_.end(), [](EdgeSubset x, EdgeSubset y) {
            return x.count() != y.count() ? x.count() < y.count() : x.bits < y.bits;
        });

        for (EdgeSubset b : broken_) {
            // Closing candidates are the edges that complete b to a
            // delta-cycle of which b is the broken part, i.e. edges ranked
            // above every member of b. Candidates below b's top edge close
            // some delta-cycle but break the block-partition cancellation
            // (three parallel edges e1<e2<e3: {e1,e2} is a delta-cycle, yet
            // e1 must not count as closing the broken cycle {e2}).
            const unsigned floor_rank = b.empty() ? 0 : order.rank(order.max_edge(b));
            EdgeId min_e = 0, max_e = 0;
            unsigned min_rank = order.size() + 1, max_rank = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                const unsigned r = order.rank(e);
                if (r <= floor_rank) continue;
                if (!cycle_set.count(b.with(e).bits)) continue;
                if (r < min_rank) { min_rank = r; min_e = e; }
                if (r > max_rank) { max_rank = r; max_e = e; }
            }
            closing_.emplace_back(min_e, max_e);
        }
    }

    const std::vector<EdgeSubset>& delta_cycles() const { return delta_cycles_; }
    const std::vector<EdgeSubset>& broken() const { return broken_; }
    const EdgeOrder& order() const { return order_; }

    bool contains_broken_cycle(EdgeSubset a) const {
        for (EdgeSubset b : broken_)
            if (b.subset_of(a)) return true;
        return false;
    }

    EdgeId min_closing_edge(EdgeSubset b) const { return closing_.at(find_broken(b)).first; }
    EdgeId max_closing_edge(EdgeSubset b) const { return closing_.at(find_broken(b)).second; }

    // 0 when a includes no broken cycle; otherwise the rank of the minimal
    // closing edge over the broken cycles included in a.
    unsigned block_index(EdgeSubset a) const {
        unsigned best = 0;
        for (std::size_t i = 0; i < broken_.size(); ++i) {
            if (!broken_[i].subset_of(a)) continue;
            const unsigned r = order_.rank(closing_[i].first);
            if (best == 0 || r < best) best = r;
        }
        return best;
    }

private:
    std::size_t find_broken(EdgeSubset b) const {
        for (std::size_t i = 0; i < broken_.size(); ++i)
            if (broken_[i] == b) return i;
        throw std::invalid_argument("not a broken cycle of this hypergraph under this order");
    }

    EdgeOrder order_;
    std::vector<EdgeSubset> delta_cycles_;
    std::vector<EdgeSubset> broken_;
    std::vector<std::pair<EdgeId, EdgeId>> closing_;
};

// The set of all broken cycles: { E_C minus its maximal edge }, deduplicated.
inline std::vector<EdgeSubset> broken_cycles(const Hypergraph& g, const EdgeOrder& order,
                                             unsigned cap = kDefaultEdgeCap) {
    return BrokenCycleAnalysis(g, order, cap).broken();
}

// Minimal/maximal edge closing a broken cycle. An edge closes b when b plus
// that edge is the edge set of a delta-cycle whose broken cycle is b again,
// so candidates always outrank every member of b.
inline EdgeId min_closing_edge(const Hypergraph& g, const EdgeOrder& order, EdgeSubset b,
                               unsigned cap = kDefaultEdgeCap) {
    return BrokenCycleAnalysis(g, order, cap).min_closing_edge(b);
}

inline EdgeId max_closing_edge(const Hypergraph& g, const EdgeOrder& order, EdgeSubset b,
                               unsigned cap = kDefaultEdgeCap) {
    return BrokenCycleAnalysis(g, order, cap).max_closing_edge(b);
}

inline unsigned block_index(const Hypergraph& g, const EdgeOrder& order, EdgeSubset a,
                            unsigned cap = kDefaultEdgeCap) {
    return BrokenCycleAnalysis(g, order, cap).block_index(a);
}

}  // namespace hyperchrome
