#pragma once

// Chromatic polynomials of hypergraphs by three independent routes:
//   - brute-force counting of proper colorings,
//   - alternating sum over all edge subsets,
//   - the same sum restricted to broken-cycle-free subsets.
// All arithmetic is exact.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cycles.hpp"
#include "hypergraph.hpp"
#include "polynomial.hpp"

namespace hyperchrome {

// Colors 1..k (any consistent value set works), index = VertexId.
using Coloring = std::vector<unsigned>;

namespace detail {

inline bool proper_under(const Hypergraph& g, const std::vector<unsigned>& color) {
    for (const auto& e : g.edges()) {
        bool mono = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (color[e[i]] != color[e[0]]) {
                mono = false;
                break;
            }
        if (mono) return false;  // singleton edges are always monochromatic
    }
    return true;
}

}  // namespace detail

inline bool is_proper(const Hypergraph& g, const Coloring& phi) {
    if (phi.size() != g.vertex_count())
        throw std::invalid_argument("is_proper: coloring must assign every vertex");
    return detail::proper_under(g, phi);
}

// Exhaustive count over all k^n colorings, iterated as an odometer so the
// state budget is explicit. Rejects when n*log2(k) exceeds ~30 bits.
inline BigInt count_proper_colorings(const Hypergraph& g, unsigned k) {
    const unsigned n = g.vertex_count();
    if (n == 0) return 1;
    if (k == 0) return 0;
    if (k > 1 && n * std::log2(static_cast<double>(k)) > 30.0)
        throw BudgetError("count_proper_colorings: more than 2^30 colorings");

    std::vector<unsigned> color(n, 0);
    BigInt count = 0;
    while (true) {
        if (detail::proper_under(g, color)) ++count;
        unsigned i = 0;
        while (i < n && ++color[i] == k) {
            color[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

// (-1)^{|A|} x^{k((V,A))}, the summand of the subset expansion.
inline Polynomial subset_expansion_term(const Hypergraph& g, EdgeSubset a) {
    auto t = Polynomial::monomial(spanning_component_count(g, a));
    return a.count() % 2 == 0 ? t : -t;
}

inline Polynomial chromatic_subset_expansion(const Hypergraph& g,
                                             unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "chromatic_subset_expansion");
    const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
    std::vector<BigInt> acc(g.vertex_count() + 1, BigInt{0});
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        EdgeSubset a{mask};
        const unsigned k = spanning_component_count(g, a);
        if (a.count() % 2 == 0)
            ++acc[k];
        else
            --acc[k];
    }
    return Polynomial(std::move(acc));
}

// Subset expansion restricted to subsets that include no broken cycle.
// Agrees with chromatic_subset_expansion for every edge order.
inline Polynomial chromatic_broken_cycle(const Hypergraph& g, const EdgeOrder& order,
                                         unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "chromatic_broken_cycle");
    const BrokenCycleAnalysis bc(g, order, cap);

    bool graph_input = true;
    for (const auto& e : g.edges())
        if (e.size() > 2) {
            graph_input = false;
            break;
        }

    const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
    std::vector<BigInt> acc(g.vertex_count() + 1, BigInt{0});
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        EdgeSubset a{mask};
        if (bc.contains_broken_cycle(a)) continue;
        const unsigned k = spanning_component_count(g, a);
        // Graph specialization: admissible subsets of a graph are forests.
        assert(!graph_input || k == g.vertex_count() - a.count());
        (void)graph_input;
        if (a.count() % 2 == 0)
            ++acc[k];
        else
            --acc[k];
    }
    return Polynomial(std::move(acc));
}

struct PruningStats {
    std::uint64_t total_subsets = 0;
    std::uint64_t admissible_subsets = 0;
    double pruned_fraction = 0.0;
};

// How much of the full 2^|E| summation the broken-cycle restriction skips.
inline PruningStats pruning_stats(const Hypergraph& g, const EdgeOrder& order,
                                  unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "pruning_stats");
    const BrokenCycleAnalysis bc(g, order, cap);
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    std::uint64_t admissible = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (!bc.contains_broken_cycle(EdgeSubset{mask})) ++admissible;
    return {total, admissible,
            1.0 - static_cast<double>(admissible) / static_cast<double>(total)};
}

}  // namespace hyperchrome
