#pragma once

// Seeded generators for random hypergraphs, simple graphs, and edge orders.
// All draws go through rejection sampling on the raw mt19937_64 stream, so a
// seed reproduces the same structures on every platform.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hypergraph.hpp"

namespace hyperchrome {

inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: empty range");
    const std::uint64_t bound = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= bound);
    return draw % n;
}

// Draws a uniform s-subset of 0..n-1 by partial Fisher-Yates.
inline std::vector<VertexId> sample_vertices(std::mt19937_64& rng, unsigned n, unsigned s) {
    std::vector<VertexId> pool(n);
    for (unsigned i = 0; i < n; ++i) pool[i] = i;
    for (unsigned i = 0; i < s; ++i)
        std::swap(pool[i], pool[i + next_below(rng, n - i)]);
    pool.resize(s);
    return pool;
}

// m edges over n vertices; each edge is a uniform nonempty subset of size
// 1..min(n, 4). Small arity keeps component structure varied at desk scale.
inline Hypergraph random_hypergraph(unsigned n, unsigned m, std::uint64_t seed) {
    if (n == 0 && m > 0)
        throw std::invalid_argument("random_hypergraph: edges need vertices");
    std::mt19937_64 rng(seed);
    const unsigned max_arity = n < 4 ? n : 4;
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(m);
    for (unsigned e = 0; e < m; ++e) {
        const unsigned s = 1 + static_cast<unsigned>(next_below(rng, max_arity));
        edges.push_back(sample_vertices(rng, n, s));
    }
    return Hypergraph(n, std::move(edges));
}

// m distinct unordered pairs over n vertices, no loops or parallel edges.
inline Hypergraph random_simple_graph(unsigned n, unsigned m, std::uint64_t seed) {
    std::vector<std::vector<VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    if (m > pairs.size())
        throw std::invalid_argument("random_simple_graph: more edges than vertex pairs");
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < m; ++i)
        std::swap(pairs[i], pairs[i + next_below(rng, pairs.size() - i)]);
    pairs.resize(m);
    return Hypergraph(n, std::move(pairs));
}

inline EdgeOrder random_order(unsigned edge_count, std::mt19937_64& rng) {
    std::vector<EdgeId> seq(edge_count);
    for (unsigned i = 0; i < edge_count; ++i) seq[i] = i;
    for (unsigned i = 0; i + 1 < edge_count; ++i)
        std::swap(seq[i], seq[i + next_below(rng, edge_count - i)]);
    return EdgeOrder::from_sequence(seq);
}

}  // namespace hyperchrome
