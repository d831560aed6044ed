#pragma once

// Shared fixtures. Vertex labels are 1-based, so the five-vertex fixture's
// edge {1,3} is the id set {0,2}.

#include <hyperchrome/hypergraph.hpp>

namespace fixtures {

using hyperchrome::Hypergraph;

// Five vertices 1..5; edges {1,3}, {1,2,3}, {1,4,5}, {3,4,5}. Its only
// delta-cycle is edges {0,2,3}; vertex 2 is covered solely by edge 1.
inline Hypergraph five_vertex() {
    return Hypergraph(5, {{0, 2}, {0, 1, 2}, {0, 3, 4}, {2, 3, 4}});
}

inline Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline Hypergraph edgeless(unsigned n) { return Hypergraph(n, {}); }

// One hyperedge {a,b,c} on three vertices.
inline Hypergraph single_triple_edge() { return Hypergraph(3, {{0, 1, 2}}); }

// Two parallel edges on the same vertex pair.
inline Hypergraph parallel_pair() { return Hypergraph(2, {{0, 1}, {0, 1}}); }

// A singleton edge ("loop" in the graphs-with-loops reading).
inline Hypergraph single_loop() { return Hypergraph(1, {{0}}); }

}  // namespace fixtures
