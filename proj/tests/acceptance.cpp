// Acceptance suite: one check per release criterion, one PASS/FAIL line each,
// with wall-clock budgets enforced. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <hyperchrome/hyperchrome.hpp>

#include "support/cli_runner.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/pairing.hpp"

using namespace hyperchrome;

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::runtime_error(message);
}

// Shared corpus: 200 seeded hypergraphs with |V| <= 6 and |E| <= 6.
std::vector<Hypergraph> corpus() {
    std::vector<Hypergraph> graphs;
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 200; ++i) {
        const unsigned n = 1 + static_cast<unsigned>(next_below(rng, 6));
        const unsigned m = static_cast<unsigned>(next_below(rng, 7));
        graphs.push_back(random_hypergraph(n, m, rng()));
    }
    return graphs;
}

std::vector<EdgeOrder> all_orders(unsigned m) {
    std::vector<EdgeOrder> orders;
    std::vector<EdgeId> seq(m);
    for (unsigned i = 0; i < m; ++i) seq[i] = i;
    do {
        orders.push_back(EdgeOrder::from_sequence(seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return orders;
}

void paper_example_fidelity() {
    auto g = fixtures::five_vertex();
    require(is_delta_cyclic(g), "fixture must be delta-cyclic");
    require(!is_delta_cyclic_witness(g, EdgeSubset::all(4)),
            "the full edge set must not be a witness");
    require(!is_removable(g, EdgeSubset::all(4), 1),
            "deleting {1,2,3} must isolate vertex 2");
    auto cycles = enumerate_delta_cycles(g);
    require(cycles.size() == 1 && cycles[0] == EdgeSubset::of({0, 2, 3}),
            "the only delta-cycle must be edges {0,2,3}");
}

void oracle_equivalence() {
    for (const auto& g : corpus()) {
        auto p = chromatic_subset_expansion(g);
        for (unsigned k = 0; k <= g.vertex_count(); ++k)
            require(p.evaluate(k) == count_proper_colorings(g, k),
                    "subset expansion disagrees with the coloring count at k=" +
                        std::to_string(k));
    }
}

void broken_cycle_identity() {
    std::mt19937_64 rng(1001);
    for (const auto& g : corpus()) {
        const unsigned m = g.edge_count();
        auto full = chromatic_subset_expansion(g);
        if (m <= 5) {
            for (const auto& order : all_orders(m))
                require(chromatic_broken_cycle(g, order) == full,
                        "pruned polynomial differs under some order");
        } else {
            for (int i = 0; i < 20; ++i)
                require(chromatic_broken_cycle(g, random_order(m, rng)) == full,
                        "pruned polynomial differs under a random order");
        }
    }
}

void generalized_identity() {
    std::mt19937_64 rng(2002);
    IntegerGroup zi;
    PolynomialGroup zp;
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(next_below(rng, 6));
        const unsigned m = static_cast<unsigned>(next_below(rng, 7));
        auto g = random_hypergraph(n, m, rng());
        auto order = random_order(m, rng);
        std::vector<EdgeSubset> members;
        for (EdgeSubset b : broken_cycles(g, order))
            if (next_below(rng, 2)) members.push_back(b);
        BrokenCycleSelection sel(g, order, members);

        std::vector<BigInt> table(n);
        for (auto& v : table) v = static_cast<long long>(next_below(rng, 19)) - 9;
        auto fi = table_alternating_function(zi, table);
        require(!check_alternating_condition(g, zi, fi),
                "table function must satisfy the alternating condition");
        auto ri = verify_generalized_theorem(g, order, zi, fi, sel);
        require(ri.passed(), "integer-group identity failed at trial " +
                                 std::to_string(trial));

        std::vector<Polynomial> ptable(n);
        for (auto& p : ptable)
            for (unsigned e = 0; e <= 2; ++e)
                p.add_term(e, static_cast<long long>(next_below(rng, 19)) - 9);
        auto fp = table_alternating_function(zp, ptable);
        auto rp = verify_generalized_theorem(g, order, zp, fp, sel);
        require(rp.passed(), "polynomial-group identity failed at trial " +
                                 std::to_string(trial));
    }
}

void proof_structure_pairing() {
    std::mt19937_64 rng(3003);
    for (const auto& g : corpus()) {
        const unsigned m = g.edge_count();
        if (m > 5) continue;
        std::vector<EdgeOrder> orders{EdgeOrder::listing(m), random_order(m, rng),
                                      random_order(m, rng)};
        for (const auto& order : orders) {
            BrokenCycleAnalysis bc(g, order);

            const std::uint64_t limit = std::uint64_t{1} << m;
            for (unsigned i = 1; i <= m; ++i) {
                const EdgeId ei = order.edge_at_rank(i);
                for (std::uint64_t mask = 0; mask < limit; ++mask) {
                    EdgeSubset a{mask};
                    if (a.contains(ei)) continue;
                    require((bc.block_index(a) == i) ==
                                (bc.block_index(a.with(ei)) == i),
                            "block-index pairing broken at rank " + std::to_string(i));
                }
            }

            const auto& broken = bc.broken();
            if (broken.size() <= 6) {
                const std::uint64_t sel_limit = std::uint64_t{1} << broken.size();
                for (std::uint64_t sel_mask = 1; sel_mask < sel_limit; ++sel_mask) {
                    std::vector<EdgeSubset> sel;
                    for (std::size_t b = 0; b < broken.size(); ++b)
                        if ((sel_mask >> b) & 1) sel.push_back(broken[b]);
                    require(support::involution_holds(g, bc, sel),
                            "max-closing-edge involution broken");
                }
            } else {
                for (int round = 0; round < 20; ++round) {
                    std::vector<EdgeSubset> sel;
                    for (EdgeSubset b : broken)
                        if (next_below(rng, 2)) sel.push_back(b);
                    require(support::involution_holds(g, bc, sel),
                            "max-closing-edge involution broken");
                }
            }
        }
    }
}

void graph_specialization() {
    std::mt19937_64 rng(4004);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(next_below(rng, 6));
        const unsigned max_m = n * (n - 1) / 2;
        const unsigned m =
            static_cast<unsigned>(next_below(rng, std::min(max_m, 10u) + 1));
        auto g = random_simple_graph(n, m, rng());

        require(enumerate_delta_cycles(g) == oracle::simple_cycle_edge_sets(g),
                "delta-cycles of a simple graph must be its simple cycles");

        auto order = random_order(m, rng);
        BrokenCycleAnalysis bc(g, order);
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            EdgeSubset a{mask};
            if (bc.contains_broken_cycle(a)) continue;
            require(spanning_component_count(g, a) == n - a.count(),
                    "admissible graph subset with k != |V| - |A|");
        }
    }

    // hypergraph counterexample: one 3-vertex edge, A = {e} has k = 1, not 2
    auto h = fixtures::single_triple_edge();
    require(spanning_component_count(h, EdgeSubset::of({0})) == 1 &&
                h.vertex_count() - 1 == 2,
            "hyperedge counterexample must violate the graph simplification");
}

void degenerate_cases() {
    for (const Hypergraph& g :
         {Hypergraph(1, {{0}}), Hypergraph(3, {{0}, {1, 2}}),
          Hypergraph(4, {{0, 2}, {1}, {2, 3}, {0, 1, 2}})}) {
        require(chromatic_subset_expansion(g).is_zero(),
                "singleton edge: subset expansion must vanish");
        require(chromatic_broken_cycle(g, EdgeOrder::listing(g.edge_count())).is_zero(),
                "singleton edge: pruned expansion must vanish");
        for (unsigned k = 0; k <= g.vertex_count(); ++k)
            require(count_proper_colorings(g, k) == 0,
                    "singleton edge: no coloring is proper");
    }

    auto pp = enumerate_delta_cycles(fixtures::parallel_pair());
    require(pp.size() == 1 && pp[0] == EdgeSubset::all(2),
            "a parallel pair must form a delta-cycle");
    auto loop = enumerate_delta_cycles(fixtures::single_loop());
    require(loop.size() == 1 && loop[0] == EdgeSubset::of({0}),
            "a loop must form a delta-cycle");
}

void pruning_benchmark_sanity() {
    auto triangle = support::write_file("acceptance_triangle.hg",
                                        "vertices: 3\n1 2\n1 3\n2 3\n");
    auto fixture = support::write_file("acceptance_fixture.hg",
                                       "vertices: 1 2 3 4 5\n1 3\n1 2 3\n1 4 5\n3 4 5\n");

    auto tri = support::run_cli("bench '" + triangle + "'");
    require(tri.exit_code == 0, "bench failed on the triangle");
    auto jt = nlohmann::json::parse(tri.out);
    require(jt["term_counts"]["total"] == 8 && jt["term_counts"]["admissible"] == 6,
            "triangle bench must report 6 admissible of 8");

    auto fix = support::run_cli("bench '" + fixture + "'");
    require(fix.exit_code == 0, "bench failed on the five-vertex fixture");
    auto jf = nlohmann::json::parse(fix.out);
    require(jf["term_counts"]["total"] == 16 && jf["term_counts"]["admissible"] == 12,
            "fixture bench must report 12 admissible of 16");
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "paper example fidelity", 1.0, paper_example_fidelity},
        {2, "subset expansion matches the coloring oracle", 60.0, oracle_equivalence},
        {3, "broken-cycle pruning identity over edge orders", 120.0,
         broken_cycle_identity},
        {4, "generalized identity in both groups", 60.0, generalized_identity},
        {5, "proof-structure pairing and involution", 30.0, proof_structure_pairing},
        {6, "graph specialization", 30.0, graph_specialization},
        {7, "degenerate cases", 5.0, degenerate_cases},
        {8, "pruning benchmark sanity", 1.0, pruning_benchmark_sanity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (error.empty() && elapsed > c.budget_seconds)
            error = "exceeded time budget of " + std::to_string(c.budget_seconds) + "s";
        std::ostringstream line;
        line << (error.empty() ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
             << c.name << " (" << std::fixed << std::setprecision(2) << elapsed << "s < "
             << std::setprecision(0) << c.budget_seconds << "s)";
        if (!error.empty()) line << " -- " << error;
        std::cout << line.str() << "\n";
        if (!error.empty()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
