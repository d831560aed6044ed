// hyperchrome: exact chromatic polynomials of hypergraphs, computed three
// ways (coloring count, full subset expansion, broken-cycle pruning), plus
// delta-cycle listings, identity verification, and pruning benchmarks.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 input/budget error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hyperchrome/hyperchrome.hpp>

namespace {

using namespace hyperchrome;
using nlohmann::json;

class VerifyFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned edge_cap_from_env() {
    const char* env = std::getenv("HYPERCHROME_EDGE_CAP");
    if (env == nullptr) return kDefaultEdgeCap;
    const std::string s(env);
    unsigned long value = 0;
    try {
        std::size_t pos = 0;
        value = std::stoul(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("HYPERCHROME_EDGE_CAP must be an integer, got '" + s +
                                    "'");
    }
    if (value < 1 || value > kHardEdgeCap)
        throw std::invalid_argument("HYPERCHROME_EDGE_CAP must be in 1.." +
                                    std::to_string(kHardEdgeCap));
    return static_cast<unsigned>(value);
}

std::vector<unsigned> parse_csv_ids(const std::string& csv, unsigned edge_count,
                                    const char* what) {
    std::vector<unsigned> out;
    if (csv.empty()) return out;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(tok, &pos);
            if (pos != tok.size() || v >= edge_count) throw std::invalid_argument(tok);
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad edge index '" + tok +
                                        "' (edges are 0.." +
                                        std::to_string(edge_count ? edge_count - 1 : 0) +
                                        ")");
        }
    }
    return out;
}

EdgeSubset parse_subset(const std::string& csv, unsigned edge_count) {
    EdgeSubset a;
    for (unsigned id : parse_csv_ids(csv, edge_count, "--subset")) a = a.with(id);
    return a;
}

EdgeOrder parse_order(const std::string& csv, unsigned edge_count) {
    if (csv.empty()) return EdgeOrder::listing(edge_count);
    auto seq = parse_csv_ids(csv, edge_count, "--order");
    if (seq.size() != edge_count)
        throw std::invalid_argument("--order must list every edge index exactly once");
    std::vector<EdgeId> ids(seq.begin(), seq.end());
    return EdgeOrder::from_sequence(ids);
}

std::string id_set_text(EdgeSubset a) {
    std::string out = "{";
    bool first = true;
    a.for_each([&](EdgeId e) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    });
    return out + "}";
}

std::string edge_text(const Hypergraph& g, EdgeId e) {
    std::string out = "{";
    const auto& vs = g.edge(e);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += g.vertex_label(vs[i]);
    }
    return out + "}";
}

// "edges {0,2,3} = {{1,3},{1,4,5},{3,4,5}}"
std::string cycle_line(const Hypergraph& g, EdgeSubset a) {
    std::string out = "edges " + id_set_text(a) + " = {";
    bool first = true;
    a.for_each([&](EdgeId e) {
        if (!first) out += ",";
        out += edge_text(g, e);
        first = false;
    });
    return out + "}";
}

std::string order_text(const EdgeOrder& order) {
    std::string out;
    for (unsigned r = 1; r <= order.size(); ++r) {
        if (r > 1) out += ",";
        out += std::to_string(order.edge_at_rank(r));
    }
    return out;
}

int run_components(const std::string& path, bool subset_given,
                   const std::string& subset_csv) {
    auto g = load_hypergraph(path);
    EdgeSubset a = subset_given ? parse_subset(subset_csv, g.edge_count())
                                : EdgeSubset::all(g.edge_count());
    std::cout << spanning_component_count(g, a) << "\n";
    return 0;
}

int run_delta_cycles(const std::string& path, unsigned cap) {
    auto g = load_hypergraph(path);
    for (EdgeSubset c : enumerate_delta_cycles(g, cap))
        std::cout << cycle_line(g, c) << "\n";
    return 0;
}

int run_broken_cycles(const std::string& path, const std::string& order_csv,
                      unsigned cap) {
    auto g = load_hypergraph(path);
    auto order = parse_order(order_csv, g.edge_count());
    for (EdgeSubset b : broken_cycles(g, order, cap))
        std::cout << cycle_line(g, b) << "\n";
    return 0;
}

void print_polynomial(const Polynomial& p, bool as_json) {
    if (as_json) {
        std::cout << json{{"coefficients", p.to_decimal_strings()}}.dump() << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
}

int run_chromatic(const std::string& path, const std::string& method,
                  const std::string& order_csv, bool as_json, unsigned max_k,
                  bool max_k_given, unsigned cap) {
    auto g = load_hypergraph(path);
    if (method == "oracle") {
        const unsigned top = max_k_given ? max_k : g.vertex_count();
        std::vector<std::string> counts;
        for (unsigned k = 0; k <= top; ++k)
            counts.push_back(count_proper_colorings(g, k).str());
        if (as_json) {
            std::cout << json{{"counts", counts}}.dump() << "\n";
        } else {
            for (unsigned k = 0; k <= top; ++k)
                std::cout << k << " " << counts[k] << "\n";
        }
        return 0;
    }
    Polynomial p;
    if (method == "subset") {
        p = chromatic_subset_expansion(g, cap);
    } else if (method == "broken-cycle") {
        p = chromatic_broken_cycle(g, parse_order(order_csv, g.edge_count()), cap);
    } else {
        throw std::invalid_argument("--method must be oracle, subset, or broken-cycle");
    }
    print_polynomial(p, as_json);
    return 0;
}

int run_verify(const std::string& path, unsigned trials, std::uint64_t seed,
               unsigned cap) {
    auto g = load_hypergraph(path);
    const unsigned n = g.vertex_count();
    const unsigned m = g.edge_count();
    std::cout << "input " << content_digest(g) << ": " << n << " vertices, " << m
              << " edges\n";

    const auto full = chromatic_subset_expansion(g, cap);

    unsigned oracle_top = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigInt counted;
        try {
            counted = count_proper_colorings(g, k);
        } catch (const BudgetError&) {
            break;
        }
        if (counted != full.evaluate(k))
            throw VerifyFailure("oracle mismatch at k=" + std::to_string(k) +
                                ": polynomial gives " + full.evaluate(k).str() +
                                ", exhaustive count gives " + counted.str());
        oracle_top = k;
    }
    std::cout << "oracle agreement for k=0.." << oracle_top << ": ok\n";

    std::mt19937_64 rng(seed);
    std::vector<EdgeOrder> orders;
    if (m <= 5) {
        std::vector<EdgeId> seq(m);
        for (unsigned i = 0; i < m; ++i) seq[i] = i;
        do {
            orders.push_back(EdgeOrder::from_sequence(seq));
        } while (std::next_permutation(seq.begin(), seq.end()));
    } else {
        for (int i = 0; i < 20; ++i) orders.push_back(random_order(m, rng));
    }
    for (const auto& order : orders) {
        if (chromatic_broken_cycle(g, order, cap) != full)
            throw VerifyFailure("broken-cycle pruning disagrees with subset expansion "
                                "under order " +
                                order_text(order));
    }
    std::cout << "subset expansion vs broken-cycle pruning: ok (" << orders.size()
              << " orders)\n";

    if (n == 0) {
        std::cout << "generalized identity: skipped (no vertices)\n";
    } else {
        IntegerGroup zi;
        PolynomialGroup zp;
        for (unsigned t = 0; t < trials; ++t) {
            auto order = random_order(m, rng);
            auto all = broken_cycles(g, order, cap);
            std::vector<EdgeSubset> members;
            for (EdgeSubset b : all)
                if (next_below(rng, 2)) members.push_back(b);
            BrokenCycleSelection sel(g, order, members, cap);

            std::vector<BigInt> table(n);
            for (auto& v : table)
                v = static_cast<long long>(next_below(rng, 19)) - 9;
            auto fi = table_alternating_function(zi, table);
            auto ri = verify_generalized_theorem(g, order, zi, fi, sel, cap);

            std::vector<Polynomial> ptable(n);
            for (auto& p : ptable)
                for (unsigned e = 0; e <= 2; ++e)
                    p.add_term(e, static_cast<long long>(next_below(rng, 19)) - 9);
            auto fp = table_alternating_function(zp, ptable);
            auto rp = verify_generalized_theorem(g, order, zp, fp, sel, cap);

            if (!ri.passed() || !rp.passed()) {
                std::ostringstream msg;
                msg << "generalized identity failed at trial " << t << " (order "
                    << order_text(order) << ", selection of " << sel.members().size()
                    << " broken cycles)";
                if (!ri.hypothesis_ok || !rp.hypothesis_ok) msg << ": hypothesis violated";
                throw VerifyFailure(msg.str());
            }
        }
        std::cout << "generalized identity: " << trials << "/" << trials
                  << " trials ok (integer and polynomial groups)\n";
    }
    std::cout << "PASS\n";
    return 0;
}

int run_bench(const std::string& path, const std::vector<std::uint64_t>& random_spec,
              const std::string& order_csv, unsigned cap) {
    Hypergraph g = [&] {
        if (!random_spec.empty()) {
            return random_hypergraph(static_cast<unsigned>(random_spec[0]),
                                     static_cast<unsigned>(random_spec[1]),
                                     random_spec[2]);
        }
        if (path.empty())
            throw std::invalid_argument("bench needs a file or --random n m seed");
        return load_hypergraph(path);
    }();
    auto order = parse_order(order_csv, g.edge_count());

    const auto start = std::chrono::steady_clock::now();
    const auto p = chromatic_broken_cycle(g, order, cap);
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    const auto stats = pruning_stats(g, order, cap);
    json report{{"input_digest", content_digest(g)},
                {"method", "broken-cycle"},
                {"polynomial", p.to_decimal_strings()},
                {"term_counts",
                 {{"total", stats.total_subsets}, {"admissible", stats.admissible_subsets}}},
                {"elapsed_ms", elapsed_ms}};
    std::cout << report.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic polynomials of hypergraphs via delta-cycle pruning"};
    app.require_subcommand(1);

    std::string file;
    std::string subset_csv;
    std::string order_csv;
    std::string method = "subset";
    bool as_json = false;
    unsigned max_k = 0;
    unsigned trials = 100;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> random_spec;

    auto* components = app.add_subcommand("components", "count connected components");
    components->add_option("file", file, "hypergraph file")->required();
    auto* subset_opt = components->add_option(
        "--subset", subset_csv, "comma-separated edge ids (default: all edges)");

    auto* delta = app.add_subcommand("delta-cycles", "list all delta-cycles");
    delta->add_option("file", file, "hypergraph file")->required();

    auto* broken = app.add_subcommand("broken-cycles",
                                      "list broken cycles under an edge order");
    broken->add_option("file", file, "hypergraph file")->required();
    broken->add_option("--order", order_csv,
                       "edge ids from lowest to highest rank (default: listing order)");

    auto* chromatic = app.add_subcommand("chromatic", "compute the chromatic polynomial");
    chromatic->add_option("file", file, "hypergraph file")->required();
    chromatic->add_option("--method", method, "oracle, subset, or broken-cycle");
    chromatic->add_option("--order", order_csv, "edge order for broken-cycle");
    chromatic->add_flag("--json", as_json, "emit JSON");
    auto* max_k_opt =
        chromatic->add_option("--max-k", max_k, "largest k for the oracle table");

    auto* verify = app.add_subcommand("verify", "cross-check all methods and identities");
    verify->add_option("file", file, "hypergraph file")->required();
    verify->add_option("--trials", trials, "randomized identity trials");
    verify->add_option("--seed", seed, "random seed");

    auto* bench = app.add_subcommand("bench", "report broken-cycle pruning statistics");
    bench->add_option("file", file, "hypergraph file");
    bench->add_option("--random", random_spec, "generate: n-vertices m-edges seed")
        ->expected(3);
    bench->add_option("--order", order_csv, "edge order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const unsigned cap = edge_cap_from_env();
        if (app.got_subcommand(components))
            return run_components(file, subset_opt->count() > 0, subset_csv);
        if (app.got_subcommand(delta)) return run_delta_cycles(file, cap);
        if (app.got_subcommand(broken)) return run_broken_cycles(file, order_csv, cap);
        if (app.got_subcommand(chromatic))
            return run_chromatic(file, method, order_csv, as_json, max_k,
                                 max_k_opt->count() > 0, cap);
        if (app.got_subcommand(verify)) return run_verify(file, trials, seed, cap);
        if (app.got_subcommand(bench)) return run_bench(file, random_spec, order_csv, cap);
    } catch (const VerifyFailure& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
