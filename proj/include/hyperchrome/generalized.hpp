#pragma once

// The pruned-summation identity for arbitrary group-valued functions: any f
// into an additive abelian group that flips sign whenever adding an edge
// preserves the component count can be summed over broken-cycle-free subsets
// only, for any subset of the broken cycles.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycles.hpp"
#include "hypergraph.hpp"
#include "polynomial.hpp"

namespace hyperchrome {

template <typename G>
concept AdditiveAbelianGroup = requires(const G& g, const typename G::Element& a,
                                        const typename G::Element& b) {
    { g.zero() } -> std::convertible_to<typename G::Element>;
    { g.add(a, b) } -> std::convertible_to<typename G::Element>;
    { g.negate(a) } -> std::convertible_to<typename G::Element>;
    { g.equals(a, b) } -> std::convertible_to<bool>;
};

struct IntegerGroup {
    using Element = BigInt;
    Element zero() const { return 0; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element negate(const Element& a) const { return -a; }
    bool equals(const Element& a, const Element& b) const { return a == b; }
};

struct PolynomialGroup {
    using Element = Polynomial;
    Element zero() const { return {}; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element negate(const Element& a) const { return -a; }
    bool equals(const Element& a, const Element& b) const { return a == b; }
};

template <typename F, typename G>
concept GroupValuedFunction =
    AdditiveAbelianGroup<G> &&
    requires(F f, const Hypergraph& h, EdgeSubset a) {
        { f(h, a) } -> std::convertible_to<typename G::Element>;
    };

struct AlternatingViolation {
    EdgeSubset subset;
    EdgeId edge;
};

// Exhaustively checks f(G,A) = -f(G, A+e) for every subset A and edge e
// outside A whose addition preserves the spanning component count. Returns
// the first violating pair in (subset mask, edge id) iteration order.
template <AdditiveAbelianGroup G, GroupValuedFunction<G> F>
std::optional<AlternatingViolation> check_alternating_condition(
    const Hypergraph& g, const G& grp, F&& f, unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "check_alternating_condition");
    const unsigned m = g.edge_count();
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        EdgeSubset a{mask};
        const unsigned k = spanning_component_count(g, a);
        for (EdgeId e = 0; e < m; ++e) {
            if (a.contains(e)) continue;
            EdgeSubset extended = a.with(e);
            if (spanning_component_count(g, extended) != k) continue;
            if (!grp.equals(f(g, a), grp.negate(f(g, extended))))
                return AlternatingViolation{a, e};
        }
    }
    return std::nullopt;
}

template <AdditiveAbelianGroup G, GroupValuedFunction<G> F>
typename G::Element full_sum(const Hypergraph& g, const G& grp, F&& f,
                             unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "full_sum");
    const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
    typename G::Element acc = grp.zero();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        acc = grp.add(acc, f(g, EdgeSubset{mask}));
    return acc;
}

// A subset of the broken cycles of (G, <), validated at construction.
class BrokenCycleSelection {
public:
    BrokenCycleSelection() = default;

    BrokenCycleSelection(const Hypergraph& g, const EdgeOrder& order,
                         std::vector<EdgeSubset> members, unsigned cap = kDefaultEdgeCap)
        : members_(std::move(members)) {
        const auto all = broken_cycles(g, order, cap);
        for (EdgeSubset b : members_)
            if (std::find(all.begin(), all.end(), b) == all.end())
                throw std::invalid_argument(
                    "selection member is not a broken cycle under this order");
        std::sort(members_.begin(), members_.end(), [](EdgeSubset x, EdgeSubset y) {
            return x.count() != y.count() ? x.count() < y.count() : x.bits < y.bits;
        });
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    static BrokenCycleSelection all(const Hypergraph& g, const EdgeOrder& order,
                                    unsigned cap = kDefaultEdgeCap) {
        return BrokenCycleSelection(g, order, broken_cycles(g, order, cap), cap);
    }

    const std::vector<EdgeSubset>& members() const { return members_; }

private:
    std::vector<EdgeSubset> members_;
};

namespace detail {

template <typename Element, typename G, typename F>
std::pair<Element, std::uint64_t> pruned_fold(const Hypergraph& g, const G& grp, F&& f,
                                              const std::vector<EdgeSubset>& selection) {
    const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
    Element acc = grp.zero();
    std::uint64_t terms = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        EdgeSubset a{mask};
        bool pruned = false;
        for (EdgeSubset b : selection)
            if (b.subset_of(a)) {
                pruned = true;
                break;
            }
        if (pruned) continue;
        acc = grp.add(acc, f(g, a));
        ++terms;
    }
    return {std::move(acc), terms};
}

}  // namespace detail

// Sum of f over subsets including no member of the selection.
template <AdditiveAbelianGroup G, GroupValuedFunction<G> F>
typename G::Element pruned_sum(const Hypergraph& g, const G& grp, F&& f,
                               const BrokenCycleSelection& selection,
                               unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "pruned_sum");
    for (EdgeSubset b : selection.members())
        if (!b.subset_of(EdgeSubset::all(g.edge_count())))
            throw std::invalid_argument("selection references edges out of range");
    return detail::pruned_fold<typename G::Element>(g, grp, f, selection.members()).first;
}

template <typename Element>
struct GeneralizedReport {
    bool hypothesis_ok = false;
    std::optional<AlternatingViolation> violation;
    Element full_value;
    Element pruned_value;
    std::uint64_t total_terms = 0;
    std::uint64_t admissible_terms = 0;
    bool identity_holds = false;

    bool passed() const { return hypothesis_ok && identity_holds; }
};

// Checks the hypothesis, then compares the full and pruned sums exactly.
template <AdditiveAbelianGroup G, GroupValuedFunction<G> F>
GeneralizedReport<typename G::Element> verify_generalized_theorem(
    const Hypergraph& g, const EdgeOrder& order, const G& grp, F&& f,
    const BrokenCycleSelection& selection, unsigned cap = kDefaultEdgeCap) {
    detail::require_subset_cap(g.edge_count(), cap, "verify_generalized_theorem");
    const auto all = broken_cycles(g, order, cap);
    for (EdgeSubset b : selection.members())
        if (std::find(all.begin(), all.end(), b) == all.end())
            throw std::invalid_argument(
                "selection member is not a broken cycle under this order");

    GeneralizedReport<typename G::Element> report;
    report.violation = check_alternating_condition(g, grp, f, cap);
    report.hypothesis_ok = !report.violation.has_value();
    report.full_value = full_sum(g, grp, f, cap);
    auto [pruned, terms] =
        detail::pruned_fold<typename G::Element>(g, grp, f, selection.members());
    report.pruned_value = std::move(pruned);
    report.total_terms = std::uint64_t{1} << g.edge_count();
    report.admissible_terms = terms;
    report.identity_holds = grp.equals(report.full_value, report.pruned_value);
    return report;
}

// f(G, A) = (-1)^{|A|} * value_by_component_count[k((V,A)) - 1]. Satisfies the
// alternating condition for any table, because the k argument is unchanged
// while the sign flips. Table index k-1 requires a nonempty vertex set.
template <AdditiveAbelianGroup G>
auto table_alternating_function(G grp, std::vector<typename G::Element> value_by_component_count) {
    return [grp = std::move(grp), table = std::move(value_by_component_count)](
               const Hypergraph& g, EdgeSubset a) -> typename G::Element {
        const unsigned k = spanning_component_count(g, a);
        const auto& v = table.at(k - 1);
        return a.count() % 2 == 0 ? v : grp.negate(v);
    };
}

}  // namespace hyperchrome
