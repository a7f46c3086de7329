#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideals.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

inline constexpr std::size_t kDefaultCensusCap = 12;

/// Number of cycles v_{i1} -> v_{i2} -> ... -> v_{im} -> v_{i1}: the product of
/// Adj(i_j, i_{j+1}) around the cyclic order. A single index reads the diagonal.
inline Integer cycles_on_order(const ExactMatrix& adj, const std::vector<VertexIndex>& order) {
    if (!adj.is_square()) throw Error(ErrorCode::NonSquare, "adjacency matrix must be square");
    if (order.empty()) throw Error(ErrorCode::EmptySubset, "cyclic order must be non-empty");
    std::vector<char> seen(adj.rows(), 0);
    for (auto v : order) {
        if (v >= adj.rows()) throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range");
        if (seen[v]) throw Error(ErrorCode::DuplicateIndex, "cyclic order repeats a vertex");
        seen[v] = 1;
    }
    Integer product = 1;
    for (std::size_t k = 0; k < order.size() && product != 0; ++k)
        product *= adj(order[k], order[(k + 1) % order.size()]);
    return product;
}

inline Integer cycles_on_order(const Graph& g, const std::vector<VertexIndex>& order) {
    return cycles_on_order(adjacency(g), order);
}

/// Calls `visit` with each cyclic arrangement of `subset` that starts at its
/// smallest element; (m - 1)! arrangements in lexicographic order.
inline void for_each_cyclic_arrangement(const VertexSet& subset,
                                        const std::function<void(const std::vector<VertexIndex>&)>& visit) {
    if (subset.is_empty()) throw Error(ErrorCode::EmptySubset, "subset must be non-empty");
    std::vector<VertexIndex> order = subset.members();
    do {
        visit(order);
    } while (std::next_permutation(order.begin() + 1, order.end()));
}

/// Sum over the cyclic permutations moving exactly the indices of `subset`.
inline Integer cycles_on_subset(const ExactMatrix& adj, const VertexSet& subset) {
    if (subset.is_empty()) throw Error(ErrorCode::EmptySubset, "subset must be non-empty");
    if (subset.members().back() >= adj.rows()) throw Error(ErrorCode::IndexOutOfRange, "subset out of range");
    const auto& members = subset.members();
    const auto m = members.size();
    // depth-first over arrangements; a zero factor zeroes the whole branch
    Integer total = 0;
    std::vector<char> used(m, 0);
    std::function<void(std::size_t, std::size_t, const Integer&)> extend = [&](std::size_t placed, std::size_t last,
                                                                              const Integer& product) {
        if (placed == m) {
            total += product * adj(members[last], members[0]);
            return;
        }
        for (std::size_t k = 1; k < m; ++k) {
            if (used[k]) continue;
            const auto& entry = adj(members[last], members[k]);
            if (entry == 0) continue;
            used[k] = 1;
            extend(placed + 1, k, product * entry);
            used[k] = 0;
        }
    };
    extend(1, 0, Integer(1));
    return total;
}

inline Integer cycles_on_subset(const Graph& g, const VertexSet& subset) {
    check_vertex_set(g, subset);
    return cycles_on_subset(adjacency(g), subset);
}

struct CensusRow {
    std::vector<VertexIndex> order;
    Integer product;
};

/// Per-subset totals for every non-empty subset (ordered by size, then
/// lexicographically) and the grand total. `rows` lists every cyclic
/// arrangement with its product when requested.
struct CycleCensus {
    std::vector<std::pair<VertexSet, Integer>> per_subset;
    std::vector<CensusRow> rows;
    Integer total = 0;
};

inline void check_census_cap(const Graph& g, std::size_t cap) {
    if (g.vertex_count() > cap)
        throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) +
                                             " vertices exceed the cycle census cap of " + std::to_string(cap));
    if (g.vertex_count() > 63) throw Error(ErrorCode::TooLarge, "cycle census supports at most 63 vertices");
}

inline std::vector<VertexSet> nonempty_subsets(std::size_t n) {
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) out.push_back(VertexSet::from_mask(n, mask));
    std::sort(out.begin(), out.end(), detail::size_then_lex);
    return out;
}

inline CycleCensus total_cycles(const Graph& g, std::size_t cap = kDefaultCensusCap, bool with_rows = false) {
    check_census_cap(g, cap);
    const auto adj = adjacency(g);
    CycleCensus census;
    for (const auto& subset : nonempty_subsets(g.vertex_count())) {
        auto count = cycles_on_subset(adj, subset);
        census.total += count;
        if (with_rows)
            for_each_cyclic_arrangement(subset, [&](const std::vector<VertexIndex>& order) {
                census.rows.push_back({order, cycles_on_order(adj, order)});
            });
        census.per_subset.emplace_back(subset, std::move(count));
    }
    return census;
}

/// The equivalent characterisations of acyclicity, each evaluated on its own.
struct AcyclicityReport {
    bool acyclic = false;              // (1) cycle formula total is zero
    bool finite_dimensional = false;   // (2) reported as equal to (1)
    bool disjoint_cycles = false;      // no two distinct cycles share a vertex
    bool no_comet_quotient = false;    // E/H is never a comet for hereditary saturated H
    bool condition3 = false;           // disjoint_cycles && no_comet_quotient
    bool matrix_condition = false;     // (4) every cyclic product has a zero factor
    bool conditions_agree = false;
};

/// True when every cyclic permutation sigma has some i with Adj(i, sigma(i)) = 0.
/// Searches arrangements depth-first and stops at the first all-nonzero one.
inline bool every_cyclic_product_vanishes(const ExactMatrix& adj) {
    const auto n = adj.rows();
    std::vector<char> used(n, 0);
    std::function<bool(VertexIndex, VertexIndex)> nonzero_closing = [&](VertexIndex start, VertexIndex last) {
        if (adj(last, start) != 0) return true;
        for (VertexIndex next = start + 1; next < n; ++next) {
            if (used[next] || adj(last, next) == 0) continue;
            used[next] = 1;
            const bool found = nonzero_closing(start, next);
            used[next] = 0;
            if (found) return true;
        }
        return false;
    };
    for (VertexIndex start = 0; start < n; ++start)
        if (nonzero_closing(start, start)) return false;
    return true;
}

inline AcyclicityReport is_acyclic_equiv(const Graph& g, std::size_t lattice_cap = kDefaultLatticeCap,
                                         std::size_t census_cap = kDefaultCensusCap) {
    check_census_cap(g, census_cap);
    AcyclicityReport r;
    r.acyclic = total_cycles(g, census_cap).total == 0;
    r.finite_dimensional = r.acyclic;
    r.matrix_condition = every_cyclic_product_vanishes(adjacency(g));

    const auto cycles = find_all_cycles(g);
    r.disjoint_cycles = true;
    for (std::size_t i = 0; i < cycles.size() && r.disjoint_cycles; ++i)
        for (std::size_t j = i + 1; j < cycles.size() && r.disjoint_cycles; ++j)
            for (auto v : cycles[i].vertices())
                if (cycles[j].visits(v)) {
                    r.disjoint_cycles = false;
                    break;
                }

    r.no_comet_quotient = true;
    for (const auto& h : enumerate_lattice_by_closure(g, lattice_cap).sets)
        if (is_comet(quotient_graph(g, h))) {
            r.no_comet_quotient = false;
            break;
        }
    r.condition3 = r.disjoint_cycles && r.no_comet_quotient;
    r.conditions_agree = r.acyclic == r.matrix_condition && r.acyclic == r.condition3;
    return r;
}

inline std::vector<CycleSeq> exitless_cycles(const Graph& g) {
    std::vector<CycleSeq> out;
    for (auto& c : find_all_cycles(g))
        if (!has_exit(g, c)) out.push_back(std::move(c));
    return out;
}

/// Leading principal D_m of `n` for m = 1 .. size-1 with their nilpotency
/// indices (nullopt when not nilpotent).
inline std::vector<std::optional<std::size_t>> leading_nilpotency(const ExactMatrix& n) {
    std::vector<std::optional<std::size_t>> out;
    for (std::size_t m = 1; m < n.rows(); ++m) out.push_back(is_nilpotent(block(n, 0, m, 0, m)));
    return out;
}

inline bool nilpotency_matches_size(const std::vector<std::optional<std::size_t>>& indices) {
    for (std::size_t k = 0; k < indices.size(); ++k)
        if (indices[k] != std::optional<std::size_t>(k + 1)) return false;
    return true;
}

/// Adj(E) with the cycle vertices first, in cycle order:
///     [ N  C ]        N: the cycle block, C: exits ("Out")
///     [ A  B ]        A: edges leading into the cycle ("In")
struct CirculantBlockForm {
    CycleSeq cycle;
    std::vector<std::size_t> permutation;
    ExactMatrix permuted;
    ExactMatrix n;
    ExactMatrix c;
    ExactMatrix a;
    ExactMatrix b;
    bool exitless = false;
    bool c_zero = false;
    bool n_circulant = false;
    std::vector<std::optional<std::size_t>> leading_nilpotency;

    std::size_t cycle_length() const { return cycle.length(); }
    const ExactMatrix& in_block() const { return a; }
    const ExactMatrix& out_block() const { return c; }
};

inline CycleSeq require_cycle(const Graph& g, const std::vector<EdgeIndex>& edges) {
    try {
        return CycleSeq(g, edges);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotACycle, e.what());
    }
}

inline CirculantBlockForm circulant_block_form(const Graph& g, const std::vector<EdgeIndex>& cycle_edges) {
    auto cycle = require_cycle(g, cycle_edges);
    const auto total = g.vertex_count();
    const auto len = cycle.length();
    std::vector<std::size_t> perm = cycle.vertices();
    for (VertexIndex v = 0; v < total; ++v)
        if (!cycle.visits(v)) perm.push_back(v);
    auto permuted = permute(adjacency(g), perm);
    CirculantBlockForm f{std::move(cycle), std::move(perm), std::move(permuted), {}, {}, {}, {}, false, false, false, {}};
    f.n = block(f.permuted, 0, len, 0, len);
    f.c = block(f.permuted, 0, len, len, total);
    f.a = block(f.permuted, len, total, 0, len);
    f.b = block(f.permuted, len, total, len, total);
    f.exitless = !has_exit(g, f.cycle);
    f.c_zero = f.c.is_zero();
    f.n_circulant = is_circulant_permutation(f.n);
    f.leading_nilpotency = lpa::leading_nilpotency(f.n);
    return f;
}

inline CirculantBlockForm circulant_block_form(const Graph& g, const CycleSeq& c) {
    return circulant_block_form(g, c.edges());
}

/// Nested witness for the minimal Z-order ideal generated by an exitless cycle:
///     Adj = [ I 0 ]    I = [ N  0  ]
///           [ A B ]        [ H1 H2 ]
/// where I is the block of the hereditary saturated closure of the cycle.
struct CyclicMinimalIdealForm {
    CycleSeq cycle;
    VertexSet ideal_set;
    std::vector<std::size_t> permutation;
    ExactMatrix permuted;
    ExactMatrix i_block;
    ExactMatrix n;
    ExactMatrix h1;
    ExactMatrix h2;
    ExactMatrix a;
    ExactMatrix b;
    bool outer_hereditary = false;
    bool outer_saturated = false;
    bool inner_hereditary = false;
    bool n_circulant = false;
    std::vector<std::optional<std::size_t>> leading_nilpotency;
};

inline std::optional<CyclicMinimalIdealForm> cyclic_minimal_ideal_form(const Graph& g,
                                                                       std::size_t cap = kDefaultLatticeCap) {
    if (g.vertex_count() > cap)
        throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) +
                                             " vertices exceed the lattice cap of " + std::to_string(cap));
    auto candidates = exitless_cycles(g);
    if (candidates.empty()) return std::nullopt;
    const auto& cycle = candidates.front();
    const auto total = g.vertex_count();
    const auto len = cycle.length();
    auto ideal = hereditary_saturated_closure(g, VertexSet(total, cycle.vertices()));
    std::vector<std::size_t> perm = cycle.vertices();
    for (auto v : ideal.members())
        if (!cycle.visits(v)) perm.push_back(v);
    for (VertexIndex v = 0; v < total; ++v)
        if (!ideal.contains(v)) perm.push_back(v);
    const auto split = ideal.size();
    auto permuted = permute(adjacency(g), perm);
    CyclicMinimalIdealForm f{cycle, ideal, std::move(perm), std::move(permuted), {}, {}, {}, {}, {}, {},
                             false, false, false, false, {}};
    f.i_block = block(f.permuted, 0, split, 0, split);
    f.n = block(f.permuted, 0, len, 0, len);
    f.h1 = block(f.permuted, len, split, 0, len);
    f.h2 = block(f.permuted, len, split, len, split);
    f.a = block(f.permuted, split, total, 0, split);
    f.b = block(f.permuted, split, total, split, total);
    f.outer_hereditary = submatrix_is_hereditary(f.permuted, split);
    f.outer_saturated = submatrix_is_saturated(f.permuted, split);
    f.inner_hereditary = submatrix_is_hereditary(f.i_block, len);
    f.n_circulant = is_circulant_permutation(f.n);
    f.leading_nilpotency = leading_nilpotency(f.n);
    return f;
}

}  // namespace lpa
