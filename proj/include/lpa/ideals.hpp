#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

inline constexpr std::size_t kDefaultLatticeCap = 20;

/// Every edge with source in `h` has its range in `h`.
inline bool is_hereditary(const Graph& g, const VertexSet& h) {
    check_vertex_set(g, h);
    for (const auto& e : g.edges())
        if (h.contains(e.src) && !h.contains(e.dst)) return false;
    return true;
}

/// Every regular (non-sink) vertex whose out-neighbours all lie in `h` is in `h`.
inline bool is_saturated(const Graph& g, const VertexSet& h) {
    check_vertex_set(g, h);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v) || is_sink(g, v)) continue;
        const auto& out = g.out_edges(v);
        if (std::all_of(out.begin(), out.end(), [&](EdgeIndex e) { return h.contains(g.edge(e).dst); }))
            return false;
    }
    return true;
}

inline bool is_hereditary_saturated(const Graph& g, const VertexSet& h) {
    return is_hereditary(g, h) && is_saturated(g, h);
}

/// Least hereditary saturated superset of `seed`: alternate forward closure
/// and saturation sweeps until nothing changes.
inline VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed) {
    check_vertex_set(g, seed);
    auto in = seed.flags();
    in.resize(g.vertex_count(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexIndex> stack;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v)
            if (in[v]) stack.push_back(v);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto e : g.out_edges(v)) {
                auto w = g.edge(e).dst;
                if (!in[w]) {
                    in[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            if (in[v] || is_sink(g, v)) continue;
            const auto& out = g.out_edges(v);
            if (std::all_of(out.begin(), out.end(), [&](EdgeIndex e) { return in[g.edge(e).dst] != 0; })) {
                in[v] = 1;
                changed = true;
            }
        }
    }
    return VertexSet::from_flags(in);
}

/// All hereditary saturated sets ordered by size and then lexicographically,
/// with covering pairs (lower index, upper index).
struct HereditarySaturatedLattice {
    std::vector<VertexSet> sets;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;

    std::optional<std::size_t> find(const VertexSet& h) const {
        auto it = std::find(sets.begin(), sets.end(), h);
        if (it == sets.end()) return std::nullopt;
        return static_cast<std::size_t>(it - sets.begin());
    }

    bool contains(const VertexSet& h) const { return find(h).has_value(); }
};

namespace detail {

inline bool size_then_lex(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline void check_cap(const Graph& g, std::size_t cap) {
    if (g.vertex_count() > cap)
        throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) +
                                             " vertices exceed the lattice cap of " + std::to_string(cap));
    if (g.vertex_count() > 63) throw Error(ErrorCode::TooLarge, "lattice enumeration supports at most 63 vertices");
}

/// The sets covering `h` in the lattice: the inclusion-minimal members of
/// {closure(h + v) : v not in h}. Every cover arises this way because the
/// closure of h + v lies inside any hereditary saturated set containing h and v.
inline std::vector<VertexSet> covers_of(const Graph& g, const VertexSet& h) {
    std::set<VertexSet> candidates;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (!h.contains(v)) candidates.insert(hereditary_saturated_closure(g, h.united(VertexSet(g.vertex_count(), {v}))));
    std::vector<VertexSet> minimal;
    for (const auto& c : candidates) {
        bool is_minimal = std::none_of(candidates.begin(), candidates.end(), [&](const VertexSet& d) {
            return !(d == c) && d.is_subset_of(c);
        });
        if (is_minimal) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), size_then_lex);
    return minimal;
}

inline HereditarySaturatedLattice with_hasse(const Graph& g, std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), size_then_lex);
    HereditarySaturatedLattice lattice{std::move(sets), {}};
    std::map<VertexSet, std::size_t> position;
    for (std::size_t i = 0; i < lattice.sets.size(); ++i) position.emplace(lattice.sets[i], i);
    for (std::size_t i = 0; i < lattice.sets.size(); ++i)
        for (const auto& c : covers_of(g, lattice.sets[i])) lattice.hasse.emplace_back(i, position.at(c));
    std::sort(lattice.hasse.begin(), lattice.hasse.end());
    return lattice;
}

}  // namespace detail

/// Exhaustive enumeration over all 2^n subsets with bit-mask predicates. This
/// is the reference route; `enumerate_lattice_by_closure` is the fast one.
inline HereditarySaturatedLattice enumerate_lattice(const Graph& g, std::size_t cap = kDefaultLatticeCap) {
    detail::check_cap(g, cap);
    const auto n = g.vertex_count();
    std::vector<std::uint64_t> out_mask(n, 0);
    for (const auto& e : g.edges()) out_mask[e.src] |= std::uint64_t{1} << e.dst;

    std::vector<VertexSet> sets;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            const bool inside = mask >> v & 1U;
            if (inside)
                ok = (out_mask[v] & ~mask) == 0;
            else if (out_mask[v] != 0)
                ok = (out_mask[v] & ~mask) != 0;
        }
        if (ok) sets.push_back(VertexSet::from_mask(n, mask));
    }
    return detail::with_hasse(g, std::move(sets));
}

/// Breadth-first generation from the empty set by closing under single-vertex
/// extensions. Produces the same lattice as `enumerate_lattice`.
inline HereditarySaturatedLattice enumerate_lattice_by_closure(const Graph& g, std::size_t cap = kDefaultLatticeCap) {
    detail::check_cap(g, cap);
    std::set<VertexSet> seen{hereditary_saturated_closure(g, VertexSet::empty(g.vertex_count()))};
    std::vector<VertexSet> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const auto& h : frontier)
            for (const auto& c : detail::covers_of(g, h))
                if (seen.insert(c).second) next.push_back(c);
        frontier = std::move(next);
    }
    return detail::with_hasse(g, {seen.begin(), seen.end()});
}

/// Lengths of the shortest and longest maximal chains from the bottom to the
/// top of the lattice, counted in covering steps.
inline std::pair<std::size_t, std::size_t> maximal_chain_length_range(const HereditarySaturatedLattice& lattice) {
    const auto count = lattice.sets.size();
    if (count == 0) return {0, 0};
    std::vector<std::size_t> shortest(count, SIZE_MAX), longest(count, 0);
    shortest[0] = 0;
    // sets are sorted by size and covers always increase size, so index order is topological
    std::vector<std::vector<std::size_t>> up(count);
    for (auto [lo, hi] : lattice.hasse) up[lo].push_back(hi);
    for (std::size_t i = 0; i < count; ++i) {
        if (shortest[i] == SIZE_MAX) continue;
        for (auto j : up[i]) {
            shortest[j] = std::min(shortest[j], shortest[i] + 1);
            longest[j] = std::max(longest[j], longest[i] + 1);
        }
    }
    return {shortest[count - 1], longest[count - 1]};
}

/// Pure matrix form of the hereditary condition for the leading `size` block:
/// the top-right block is zero.
inline bool submatrix_is_hereditary(const ExactMatrix& m, std::size_t size) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "block predicates need a square matrix");
    if (size > m.rows()) throw Error(ErrorCode::InvalidSelector, "block size exceeds dimension");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = size; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

/// Pure matrix form of the saturated condition for the leading `size` block:
/// each bottom row whose B part is zero also has a zero A part.
inline bool submatrix_is_saturated(const ExactMatrix& m, std::size_t size) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "block predicates need a square matrix");
    if (size > m.rows()) throw Error(ErrorCode::InvalidSelector, "block size exceeds dimension");
    for (std::size_t i = size; i < m.rows(); ++i) {
        bool b_zero = true;
        bool a_zero = true;
        for (std::size_t j = size; j < m.cols(); ++j) b_zero = b_zero && m(i, j) == 0;
        for (std::size_t j = 0; j < size; ++j) a_zero = a_zero && m(i, j) == 0;
        if (b_zero && !a_zero) return false;
    }
    return true;
}

/// Adj(E) after moving H to the front, cut into
///     [ Adj(H)  C ]
///     [   A     B ]
struct BlockFormWitness {
    std::vector<std::size_t> permutation;
    std::size_t split = 0;
    ExactMatrix permuted;
    ExactMatrix adj_h;
    ExactMatrix c;
    ExactMatrix a;
    ExactMatrix b;
    bool hereditary_form = false;
    bool saturated_form = false;

    ExactMatrix reassemble() const {
        const auto n = permuted.rows();
        ExactMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i < split)
                    out(i, j) = j < split ? adj_h(i, j) : c(i, j - split);
                else
                    out(i, j) = j < split ? a(i - split, j) : b(i - split, j - split);
            }
        return out;
    }
};

/// Stable order: members of `h` first, then the rest, each in input order.
inline std::vector<std::size_t> front_permutation(const VertexSet& h, std::size_t n) {
    std::vector<std::size_t> perm = h.members();
    for (std::size_t v = 0; v < n; ++v)
        if (!h.contains(v)) perm.push_back(v);
    return perm;
}

inline BlockFormWitness block_form(const Graph& g, const VertexSet& h) {
    check_vertex_set(g, h);
    const auto n = g.vertex_count();
    BlockFormWitness w;
    w.permutation = front_permutation(h, n);
    w.split = h.size();
    w.permuted = permute(adjacency(g), w.permutation);
    w.adj_h = block(w.permuted, 0, w.split, 0, w.split);
    w.c = block(w.permuted, 0, w.split, w.split, n);
    w.a = block(w.permuted, w.split, n, 0, w.split);
    w.b = block(w.permuted, w.split, n, w.split, n);
    w.hereditary_form = submatrix_is_hereditary(w.permuted, w.split);
    w.saturated_form = submatrix_is_saturated(w.permuted, w.split);
    return w;
}

/// E/H for a hereditary saturated H. `checked = false` skips the check.
inline Graph quotient_graph(const Graph& g, const VertexSet& h, bool checked = true) {
    check_vertex_set(g, h);
    if (checked && !is_hereditary_saturated(g, h))
        throw Error(ErrorCode::NotHereditarySaturated, "quotient needs a hereditary saturated set");
    return quotient_graph(g, h, VertexSet::full(g.vertex_count()));
}

/// No hereditary saturated K with h_small < K < h_big.
inline bool quotient_is_simple(const Graph& g, const VertexSet& h_small, const VertexSet& h_big) {
    if (!is_hereditary_saturated(g, h_small))
        throw Error(ErrorCode::NotInLattice, "lower set is not hereditary saturated");
    if (!is_hereditary_saturated(g, h_big))
        throw Error(ErrorCode::NotInLattice, "upper set is not hereditary saturated");
    if (!h_small.is_subset_of(h_big))
        throw Error(ErrorCode::PreconditionViolation, "lower set must be contained in the upper set");
    if (h_small == h_big) return false;
    const auto gap = h_big.minus(h_small);
    for (auto v : gap.members())
        if (!(hereditary_saturated_closure(g, h_small.united(VertexSet(g.vertex_count(), {v}))) == h_big))
            return false;
    return true;
}

/// Maximal chain 0 = H_0 < H_1 < ... < H_len = E^0 of hereditary saturated
/// sets, together with the single vertex order realising the nested block form.
struct MatrixCompositionSeries {
    std::vector<VertexSet> chain;           // includes the empty set and E^0
    std::vector<std::size_t> permutation;   // H_1, then H_2 \ H_1, ...
    ExactMatrix permuted;
    std::vector<ExactMatrix> diagonal_blocks;  // B_k = Adj(H_k / H_{k-1})
    std::vector<ExactMatrix> below_blocks;     // A_k: rows of H_k \ H_{k-1}, columns of H_{k-1}

    /// Number of simple quotients, i.e. steps in the chain.
    std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
};

inline MatrixCompositionSeries composition_series(const Graph& g, std::size_t cap = kDefaultLatticeCap) {
    if (g.vertex_count() > cap)
        throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) +
                                             " vertices exceed the lattice cap of " + std::to_string(cap));
    const auto n = g.vertex_count();
    MatrixCompositionSeries series;
    series.chain.push_back(hereditary_saturated_closure(g, VertexSet::empty(n)));
    const auto top = VertexSet::full(n);
    while (!(series.chain.back() == top)) {
        auto covers = detail::covers_of(g, series.chain.back());
        series.chain.push_back(covers.front());
    }
    for (std::size_t k = 1; k < series.chain.size(); ++k) {
        const auto added = series.chain[k].minus(series.chain[k - 1]);
        series.permutation.insert(series.permutation.end(), added.members().begin(), added.members().end());
    }
    series.permuted = permute(adjacency(g), series.permutation);
    std::size_t lo = series.chain.front().size();
    for (std::size_t k = 1; k < series.chain.size(); ++k) {
        const auto hi = series.chain[k].size();
        series.diagonal_blocks.push_back(block(series.permuted, lo, hi, lo, hi));
        series.below_blocks.push_back(block(series.permuted, lo, hi, 0, lo));
        lo = hi;
    }
    return series;
}

}  // namespace lpa
