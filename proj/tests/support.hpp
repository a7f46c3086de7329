#pragma once

// Fixtures and brute-force oracles shared by the test binaries. The oracles work
// straight from definitions on the adjacency matrix or the edge list and do not
// call the code paths they are used to check.

#include <cstdint>
#include <functional>
#include <optional>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace fixtures {

using lpa::ExactMatrix;
using lpa::Graph;

// 4 vertices: v1 sink, loop at v2, v3 -> v2, v4 -> v1, v2, v4.
inline Graph hereditary_example() {
    return lpa::graph_from_adjacency(ExactMatrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 1}});
}

inline Graph four_cycle() { return lpa::graph_from_adjacency(lpa::cyclic_shift(4)); }

inline Graph four_cycle_extended() {
    return lpa::graph_from_adjacency(ExactMatrix{{0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {2, 0, 1, 0}});
}

inline Graph census_example() { return lpa::graph_from_adjacency(ExactMatrix{{1, 1, 0}, {1, 0, 2}, {1, 1, 0}}); }

inline Graph path_example() { return lpa::graph_from_adjacency(ExactMatrix{{0, 2}, {0, 1}}); }

inline Graph single_loop() { return Graph::from_pairs(1, {{0, 0}}); }

inline Graph rose(std::size_t loops) {
    return Graph::from_pairs(1, std::vector<std::pair<lpa::VertexIndex, lpa::VertexIndex>>(loops, {0, 0}));
}

inline Graph chain(std::size_t n) {
    std::vector<std::pair<lpa::VertexIndex, lpa::VertexIndex>> pairs;
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::from_pairs(n, pairs);
}

inline Graph edgeless(std::size_t n) { return Graph::from_pairs(n, {}); }

}  // namespace fixtures

namespace oracle {

using lpa::ExactMatrix;
using lpa::Graph;
using lpa::Integer;
using lpa::VertexIndex;
using Rational = boost::multiprecision::cpp_rational;

inline std::size_t rational_rank(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline ExactMatrix naive_product(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

/// Number of paths of length len from v to w, by walking the edge list.
inline Integer count_paths(const Graph& g, VertexIndex v, VertexIndex w, std::size_t len) {
    if (len == 0) return v == w ? 1 : 0;
    Integer total = 0;
    for (const auto& e : g.edges())
        if (e.src == v) total += count_paths(g, e.dst, w, len - 1);
    return total;
}

inline bool hereditary(const ExactMatrix& adj, std::uint64_t mask) {
    for (std::size_t i = 0; i < adj.rows(); ++i)
        if (mask >> i & 1)
            for (std::size_t j = 0; j < adj.cols(); ++j)
                if (adj(i, j) != 0 && !(mask >> j & 1)) return false;
    return true;
}

inline bool saturated(const ExactMatrix& adj, std::uint64_t mask) {
    for (std::size_t i = 0; i < adj.rows(); ++i) {
        if (mask >> i & 1) continue;
        bool has_out = false, all_inside = true;
        for (std::size_t j = 0; j < adj.cols(); ++j)
            if (adj(i, j) != 0) {
                has_out = true;
                if (!(mask >> j & 1)) all_inside = false;
            }
        if (has_out && all_inside) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> hs_masks(const ExactMatrix& adj) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << adj.rows()); ++mask)
        if (hereditary(adj, mask) && saturated(adj, mask)) out.push_back(mask);
    return out;
}

/// Least hereditary saturated superset, as the intersection of all of them.
inline std::uint64_t closure_mask(const ExactMatrix& adj, std::uint64_t seed) {
    std::uint64_t result = (std::uint64_t{1} << adj.rows()) - 1;
    for (auto m : hs_masks(adj))
        if ((m & seed) == seed) result &= m;
    return result;
}

/// Simple cycles counted as closed edge sequences with distinct sources,
/// taken from each vertex and divided by the rotations.
inline std::size_t count_cycles(const Graph& g) {
    std::size_t total = 0;
    std::vector<std::size_t> per_length(g.vertex_count() + 1, 0);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> used(g.vertex_count(), 0);
        used[v] = 1;
        // A closed sequence of length L is found once from each of its L vertices.
        std::function<void(VertexIndex, std::size_t)> walk = [&](VertexIndex at, std::size_t len) {
            for (const auto& e : g.edges()) {
                if (e.src != at) continue;
                if (e.dst == v)
                    ++per_length[len + 1];
                else if (!used[e.dst]) {
                    used[e.dst] = 1;
                    walk(e.dst, len + 1);
                    used[e.dst] = 0;
                }
            }
        };
        walk(v, 0);
    }
    for (std::size_t len = 1; len < per_length.size(); ++len) total += per_length[len] / len;
    return total;
}

inline std::size_t cycle_length_gcd(const Graph& g) {
    std::size_t d = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> used(g.vertex_count(), 0);
        used[v] = 1;
        std::function<void(VertexIndex, std::size_t)> walk = [&](VertexIndex at, std::size_t len) {
            for (const auto& e : g.edges()) {
                if (e.src != at) continue;
                if (e.dst == v)
                    d = std::gcd(d, len + 1);
                else if (!used[e.dst]) {
                    used[e.dst] = 1;
                    walk(e.dst, len + 1);
                    used[e.dst] = 0;
                }
            }
        };
        walk(v, 0);
    }
    return d;
}

/// First k <= limit with Adj^k entrywise positive, by exact powers.
inline std::optional<std::size_t> first_positive_power(const ExactMatrix& adj, std::size_t limit) {
    if (adj.rows() == 0) return std::nullopt;
    ExactMatrix p = adj;
    for (std::size_t k = 1; k <= limit; ++k) {
        bool positive = true;
        for (const auto& x : p.entries()) positive = positive && x > 0;
        if (positive) return k;
        p = naive_product(p, adj);
    }
    return std::nullopt;
}

}  // namespace oracle
