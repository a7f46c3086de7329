#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

inline constexpr std::size_t kDefaultMonomialCap = 2'000'000;

/// Row norms, column norms and total of A^s for s = 0..k. Row s = 0 follows
/// the vertex convention: every row and column norm is 1, the total is |E^0|.
struct NormTable {
    std::vector<Norms> powers;

    const Norms& at(std::size_t s) const { return powers.at(s); }
};

inline NormTable norm_table(const Graph& g, std::size_t k) {
    const auto n = g.vertex_count();
    const auto adj = adjacency(g);
    NormTable table;
    table.powers.push_back(Norms{std::vector<Integer>(n, 1), std::vector<Integer>(n, 1), Integer(n)});
    ExactMatrix p = ExactMatrix::identity(n);
    for (std::size_t s = 1; s <= k; ++s) {
        p = p * adj;
        table.powers.push_back(norms(p));
    }
    return table;
}

/// Number of degree-k monomials alpha beta^* in the double graph that survive
/// CK2 reduction:
///   p_0 = |E^0|,  p_1 = 2|E^1|, and for k > 1
///   p_k = 2||A^k|| + sum_{s+t=k, s,t>0} sum_j ||A^s||^c_j ||A^t||^c_j
///                  - sum_{s+t=k, s,t>0} sum_{j : ||A||^r_j = 1} ||A^{s-1}||^c_j ||A^{t-1}||^c_j
inline Integer p_k(const Graph& g, std::size_t k) {
    if (k == 0) return Integer(g.vertex_count());
    if (k == 1) return Integer(2 * g.edge_count());
    const auto table = norm_table(g, k);
    const auto n = g.vertex_count();
    const auto& first = table.at(1);
    Integer count = 2 * table.at(k).total;
    for (std::size_t s = 1; s < k; ++s) {
        const auto t = k - s;
        for (std::size_t j = 0; j < n; ++j) {
            count += table.at(s).col[j] * table.at(t).col[j];
            if (first.row[j] == 1) count -= table.at(s - 1).col[j] * table.at(t - 1).col[j];
        }
    }
    return count;
}

/// alpha beta^* with r(alpha) = r(beta) = anchor. Empty paths are allowed and
/// then sit at the anchor vertex.
struct Monomial {
    VertexIndex anchor = 0;
    std::vector<EdgeIndex> alpha;
    std::vector<EdgeIndex> beta;

    std::size_t degree() const { return alpha.size() + beta.size(); }

    /// The star involution (alpha beta^*)^* = beta alpha^*.
    Monomial star() const { return {anchor, beta, alpha}; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Reducible by CK2: alpha and beta both end in the same edge e and s(e)
/// emits only e, so e e^* collapses to s(e).
inline bool is_ck2_reducible(const Graph& g, const Monomial& m) {
    if (m.alpha.empty() || m.beta.empty()) return false;
    if (m.alpha.back() != m.beta.back()) return false;
    return g.out_degree(g.edge(m.alpha.back()).src) == 1;
}

namespace detail {

/// ending[j][s]: every path of length s with range j, as edge lists.
inline std::vector<std::vector<std::vector<std::vector<EdgeIndex>>>> paths_by_range(const Graph& g, std::size_t k) {
    const auto n = g.vertex_count();
    std::vector<std::vector<std::vector<std::vector<EdgeIndex>>>> ending(
        n, std::vector<std::vector<std::vector<EdgeIndex>>>(k + 1));
    for (VertexIndex v = 0; v < n; ++v) ending[v][0].push_back({});
    for (std::size_t s = 1; s <= k; ++s)
        for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
            const auto& edge = g.edge(e);
            for (const auto& prefix : ending[edge.src][s - 1]) {
                auto path = prefix;
                path.push_back(e);
                ending[edge.dst][s].push_back(std::move(path));
            }
        }
    for (auto& by_length : ending)
        for (auto& paths : by_length) std::sort(paths.begin(), paths.end());
    return ending;
}

/// Upper bound on the pair count used only to refuse oversized enumerations.
inline Integer monomial_pair_bound(const Graph& g, std::size_t k) {
    const auto table = norm_table(g, k);
    Integer bound = 0;
    for (std::size_t s = 0; s <= k; ++s)
        for (std::size_t j = 0; j < g.vertex_count(); ++j) {
            const Integer left = s == 0 ? Integer(1) : table.at(s).col[j];
            const Integer right = s == k ? Integer(1) : table.at(k - s).col[j];
            bound += left * right;
        }
    return bound;
}

}  // namespace detail

/// Brute-force list of the irreducible degree-k monomials, ordered by
/// |alpha|, anchor, alpha, beta.
inline std::vector<Monomial> enumerate_monomials(const Graph& g, std::size_t k,
                                                 std::size_t cap = kDefaultMonomialCap) {
    if (detail::monomial_pair_bound(g, k) > cap)
        throw Error(ErrorCode::TooLarge, "monomial enumeration exceeds the cap of " + std::to_string(cap));
    const auto ending = detail::paths_by_range(g, k);
    std::vector<Monomial> out;
    for (std::size_t s = 0; s <= k; ++s)
        for (VertexIndex j = 0; j < g.vertex_count(); ++j)
            for (const auto& alpha : ending[j][s])
                for (const auto& beta : ending[j][k - s]) {
                    Monomial m{j, alpha, beta};
                    if (!is_ck2_reducible(g, m)) out.push_back(std::move(m));
                }
    return out;
}

}  // namespace lpa
